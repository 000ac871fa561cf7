# coding=utf-8
# Copyright (c) 2026, The Kukles Toolkit Authors.  All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from .grid import GridSpec
from .grid import grids_from_dict
from .census import FORMAT_VERSION
from .census import DistributionRecord
from .census import census
from .census import census_header
from .census import census_jsonl
from .census import census_summary
from .census import classify_point
from .scenario import FORWARD, REVERSE
from .scenario import FORWARD_STAGES, REVERSE_STAGES
from .scenario import ScenarioConfig
from .scenario import ScenarioReport
from .scenario import StageResult
from .scenario import ThreeOneSearch
from .scenario import run_scenario
from .scenario import search_three_one
from .portrait import Portrait
from .portrait import PortraitConfig
from .portrait import Window
from .portrait import portrait
from .portrait import portrait_csv
from .portrait import portrait_dict
from .portrait import portrait_frame
from .portrait import portrait_json
