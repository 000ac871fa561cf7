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

from .hopf import SUPERCRITICAL, SUBCRITICAL
from .hopf import FoldContract
from .hopf import HopfReport
from .hopf import focus_location
from .hopf import fold_contract
from .hopf import hopf_value
from .continuation import ContinuationBranch
from .continuation import FoldPoint
from .continuation import StepConfig
from .continuation import continue_cycle
from .separatrix import BRANCHES
from .separatrix import SeparatrixSet
from .separatrix import saddle_directions
from .separatrix import separatrices
from .homoclinic import LEFT, RIGHT, SIDES
from .homoclinic import VERTICAL, AXIS
from .homoclinic import EightLoop
from .homoclinic import HomoclinicConfig
from .homoclinic import eight_loop_find
from .homoclinic import homoclinic_gap
from .homoclinic import loop_geometry
from .export import branch_csv
from .export import branch_frame
from .export import branch_summary
from .export import separatrix_csv
from .export import separatrix_frame
