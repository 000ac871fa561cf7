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

from .section import CycleConfig
from .section import Section
from .limit_cycle import STABLE, UNSTABLE, SEMI_STABLE
from .limit_cycle import LimitCycle
from .limit_cycle import stability_of
from .limit_cycle import winding_number
from .return_map import Return
from .return_map import crossing_sense
from .return_map import displacement
from .return_map import first_return
from .return_map import return_map
from .search import big_cycles
from .search import count_around
from .search import count_cycles
from .search import cycle_at
from .search import detect_big_cycle
from .search import find_cycle
from .search import nontrivial_multiplier
from .search import stability_breaks
