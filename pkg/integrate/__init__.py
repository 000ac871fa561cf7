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

from .solver import COMPLETED, ESCAPED, EQUILIBRIUM, STEP_FAILURE
from .solver import Event
from .solver import EventRecord
from .solver import IntegratorConfig
from .solver import Trajectory
from .solver import escape_event
from .solver import integrate
from .solver import integrate_with_variational
from .solver import line_event
from .export import events_frame
from .export import trajectory_csv
from .export import trajectory_frame
from .export import trajectory_jsonl
