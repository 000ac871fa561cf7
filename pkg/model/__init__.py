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

from .errors import KuklesError
from .errors import DegenerateQ
from .errors import OnSection
from .params import ALPHA0, ALPHA2, BETA, GAMMA, PARAM_IDS
from .params import CanonicalParams
from .params import KuklesParams
from .params import PRESETS
from .params import QCase
from .params import State
from .params import canonical_scale
from .params import from_canonical
from .params import preset
from .params import reverse_time
from .params import to_canonical
from .field import FirstIntegral
from .field import eval_field
from .field import eval_kukles
from .field import field_xy
from .field import first_integral
from .field import is_reversible
from .field import jacobian
from .field import param_derivative_xy
from .field import q_oddness_defect
from .field import q_symmetry_defect
from .field import reversibility_defect
from .field import rotation_determinant
from .field import trace_at
from .field import trace_coefficient
from .singularities import Singularity
from .singularities import anti_saddles
from .singularities import classify
from .singularities import finite_singularities
from .singularities import infinite_directions
from .singularities import infinite_singularities
from .singularities import kukles_infinite_directions
from .singularities import saddles
