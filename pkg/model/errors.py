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

"""Domain errors shared by all packages."""


class KuklesError(Exception):
    """Base class of every domain error; the CLI maps it to exit code 1."""


class DegenerateQ(KuklesError, ValueError):
    """Root structure of q(x) matches none of the canonical cases."""


class OnSection(KuklesError, ValueError):
    """Sample lies on the x-axis where F = Q/P is undefined."""


class StepFailure(KuklesError, RuntimeError):
    """Step size controller collapsed."""


class NoReturn(KuklesError, RuntimeError):
    """Orbit left the section's basin before returning."""


class Timeout(KuklesError, RuntimeError):
    """No return before T_max."""


class NewtonDiverged(KuklesError, ArithmeticError):
    pass


class Degenerate(KuklesError, ArithmeticError):
    """Return-map derivative within mult_tol of one."""


class NotAFocus(KuklesError, ValueError):
    pass


class Insensitive(KuklesError, ValueError):
    """Trace does not depend on the free parameter."""


class StepCollapse(KuklesError, ArithmeticError):
    pass


class NotASaddle(KuklesError, ValueError):
    pass


class BranchEscaped(KuklesError, RuntimeError):
    """Separatrix branch did not reach the transversal."""


class NoBracket(KuklesError, ValueError):
    pass


class StageFailed(KuklesError, RuntimeError):
    """Scenario stage could not establish its critical value."""

    def __init__(self, stage, reason):
        super(StageFailed, self).__init__(
            'stage {} failed: {}'.format(stage, reason))
        self.stage = stage
        self.reason = reason
