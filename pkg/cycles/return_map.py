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

"""First-return map to a transversal ray"""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np

from integrate import ESCAPED, EQUILIBRIUM
from integrate import Event
from integrate import IntegratorConfig
from integrate import Trajectory
from integrate import integrate
from integrate import integrate_with_variational
from model.errors import NoReturn, StepFailure, Timeout
from model.field import field_xy

from .section import CycleConfig

logger = logging.getLogger(__name__)

SECTION = 'section'


class Return(NamedTuple):
    r: float
    period: float
    trajectory: Trajectory
    derivative: Optional[float] = None
    monodromy: Optional[np.ndarray] = None
    param_derivative: Optional[float] = None


def _section_event(sec, crossing):
    ax, ay = sec.anchor
    nx, ny = sec.normal
    ex, ey = sec.direction
    accept = None
    if sec.half_line:
        accept = lambda y: (y[0] - ax) * ex + (y[1] - ay) * ey > 0.0
    return Event(SECTION, lambda t, y: nx * (y[0] - ax) + ny * (y[1] - ay),
                 direction=crossing, terminal=True, accept=accept)


def crossing_sense(p, sec, r):
    """+1 or -1: the side of the ray the flow leaves toward at sec.point(r)."""
    s0 = sec.point(r)
    big_p, big_q = field_xy(p, s0.x, s0.y)
    nx, ny = sec.normal
    flux = nx * big_p + ny * big_q
    if abs(flux) < 1e-14 * max(1.0, math.hypot(big_p, big_q)):
        raise NoReturn('field tangent to the section at r = {}'.format(r))
    return 1 if flux > 0 else -1


def first_return(p, sec, r, cfg=None, cycle_cfg=None, variational=False,
                 sensitivity=None, dense=False):
    """Integrates from sec.point(r) to the next crossing in the same sense.

    With `variational` the return-map derivative is
    P'(r) = e.(M e) - (e.F)(n.(M e)) / (n.F), F the field at the return
    point, which equals the nontrivial multiplier at a fixed point.
    """
    cfg = cfg or IntegratorConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    if not r > 0:
        raise ValueError('section coordinate must be positive, got {}'.format(
            r))
    event = _section_event(sec, crossing_sense(p, sec, r))
    s0 = sec.point(r)
    try:
        if variational or sensitivity is not None:
            trajectory, _ = integrate_with_variational(
                p, s0, cfg, T=cycle_cfg.t_max, events=[event],
                sensitivity=sensitivity, dense=dense)
        else:
            trajectory = integrate(p, s0, cfg, events=[event],
                                   t_max=cycle_cfg.t_max, dense=dense)
    except StepFailure as e:
        raise NoReturn('integration failed from r = {}: {}'.format(r, e))

    hit = trajectory.first_event(SECTION)
    if hit is None:
        if trajectory.status in (ESCAPED, EQUILIBRIUM):
            raise NoReturn('orbit from r = {} ended with status {}'.format(
                r, trajectory.status))
        raise Timeout('no return from r = {} before T_max = {}'.format(
            r, cycle_cfg.t_max))
    r_new = sec.coordinate(hit.state)
    if r_new > sec.limit:
        raise NoReturn('orbit from r = {} returned at {} beyond the ray '
                       'limit {}'.format(r, r_new, sec.limit))
    if not (variational or sensitivity is not None):
        return Return(r_new, hit.t, trajectory)

    ex, ey = sec.direction
    nx, ny = sec.normal
    big_p, big_q = field_xy(p, hit.state.x, hit.state.y)
    e_f = ex * big_p + ey * big_q
    n_f = nx * big_p + ny * big_q
    monodromy = np.array(hit.full[2:6]).reshape(2, 2)
    me = monodromy.dot([ex, ey])
    derivative = ex * me[0] + ey * me[1] - e_f * (nx * me[0] + ny * me[1]) / n_f
    param_derivative = None
    if sensitivity is not None:
        z = hit.full[7:9]
        param_derivative = (ex * z[0] + ey * z[1]
                            - e_f * (nx * z[0] + ny * z[1]) / n_f)
    trajectory.trace_integral = float(hit.full[6])
    return Return(r_new, hit.t, trajectory, float(derivative), monodromy,
                  param_derivative)


def return_map(p, sec, r, cfg=None, cycle_cfg=None):
    """(r', T): first return coordinate and elapsed time."""
    result = first_return(p, sec, r, cfg, cycle_cfg)
    return result.r, result.period


def displacement(p, sec, r, cfg=None, cycle_cfg=None):
    return first_return(p, sec, r, cfg, cycle_cfg).r - r
