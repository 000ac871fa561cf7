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

"""Homoclinic gaps of the saddle and the eight-loop search."""

import dataclasses
import logging
from typing import Dict

from scipy.optimize import brentq

from integrate import Event, IntegratorConfig, integrate
from model import ALPHA2
from model.errors import BranchEscaped, NoBracket, NotASaddle
from model.singularities import anti_saddles, saddles

from .separatrix import branch_start, saddle_directions

logger = logging.getLogger(__name__)

LEFT = 'LeftLoop'
RIGHT = 'RightLoop'
SIDES = (LEFT, RIGHT)

VERTICAL = 'vertical'
AXIS = 'axis'
TRANSVERSALS = (VERTICAL, AXIS)

CUT = 'cut'


@dataclasses.dataclass(frozen=True)
class HomoclinicConfig(object):
    eps: float = 1e-7
    t_max: float = 200.0
    transversal: str = VERTICAL
    # |gap| below gap_tol at a bracket end counts as a root
    gap_tol: float = 1e-8
    xtol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if self.transversal not in TRANSVERSALS:
            raise ValueError('transversal must be one of {}, got {}'.format(
                TRANSVERSALS, self.transversal))

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, json_object):
        fields = {f.name: f.type for f in dataclasses.fields(cls)}
        unknown = set(json_object) - set(fields)
        if unknown:
            raise ValueError('unknown homoclinic keys: {}'.format(
                sorted(unknown)))
        values = {}
        for key, value in json_object.items():
            if fields[key] in (str, 'str'):
                values[key] = str(value)
            elif fields[key] in (int, 'int'):
                values[key] = int(value)
            else:
                values[key] = float(value)
        return cls(**values)


def loop_geometry(p, side):
    """(saddle location, enclosed anti-saddle location) of one loop."""
    if side not in SIDES:
        raise ValueError('side must be one of {}, got {}'.format(SIDES, side))
    foci = [s.location for s in anti_saddles(p)]
    for saddle in saddles(p):
        x_s = saddle.location.x
        left = [f for f in foci if f.x < x_s]
        right = [f for f in foci if f.x > x_s]
        if left and right:
            if side == LEFT:
                return saddle.location, max(left, key=lambda f: f.x)
            return saddle.location, min(right, key=lambda f: f.x)
    raise NotASaddle('no saddle between two anti-saddles for q case '
                     '{}'.format(p.q_case.to_dict()))


def _crossing(p, start, backward, event, cfg, t_max, label):
    trajectory = integrate(p, start, cfg, events=[event], t_max=t_max,
                           backward=backward)
    hit = trajectory.first_event(CUT)
    if hit is None:
        raise BranchEscaped('branch {} ended with status {} before the '
                            'transversal'.format(label, trajectory.status))
    return hit.state


def homoclinic_gap(p, side, cfg=None, hcfg=None, transversal=None):
    """Signed split of the separatrix loop around one anti-saddle.

    Measured where the unstable and the stable branch first meet the
    transversal; positive when the unstable branch passes outside the
    stable one, zero at a homoclinic loop.
    """
    cfg = cfg or IntegratorConfig()
    hcfg = hcfg or HomoclinicConfig()
    transversal = transversal or hcfg.transversal
    location, focus = loop_geometry(p, side)
    unstable, stable = saddle_directions(p, location)
    sign = -1.0 if side == LEFT else 1.0
    u_start = branch_start(location, unstable, sign, hcfg.eps)
    s_start = branch_start(location, stable, sign, hcfg.eps)

    if transversal == VERTICAL:
        x_cut = 0.5 * (location.x + focus.x)
        g = lambda t, y: y[0] - x_cut
        if side == LEFT:
            upper = lambda y: y[1] > 0.0
            u_event = Event(CUT, g, direction=1, terminal=True, accept=upper)
            s_event = Event(CUT, g, direction=-1, terminal=True, accept=upper)
        else:
            lower = lambda y: y[1] < 0.0
            u_event = Event(CUT, g, direction=-1, terminal=True, accept=lower)
            s_event = Event(CUT, g, direction=1, terminal=True, accept=lower)
    elif transversal == AXIS:
        g = lambda t, y: y[1]
        if side == LEFT:
            beyond = lambda y: y[0] < focus.x
            u_event = Event(CUT, g, direction=1, terminal=True, accept=beyond)
            s_event = Event(CUT, g, direction=-1, terminal=True, accept=beyond)
        else:
            beyond = lambda y: y[0] > focus.x
            u_event = Event(CUT, g, direction=-1, terminal=True, accept=beyond)
            s_event = Event(CUT, g, direction=1, terminal=True, accept=beyond)
    else:
        raise ValueError('transversal must be one of {}, got {}'.format(
            TRANSVERSALS, transversal))

    u_hit = _crossing(p, u_start, False, u_event, cfg, hcfg.t_max,
                      'u-' if side == LEFT else 'u+')
    s_hit = _crossing(p, s_start, True, s_event, cfg, hcfg.t_max,
                      's-' if side == LEFT else 's+')
    if transversal == VERTICAL:
        gap = u_hit.y - s_hit.y if side == LEFT else s_hit.y - u_hit.y
    else:
        gap = s_hit.x - u_hit.x if side == LEFT else u_hit.x - s_hit.x
    return float(gap)


@dataclasses.dataclass
class EightLoop(object):
    """One-sided homoclinic values of the free parameter."""
    left: float
    right: float
    residuals: Dict[str, float]
    transversals: Dict[str, str]
    param: str = ALPHA2

    @property
    def difference(self):
        return self.right - self.left

    def is_eight_loop(self, tol=1e-6):
        return abs(self.difference) < tol

    def as_tuple(self):
        return self.left, self.right

    def to_dict(self):
        return {'param': self.param,
                'left': self.left,
                'right': self.right,
                'difference': self.difference,
                'residuals': dict(self.residuals),
                'transversals': dict(self.transversals)}


def _side_root(p_base, side, bracket, param, cfg, hcfg, transversal):
    gap = lambda value: homoclinic_gap(p_base.with_param(param, value), side,
                                       cfg, hcfg, transversal)
    lo, hi = bracket
    g_lo, g_hi = gap(lo), gap(hi)
    logger.info('{} gap on {}: {} at {}, {} at {}'.format(
        side, transversal, g_lo, lo, g_hi, hi))
    if abs(g_hi) < hcfg.gap_tol:
        return hi, g_hi
    if abs(g_lo) < hcfg.gap_tol:
        return lo, g_lo
    if (g_lo > 0) == (g_hi > 0):
        raise NoBracket('{} gap has the same sign at {} = {} and {} ({}, '
                        '{})'.format(side, param, lo, hi, g_lo, g_hi))
    root = brentq(gap, lo, hi, xtol=hcfg.xtol, rtol=4 * 2.3e-16,
                  maxiter=hcfg.max_iter)
    return root, gap(root)


def eight_loop_find(p_base, bracket=(-0.5, 0.0), cfg=None, hcfg=None,
                    param=ALPHA2):
    """Locates the left and right homoclinic values of `param` in `bracket`.

    A side whose branches cannot reach the vertical cut is solved again on
    the axis transversal.
    """
    hcfg = hcfg or HomoclinicConfig()
    roots, residuals, used = {}, {}, {}
    for side in SIDES:
        transversal = hcfg.transversal
        try:
            root, residual = _side_root(p_base, side, bracket, param, cfg,
                                        hcfg, transversal)
        except BranchEscaped as e:
            if transversal == AXIS:
                raise
            logger.warning('{} on the vertical cut failed ({}), retrying on '
                           'the axis'.format(side, e))
            transversal = AXIS
            root, residual = _side_root(p_base, side, bracket, param, cfg,
                                        hcfg, transversal)
        if abs(residual) > hcfg.gap_tol:
            logger.warning('{} residual gap {} above {}'.format(
                side, residual, hcfg.gap_tol))
        roots[side], residuals[side], used[side] = root, residual, transversal
    return EightLoop(left=roots[LEFT], right=roots[RIGHT],
                     residuals=residuals, transversals=used, param=param)
