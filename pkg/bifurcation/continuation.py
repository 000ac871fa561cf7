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

"""Pseudo-arclength continuation of limit cycles in one rotation parameter.

Unknowns are (lambda, r) with G(lambda, r) = P(r; lambda) - r on a fixed
ray. G_r comes from the variational equations and G_lambda from the
parameter sensitivity, so the corrector is a 2 x 2 Newton solve.
"""

import dataclasses
import logging
import math
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from cycles import CycleConfig, LimitCycle, Section
from cycles import cycle_at, first_return
from model import PARAM_IDS
from model.errors import NoReturn, StepCollapse, Timeout

logger = logging.getLogger(__name__)

RANGE_END = 'range'
HOPF_END = 'hopf'
HOMOCLINIC_END = 'homoclinic'
ESCAPE_END = 'escape'
MAX_POINTS = 'max_points'


@dataclasses.dataclass(frozen=True)
class StepConfig(object):
    """Arclength step controller of the continuation."""
    ds: float = 1e-3
    ds_max: float = 1e-1
    # halving below `collapse` ends the branch or raises StepCollapse
    collapse: float = 1e-10
    amp_min: float = 1e-4
    max_points: int = 2000
    easy_iterations: int = 3
    easy_streak: int = 3
    max_corrector: int = 8
    # residual |P(r) - r| accepted by the corrector
    corrector_tol: float = 1e-9
    fold_tol: float = 1e-6
    fold_bisections: int = 60

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, json_object):
        fields = {f.name: f.type for f in dataclasses.fields(cls)}
        unknown = set(json_object) - set(fields)
        if unknown:
            raise ValueError('unknown continuation keys: {}'.format(
                sorted(unknown)))
        values = {}
        for key, value in json_object.items():
            values[key] = int(value) if fields[key] in (int, 'int') \
                else float(value)
        return cls(**values)


class FoldPoint(NamedTuple):
    param_value: float
    section_coord: float
    multiplier: float


@dataclasses.dataclass
class ContinuationBranch(object):
    param_id: str
    points: List[Tuple[float, LimitCycle]]
    folds: List[FoldPoint]
    termination: Optional[str] = None

    def __len__(self):
        return len(self.points)

    @property
    def params(self):
        return np.array([value for value, _ in self.points])

    @property
    def coords(self):
        return np.array([c.section_coord for _, c in self.points])


class _Point(NamedTuple):
    u: np.ndarray
    tangent: np.ndarray
    g_r: float
    g_lambda: float


def _residual(p, sec, param_id, u, cfg, cycle_cfg):
    """(G, G_lambda, G_r) at u = (lambda, r)."""
    shifted = p.with_param(param_id, u[0])
    result = first_return(shifted, sec, u[1], cfg, cycle_cfg,
                          variational=True, sensitivity=param_id)
    return (result.r - u[1], result.param_derivative,
            result.derivative - 1.0)


def _tangent(g_lambda, g_r, previous=None):
    t = np.array([g_r, -g_lambda])
    norm = np.linalg.norm(t)
    assert norm > 0, 'singular continuation point, G_r = G_lambda = 0'
    t /= norm
    if previous is not None and t.dot(previous) < 0:
        t = -t
    return t


def _correct(p, sec, param_id, predicted, tangent, step_cfg, cfg, cycle_cfg):
    """Newton on {G = 0, t.(u - u_pred) = 0}; returns (u, G_l, G_r, iters)."""
    u = predicted.copy()
    for iteration in range(step_cfg.max_corrector + 1):
        g, g_lambda, g_r = _residual(p, sec, param_id, u, cfg, cycle_cfg)
        arc = tangent.dot(u - predicted)
        if abs(g) < step_cfg.corrector_tol and \
                abs(arc) < step_cfg.corrector_tol:
            return u, g_lambda, g_r, iteration
        system = np.array([[g_lambda, g_r], [tangent[0], tangent[1]]])
        u = u + np.linalg.solve(system, -np.array([g, arc]))
        if not 0 < u[1] <= sec.limit:
            raise NoReturn('corrector left the ray at r = {}'.format(u[1]))
    raise ArithmeticError('corrector did not converge in {} '
                          'iterations'.format(step_cfg.max_corrector))


def _step(p, sec, param_id, point, ds, step_cfg, cfg, cycle_cfg):
    predicted = point.u + ds * point.tangent
    u, g_lambda, g_r, iterations = _correct(p, sec, param_id, predicted,
                                            point.tangent, step_cfg, cfg,
                                            cycle_cfg)
    tangent = _tangent(g_lambda, g_r, point.tangent)
    return _Point(u, tangent, g_r, g_lambda), iterations


def _refine_fold(p, sec, param_id, point, ds, step_cfg, cfg, cycle_cfg):
    """Bisects the arclength step on the sign of the tangent's lambda part."""
    lo, hi = 0.0, ds
    best = point
    sign = math.copysign(1.0, point.tangent[0])
    for _ in range(step_cfg.fold_bisections):
        mid = 0.5 * (lo + hi)
        trial, _ = _step(p, sec, param_id, point, mid, step_cfg, cfg,
                         cycle_cfg)
        best = trial
        if abs(trial.g_r) < step_cfg.fold_tol:
            break
        if math.copysign(1.0, trial.tangent[0]) == sign:
            lo = mid
        else:
            hi = mid
    return FoldPoint(float(best.u[0]), float(best.u[1]),
                     float(best.g_r + 1.0))


def continue_cycle(p0, cycle0, free_param, param_range, step_cfg=None,
                   cfg=None, cycle_cfg=None, which='O', sec=None,
                   direction=1):
    """Follows cycle0 of p0 while free_param stays within param_range.

    The branch ends at the range end, at a Hopf endpoint (amplitude below
    amp_min), at a homoclinic endpoint (return time beyond T_max) or when
    the orbit leaves the ray.

    Args:
        direction: +1 or -1, initial sign of the parameter increment.
        which: anti-saddle O or A whose default ray cycle0 crosses.
        sec: explicit ray overriding `which`.
    """
    if free_param not in PARAM_IDS:
        raise ValueError('free parameter must be one of {}, got {}'.format(
            PARAM_IDS, free_param))
    step_cfg = step_cfg or StepConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    lo, hi = sorted(param_range)
    value = p0.get(free_param)
    if not lo <= value <= hi:
        raise ValueError('{} = {} lies outside the range [{}, {}]'.format(
            free_param, value, lo, hi))
    sec = sec or Section.for_focus(p0, which)

    u = np.array([value, cycle0.section_coord])
    _, g_lambda, g_r = _residual(p0, sec, free_param, u, cfg, cycle_cfg)
    tangent = _tangent(g_lambda, g_r)
    if tangent[0] * direction < 0 or (tangent[0] == 0 and direction < 0):
        tangent = -tangent
    point = _Point(u, tangent, g_r, g_lambda)
    branch = ContinuationBranch(param_id=free_param, points=[(value, cycle0)],
                                folds=[])
    ds = step_cfg.ds
    easy = 0

    while branch.termination is None:
        if len(branch.points) >= step_cfg.max_points:
            branch.termination = MAX_POINTS
            break
        r_next = point.u[1] + ds * point.tangent[1]
        if r_next < step_cfg.amp_min:
            if point.u[1] < 2 * step_cfg.amp_min:
                branch.termination = HOPF_END
                break
            # land halfway to the anchor instead of stepping past it
            ds = 0.5 * point.u[1] / abs(point.tangent[1])
        try:
            candidate, iterations = _step(p0, sec, free_param, point, ds,
                                          step_cfg, cfg, cycle_cfg)
        except (NoReturn, Timeout, ArithmeticError, np.linalg.LinAlgError) \
                as e:
            ds *= 0.5
            easy = 0
            if ds < step_cfg.collapse:
                if isinstance(e, Timeout):
                    branch.termination = HOMOCLINIC_END
                elif isinstance(e, NoReturn):
                    branch.termination = ESCAPE_END
                else:
                    raise StepCollapse('arclength step {} at {} = {}, r = {}: '
                                       '{}'.format(ds, free_param, point.u[0],
                                                   point.u[1], e))
            continue

        if not lo <= candidate.u[0] <= hi:
            branch.termination = RANGE_END
            break
        if candidate.u[1] < step_cfg.amp_min:
            branch.termination = HOPF_END
            break

        fold = None
        if candidate.tangent[0] * point.tangent[0] < 0:
            try:
                fold = _refine_fold(p0, sec, free_param, point, ds,
                                    step_cfg, cfg, cycle_cfg)
            except (NoReturn, Timeout, ArithmeticError,
                    np.linalg.LinAlgError) as e:
                logger.warning('fold refinement failed ({}), keeping the '
                               'bracketing step'.format(e))
                fold = FoldPoint(float(candidate.u[0]), float(candidate.u[1]),
                                 float(candidate.g_r + 1.0))

        shifted = p0.with_param(free_param, candidate.u[0])
        try:
            cycle = cycle_at(shifted, sec, candidate.u[1], cfg, cycle_cfg)
        except (NoReturn, Timeout) as e:
            logger.warning('cycle record at {} failed: {}'.format(
                candidate.u, e))
            ds *= 0.5
            if ds < step_cfg.collapse:
                raise StepCollapse('arclength step {} while recording '
                                   'the cycle at {}'.format(ds, candidate.u))
            continue
        if cycle.amplitude < step_cfg.amp_min:
            branch.termination = HOPF_END
        if fold is not None:
            logger.info('fold at {} = {}, r = {}, multiplier {}'.format(
                free_param, fold.param_value, fold.section_coord,
                fold.multiplier))
            branch.folds.append(fold)
        branch.points.append((float(candidate.u[0]), cycle))
        point = candidate

        easy = easy + 1 if iterations <= step_cfg.easy_iterations else 0
        if easy >= step_cfg.easy_streak:
            ds = min(2.0 * ds, step_cfg.ds_max)
            easy = 0
    logger.info('branch in {} ended ({}) after {} points, {} folds'.format(
        free_param, branch.termination, len(branch.points),
        len(branch.folds)))
    return branch
