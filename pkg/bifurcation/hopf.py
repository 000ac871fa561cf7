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

"""Andronov-Hopf values of the anti-saddles and fold checks."""

import dataclasses
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from cycles import CycleConfig, LimitCycle, Section
from cycles import count_cycles, displacement
from model import PARAM_IDS, State
from model.errors import Insensitive, KuklesError, NotAFocus
from model.field import jacobian, trace_at, trace_coefficient

logger = logging.getLogger(__name__)

SUPERCRITICAL = 'BornSupercritical-like'
SUBCRITICAL = 'BornSubcritical-like'

# Radius (fraction of the ray length) of the curvature probe.
PROBE_FRACTION = 0.05


@dataclasses.dataclass(frozen=True)
class HopfReport(object):
    singularity: State
    trace_expr_value: float
    critical_param_value: float
    free_param: str
    side: Optional[str]
    # Sign of the parameter offset on which the small cycle exists.
    birth_direction: int
    eigenvalues: Tuple[complex, complex]

    @property
    def frequency(self):
        return abs(self.eigenvalues[0].imag)

    def to_dict(self):
        return {'singularity': [self.singularity.x, self.singularity.y],
                'trace': self.trace_expr_value,
                'free_param': self.free_param,
                'critical_value': self.critical_param_value,
                'side': self.side,
                'birth_direction': self.birth_direction,
                'eigenvalues': [[z.real, z.imag] for z in self.eigenvalues]}


def focus_location(p, which):
    """Location of the anti-saddle O (origin) or A (the other one)."""
    return Section.for_focus(p, which).anchor


def hopf_value(p, which='O', free_param='beta', cfg=None, cycle_cfg=None):
    """Solves trace(J) = 0 at the chosen anti-saddle for free_param.

    The trace is affine in every rotation parameter, so the root is exact.
    The side is read from the sign of the return-map displacement at a
    small radius on the critical system.
    """
    if free_param not in PARAM_IDS:
        raise ValueError('free parameter must be one of {}, got {}'.format(
            PARAM_IDS, free_param))
    location = focus_location(p, which)
    det = -p.q_case.dq(location.x)
    if det <= 0:
        raise NotAFocus('singular point {} has det J = {} <= 0'.format(
            location, det))
    slope = trace_coefficient(free_param, location.x)
    if abs(slope) < 1e-15:
        raise Insensitive('trace at {} does not depend on {}'.format(
            location, free_param))
    value = p.get(free_param) - trace_at(p, location.x) / slope
    critical = p.with_param(free_param, value)
    trace = trace_at(critical, location.x)
    eigenvalues = tuple(complex(z) for z in sorted(
        np.linalg.eigvals(jacobian(critical, location)),
        key=lambda z: z.imag))
    assert abs(trace) < 1e-12, 'trace {} left at the critical value'.format(
        trace)

    sec = Section.for_focus(critical, which)
    span = sec.limit if math.isfinite(sec.limit) else 1.0
    side = None
    birth = 0
    try:
        probe = displacement(critical, sec, PROBE_FRACTION * span, cfg,
                             cycle_cfg)
    except KuklesError as e:
        logger.warning('Hopf side probe failed: {}'.format(e))
        probe = 0.0
    tol = (cycle_cfg or CycleConfig()).disp_tol
    if probe < -tol:
        # weakly stable focus: the stable cycle lives where trace > 0
        side = SUPERCRITICAL
        birth = 1 if slope > 0 else -1
    elif probe > tol:
        side = SUBCRITICAL
        birth = -1 if slope > 0 else 1
    else:
        logger.warning('return map flat at the weak focus {}, side '
                       'undetermined'.format(location))
    return HopfReport(singularity=location, trace_expr_value=trace,
                      critical_param_value=value, free_param=free_param,
                      side=side, birth_direction=birth,
                      eigenvalues=eigenvalues)


@dataclasses.dataclass
class FoldContract(object):
    """Cycles near a fold radius on both sides of the fold value."""
    param_value: float
    offset: float
    below: List[LimitCycle]
    above: List[LimitCycle]

    @property
    def holds(self):
        pair, empty = sorted([self.below, self.above], key=len, reverse=True)
        return (len(pair) == 2 and len(empty) == 0 and
                pair[0].stability != pair[1].stability)

    def to_dict(self):
        return {'param_value': self.param_value,
                'offset': self.offset,
                'below': [c.to_dict() for c in self.below],
                'above': [c.to_dict() for c in self.above],
                'holds': self.holds}


def fold_contract(p, fold_value, fold_r, free_param, which='O',
                  offset=1e-3, window=0.5, n_seeds=49, cfg=None,
                  cycle_cfg=None):
    """Counts cycles in r in [(1-window) r_f, (1+window) r_f] at fold +- offset."""
    sides = []
    for value in (fold_value - offset, fold_value + offset):
        shifted = p.with_param(free_param, value)
        sec = Section.for_focus(shifted, which)
        hi = min((1.0 + window) * fold_r, 0.98 * sec.limit)
        sides.append(count_cycles(shifted, sec, (1.0 - window) * fold_r, hi,
                                  n_seeds, cfg, cycle_cfg))
    return FoldContract(param_value=fold_value, offset=offset,
                        below=sides[0], above=sides[1])
