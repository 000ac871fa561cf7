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

"""Finite singular points and singular directions at infinity."""

import dataclasses
import logging
from typing import Optional, Tuple

import numpy as np

from .field import is_reversible, jacobian, trace_at
from .params import State

logger = logging.getLogger(__name__)

SADDLE = 'Saddle'
FOCUS = 'AntiSaddleFocus'
NODE = 'AntiSaddleNode'
CENTER = 'Center'
SADDLE_NODE = 'SaddleNode'
DEGENERATE = 'Degenerate'
INFINITE = 'Infinite'

ANTI_SADDLES = (FOCUS, NODE, CENTER)
CLASSIFY_TOL = 1e-12
IMAG_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class Singularity(object):
    """A finite equilibrium, or a singular direction at infinity.

    Finite points carry `location`; infinite ones carry the slope
    `direction` (None for the vertical direction).
    """
    kind: str
    location: Optional[State] = None
    direction: Optional[float] = None
    eigenvalues: Tuple[complex, complex] = (0j, 0j)
    trace: float = 0.0
    det: float = 0.0
    multiplicity: int = 1
    # True only for centers certified by x-axis reversibility.
    certified: bool = False

    @property
    def is_anti_saddle(self):
        return self.kind in ANTI_SADDLES

    def to_dict(self):
        output = {'kind': self.kind, 'multiplicity': self.multiplicity}
        if self.kind == INFINITE:
            output['direction'] = self.direction
            output['vertical'] = self.direction is None
            return output
        output['location'] = [self.location.x, self.location.y]
        output['eigenvalues'] = [[z.real, z.imag] for z in self.eigenvalues]
        output['trace'] = self.trace
        output['det'] = self.det
        output['certified'] = self.certified
        return output


def classify(p, x0, multiplicity=1):
    """Classifies the equilibrium (x0, 0) from its Jacobian."""
    location = State(float(x0), 0.0)
    matrix = jacobian(p, location)
    tr = trace_at(p, x0)
    det = -p.q_case.dq(x0)
    eigenvalues = tuple(complex(z) for z in
                        sorted(np.linalg.eigvals(matrix),
                               key=lambda z: (z.real, z.imag)))
    certified = False
    if abs(det) < CLASSIFY_TOL:
        kind = SADDLE_NODE if multiplicity == 2 else DEGENERATE
    elif det < 0:
        kind = SADDLE
    elif abs(tr) < CLASSIFY_TOL:
        kind = CENTER
        certified = is_reversible(p)
    elif tr * tr < 4.0 * det:
        kind = FOCUS
    else:
        kind = NODE
    return Singularity(kind=kind, location=location, eigenvalues=eigenvalues,
                       trace=tr, det=det, multiplicity=multiplicity,
                       certified=certified)


def finite_singularities(p):
    """All real roots of q on the x-axis, classified, ordered by x."""
    return [classify(p, x0, multiplicity=m) for x0, m in p.q_case.roots()]


def anti_saddles(p):
    return [s for s in finite_singularities(p) if s.is_anti_saddle]


def saddles(p):
    return [s for s in finite_singularities(p) if s.kind == SADDLE]


def _real_roots(coefficients):
    coefficients = np.asarray(coefficients, dtype=float)
    if not np.any(coefficients):
        logger.warning('direction equation vanishes identically, '
                       'every direction is singular')
        return []
    roots = np.roots(coefficients)
    real = sorted(float(z.real) for z in roots
                  if abs(z.imag) <= IMAG_TOL * max(1.0, abs(z)))
    merged = []
    for u in real:
        if merged and abs(u - merged[-1][0]) <= IMAG_TOL * max(1.0, abs(u)):
            merged[-1][1] += 1
        else:
            merged.append([u, 1])
    return [(u, m) for u, m in merged]


def infinite_directions(p):
    """Real roots u of gamma u^3 + d u^2 + alpha2 u + s = 0.

    s is the cubic coefficient of q. The vertical direction is not a root
    and is reported by infinite_singularities.
    """
    return [u for u, _ in _real_roots(
        [p.gamma, p.d, p.alpha2, p.q_case.cubic])]


def kukles_infinite_directions(p):
    """Real roots of a7 u^3 + a6 u^2 + a5 u + a4 = 0 for Kukles coefficients."""
    return [u for u, _ in _real_roots([p.a7, p.a6, p.a5, p.a4])]


def infinite_singularities(p):
    found = [Singularity(kind=INFINITE, direction=u, multiplicity=m)
             for u, m in _real_roots([p.gamma, p.d, p.alpha2,
                                      p.q_case.cubic])]
    found.append(Singularity(kind=INFINITE, direction=None))
    return found
