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

"""Limit cycle records, stability and winding numbers"""

import dataclasses
import math
from typing import Optional, Tuple

import numpy as np

from model import State

STABLE = 'Stable'
UNSTABLE = 'Unstable'
SEMI_STABLE = 'SemiStableCandidate'


def stability_of(multiplier, mult_tol):
    if multiplier < 1.0 - mult_tol:
        return STABLE
    if multiplier > 1.0 + mult_tol:
        return UNSTABLE
    return SEMI_STABLE


def winding_number(polyline, point):
    """Signed turns of a closed polyline around point, rounded when |w| >= 0.5."""
    pts = np.asarray(polyline, dtype=float)
    if np.any(pts[0] != pts[-1]):
        pts = np.vstack([pts, pts[:1]])
    angles = np.unwrap(np.arctan2(pts[:, 1] - point[1], pts[:, 0] - point[0]))
    turns = (angles[-1] - angles[0]) / (2.0 * math.pi)
    if abs(turns) >= 0.5:
        return int(round(turns))
    return 0


@dataclasses.dataclass(frozen=True)
class LimitCycle(object):
    section_coord: float
    period: float
    multiplier: float
    stability: str
    enclosed: Tuple[State, ...]
    amplitude: float
    anchor: State
    residual: float = 0.0
    polyline: Optional[np.ndarray] = dataclasses.field(
        default=None, compare=False, repr=False)

    def encloses(self, location, tol=1e-9):
        return any(abs(s.x - location[0]) < tol and abs(s.y - location[1]) < tol
                   for s in self.enclosed)

    def to_dict(self):
        return {'r': self.section_coord,
                'period': self.period,
                'multiplier': self.multiplier,
                'stability': self.stability,
                'enclosed': [[s.x, s.y] for s in self.enclosed],
                'amplitude': self.amplitude}
