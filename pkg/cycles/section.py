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

"""Transversal rays and cycle search configuration"""

import dataclasses
import math
from typing import Tuple

import numpy as np

from model import State
from model.singularities import anti_saddles, finite_singularities


@dataclasses.dataclass(frozen=True)
class CycleConfig(object):
    """Tolerances and search ranges of the cycle finders.

    The big-cycle search range [r_outer_min, escape_radius / 2] is a
    heuristic; nothing bounds where a cycle born at infinity settles.
    """
    newton_tol: float = 1e-10
    mult_tol: float = 1e-4
    t_max: float = 1e4
    max_newton: int = 30
    # displacements below disp_tol * max(1, r) count as zero
    disp_tol: float = 1e-8
    n_seeds: int = 49
    r_min_fraction: float = 0.01
    r_max_fraction: float = 0.98
    r_outer_min: float = 1.5
    big_seeds: int = 40
    big_t_max: float = 500.0
    winding_samples: int = 512

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, json_object):
        fields = {f.name: f.type for f in dataclasses.fields(cls)}
        unknown = set(json_object) - set(fields)
        if unknown:
            raise ValueError('unknown cycle keys: {}'.format(sorted(unknown)))
        values = {}
        for key, value in json_object.items():
            values[key] = int(value) if fields[key] in (int, 'int') \
                else float(value)
        return cls(**values)


@dataclasses.dataclass(frozen=True)
class Section(object):
    """Ray anchor + r * direction, r in (0, limit]."""
    anchor: State
    direction: Tuple[float, float]
    half_line: bool = True
    limit: float = math.inf

    def __post_init__(self):
        norm = math.hypot(*self.direction)
        if norm == 0:
            raise ValueError('section direction must be nonzero')
        object.__setattr__(self, 'direction',
                           (self.direction[0] / norm, self.direction[1] / norm))
        object.__setattr__(self, 'anchor', State(float(self.anchor[0]),
                                                 float(self.anchor[1])))

    @property
    def normal(self):
        return (-self.direction[1], self.direction[0])

    def point(self, r):
        return State(self.anchor.x + r * self.direction[0],
                     self.anchor.y + r * self.direction[1])

    def coordinate(self, s):
        return ((s[0] - self.anchor.x) * self.direction[0]
                + (s[1] - self.anchor.y) * self.direction[1])

    def offset(self, s):
        nx, ny = self.normal
        return (s[0] - self.anchor.x) * nx + (s[1] - self.anchor.y) * ny

    @classmethod
    def for_focus(cls, p, which='O'):
        """Horizontal ray from an anti-saddle toward its nearest neighbour.

        O is the anti-saddle at the origin, A the other anti-saddle of the
        case-1 shapes. The ray ends at the neighbouring singular point.
        """
        foci = anti_saddles(p)
        if which == 'O':
            chosen = [s for s in foci if s.location.x == 0.0]
        elif which == 'A':
            chosen = [s for s in foci if s.location.x != 0.0]
        else:
            raise ValueError('focus must be O or A, got {}'.format(which))
        if not chosen:
            raise ValueError('no anti-saddle {} for q case {}'.format(
                which, p.q_case.to_dict()))
        x0 = max(chosen, key=lambda s: abs(s.location.x)).location.x
        others = [s.location.x for s in finite_singularities(p)
                  if s.location.x != x0]
        if not others:
            return cls(anchor=State(x0, 0.0), direction=(1.0, 0.0))
        nearest = min(others, key=lambda x: (abs(x - x0), -x))
        return cls(anchor=State(x0, 0.0),
                   direction=(math.copysign(1.0, nearest - x0), 0.0),
                   limit=abs(nearest - x0))

    @classmethod
    def for_big_cycle(cls, p):
        """+x ray from the centroid of the finite singular points."""
        xs = [s.location.x for s in finite_singularities(p)]
        return cls(anchor=State(float(np.mean(xs)), 0.0), direction=(1.0, 0.0))
