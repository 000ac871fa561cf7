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

"""Parameter records of the Kukles system and of its canonical form."""

import copy
import dataclasses
import json
import logging
import math
from typing import NamedTuple, Optional

from .errors import DegenerateQ

logger = logging.getLogger(__name__)

ALPHA0 = 'alpha0'
ALPHA2 = 'alpha2'
BETA = 'beta'
GAMMA = 'gamma'
# Field rotation parameters (beta is a semi-rotation parameter about x = 1).
PARAM_IDS = (ALPHA0, ALPHA2, BETA, GAMMA)

ROOT_MERGE_TOL = 1e-9


class State(NamedTuple):
    x: float
    y: float


def _check_finite(owner, **values):
    for name, value in values.items():
        if value is None:
            continue
        if not math.isfinite(value):
            raise ValueError('{}: field {} must be finite, got {}'.format(
                owner, name, value))


@dataclasses.dataclass(frozen=True)
class QCase(object):
    """Shape of q(x), the x-only part of the canonical Q.

    Case 1: q = -x + (1 + 1/a) x^2 - (1/a) x^3, roots 0, 1, a.
    Case 2: q = -x + b x^3.
    Case 3: q = -x + x^2, roots 0, 1.
    """
    case: int
    a: Optional[float] = None
    b: Optional[float] = None

    def __post_init__(self):
        if self.case not in (1, 2, 3):
            raise ValueError('q case must be 1, 2 or 3, got {}'.format(
                self.case))
        if self.case == 1:
            if self.a is None or self.a == 0:
                raise ValueError('case 1 requires a != 0, got {}'.format(
                    self.a))
            object.__setattr__(self, 'a', float(self.a))
            object.__setattr__(self, 'b', None)
        elif self.case == 2:
            object.__setattr__(self, 'b',
                               0.0 if self.b is None else float(self.b))
            object.__setattr__(self, 'a', None)
        else:
            object.__setattr__(self, 'a', None)
            object.__setattr__(self, 'b', None)
        _check_finite('QCase', a=self.a, b=self.b)

    @property
    def coefficients(self):
        """(c1, c2, c3) with q(x) = c1 x + c2 x^2 + c3 x^3."""
        if self.case == 1:
            return (-1.0, 1.0 + 1.0 / self.a, -1.0 / self.a)
        if self.case == 2:
            return (-1.0, 0.0, self.b)
        return (-1.0, 1.0, 0.0)

    @property
    def cubic(self):
        """Leading coefficient s of q, the constant of the direction cubic."""
        return self.coefficients[2]

    def q(self, x):
        c1, c2, c3 = self.coefficients
        return x * (c1 + x * (c2 + x * c3))

    def dq(self, x):
        c1, c2, c3 = self.coefficients
        return c1 + x * (2.0 * c2 + 3.0 * c3 * x)

    def roots(self):
        """Real roots of q as sorted (root, multiplicity) pairs."""
        if self.case == 1:
            if self.a == 1.0:
                return [(0.0, 1), (1.0, 2)]
            return sorted([(0.0, 1), (1.0, 1), (self.a, 1)])
        if self.case == 2:
            if self.b > 0:
                r = 1.0 / math.sqrt(self.b)
                return [(-r, 1), (0.0, 1), (r, 1)]
            return [(0.0, 1)]
        return [(0.0, 1), (1.0, 1)]

    def to_dict(self):
        return {'case': self.case, 'a': self.a, 'b': self.b}

    @classmethod
    def from_dict(cls, json_object):
        unknown = set(json_object) - {'case', 'a', 'b'}
        if unknown:
            raise ValueError('unknown q_case keys: {}'.format(
                sorted(unknown)))
        return cls(case=int(json_object['case']),
                   a=json_object.get('a'), b=json_object.get('b'))


@dataclasses.dataclass(frozen=True)
class KuklesParams(object):
    """Coefficients of y' = -x + delta y + a1 x^2 + a2 xy + a3 y^2
    + a4 x^3 + a5 x^2 y + a6 x y^2 + a7 y^3."""
    delta: float = 0.0
    a1: float = 0.0
    a2: float = 0.0
    a3: float = 0.0
    a4: float = 0.0
    a5: float = 0.0
    a6: float = 0.0
    a7: float = 0.0

    def __post_init__(self):
        _check_finite('KuklesParams', **dataclasses.asdict(self))

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, json_object):
        return cls(**json_object)


@dataclasses.dataclass(frozen=True)
class CanonicalParams(object):
    """Parameters of the canonical form

        x' = y,
        y' = q(x) + (alpha0 - beta + gamma + beta x + alpha2 x^2) y
             + (c + d x) y^2 + gamma y^3.
    """
    q_case: QCase
    c: float = 0.0
    d: float = 0.0
    alpha0: float = 0.0
    alpha2: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        values = dataclasses.asdict(self)
        values.pop('q_case')
        _check_finite('CanonicalParams', **values)

    def get(self, param_id):
        if param_id not in PARAM_IDS + ('c', 'd'):
            raise ValueError('unknown parameter {}'.format(param_id))
        return getattr(self, param_id)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def with_param(self, param_id, value):
        self.get(param_id)
        return dataclasses.replace(self, **{param_id: float(value)})

    @property
    def delta(self):
        """Linear damping coefficient, the trace of the field at the origin."""
        return self.alpha0 - self.beta + self.gamma

    @classmethod
    def from_dict(cls, json_object):
        """Constructs a `CanonicalParams` from a Python dictionary."""
        allowed = {f.name for f in dataclasses.fields(cls)}
        unknown = set(json_object) - allowed
        if unknown:
            raise ValueError('unknown parameter keys: {}'.format(
                sorted(unknown)))
        values = copy.deepcopy(dict(json_object))
        values['q_case'] = QCase.from_dict(values['q_case'])
        for key in allowed - {'q_case'}:
            if key in values:
                values[key] = float(values[key])
        return cls(**values)

    @classmethod
    def from_json_file(cls, json_file):
        with open(json_file, "r", encoding='utf-8') as reader:
            text = reader.read()
        return cls.from_dict(json.loads(text))

    def to_dict(self):
        """Serializes this instance to a Python dictionary."""
        output = {f.name: getattr(self, f.name)
                  for f in dataclasses.fields(self)}
        output['q_case'] = self.q_case.to_dict()
        return output

    def to_json_string(self):
        """Serializes this instance to a JSON string."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


PRESETS = {
    'case1_a1': QCase(1, a=1.0),
    'case1_a2': QCase(1, a=2.0),
    'case1_am1': QCase(1, a=-1.0),
    'case1_am2': QCase(1, a=-2.0),
    'case2_b0': QCase(2, b=0.0),
    'case2_bm1': QCase(2, b=-1.0),
    'case3': QCase(3),
}


def preset(name, **params):
    """Canonical parameters for a named q-case preset."""
    if name not in PRESETS:
        raise ValueError('unknown preset {}, choose from {}'.format(
            name, sorted(PRESETS)))
    return CanonicalParams(q_case=PRESETS[name], **params)


def _nonzero_roots(a1, a4):
    """Real roots of a4 x^2 + a1 x - 1, ordered by magnitude."""
    if a4 == 0.0:
        if a1 == 0.0:
            return []
        return [1.0 / a1]
    disc = a1 * a1 + 4.0 * a4
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    # Stable form: the two roots are t / a4 and -1 / t.
    t = -0.5 * (a1 + math.copysign(sq, a1)) if a1 != 0.0 else -0.5 * sq
    roots = [-1.0 / t, t / a4] if t != 0.0 else []
    return sorted(roots, key=abs)


def _normal_form(p):
    """Returns (q_case, scale) of the rescaling x -> x / scale."""
    roots = _nonzero_roots(p.a1, p.a4)
    if not roots:
        if p.a1 != 0.0:
            raise DegenerateQ(
                'q(x) = -x + {} x^2 + {} x^3 has no nonzero real root '
                'and a quadratic term'.format(p.a1, p.a4))
        return QCase(2, b=p.a4), 1.0
    if len(roots) == 1:
        return QCase(3), roots[0]
    r1, r2 = roots
    if abs(r1 - r2) < ROOT_MERGE_TOL * max(abs(r1), abs(r2)):
        return QCase(1, a=1.0), 0.5 * (r1 + r2)
    return QCase(1, a=r2 / r1), r1


def canonical_scale(p):
    """Factor r of the rescaling (x, y) -> (x / r, y / r) used by to_canonical."""
    return _normal_form(p)[1]


def to_canonical(p):
    """Maps Kukles coefficients onto the canonical form.

    The substitution delta = alpha0 - beta + gamma, a2 = beta, a3 = c,
    a5 = alpha2, a6 = d, a7 = gamma is applied after rescaling the phase
    plane so that the smallest nonzero root of q sits at x = 1.
    """
    q_case, r = _normal_form(p)
    beta = p.a2 * r
    gamma = p.a7 * r * r
    return CanonicalParams(
        q_case=q_case,
        c=p.a3 * r,
        d=p.a6 * r * r,
        alpha0=p.delta + beta - gamma,
        alpha2=p.a5 * r * r,
        beta=beta,
        gamma=gamma)


def from_canonical(p):
    """Inverse of to_canonical at scale 1."""
    c1, c2, c3 = p.q_case.coefficients
    assert c1 == -1.0
    return KuklesParams(delta=p.delta, a1=c2, a2=p.beta, a3=p.c, a4=c3,
                        a5=p.alpha2, a6=p.d, a7=p.gamma)


def reverse_time(p):
    """Parameters of the image under (x, y, t) -> (x, -y, -t)."""
    return p.replace(alpha0=-p.alpha0, alpha2=-p.alpha2,
                     beta=-p.beta, gamma=-p.gamma)
