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

"""Vector fields, Jacobians, first integrals and rotation determinants."""

import numpy as np

from .errors import OnSection
from .params import ALPHA0, ALPHA2, BETA, GAMMA, PARAM_IDS
from .params import State


def field_xy(p, x, y):
    """Canonical field as a (P, Q) tuple of floats."""
    phi = p.alpha0 - p.beta + p.gamma + x * (p.beta + p.alpha2 * x)
    q = p.q_case.q(x) + y * (phi + y * (p.c + p.d * x + p.gamma * y))
    return y, q


def eval_field(p, s):
    return State(*field_xy(p, s[0], s[1]))


def eval_kukles(p, s):
    x, y = s
    q = (-x + p.delta * y + p.a1 * x * x + p.a2 * x * y + p.a3 * y * y
         + p.a4 * x ** 3 + p.a5 * x * x * y + p.a6 * x * y * y
         + p.a7 * y ** 3)
    return State(y, q)


def jacobian_xy(p, x, y):
    dq_dx = (p.q_case.dq(x) + (p.beta + 2.0 * p.alpha2 * x) * y
             + p.d * y * y)
    dq_dy = (p.alpha0 - p.beta + p.gamma + p.beta * x + p.alpha2 * x * x
             + 2.0 * (p.c + p.d * x) * y + 3.0 * p.gamma * y * y)
    return ((0.0, 1.0), (dq_dx, dq_dy))


def jacobian(p, s):
    """Analytic Jacobian of the canonical field as a 2x2 array."""
    return np.array(jacobian_xy(p, s[0], s[1]))


def trace_at(p, x):
    """Jacobian trace on the x-axis: alpha0 - beta + gamma + beta x + alpha2 x^2."""
    return p.alpha0 - p.beta + p.gamma + p.beta * x + p.alpha2 * x * x


def trace_coefficient(param_id, x):
    """d(trace_at)/d(param) at the axis point x."""
    return {ALPHA0: 1.0, GAMMA: 1.0, BETA: x - 1.0, ALPHA2: x * x}[param_id]


def param_derivative_xy(param_id, x, y):
    """(dP/dmu, dQ/dmu) for a rotation parameter mu."""
    if param_id == ALPHA0:
        return 0.0, y
    if param_id == ALPHA2:
        return 0.0, x * x * y
    if param_id == GAMMA:
        return 0.0, y + y ** 3
    if param_id == BETA:
        return 0.0, (x - 1.0) * y
    raise ValueError('{} is not a rotation parameter, use one of {}'.format(
        param_id, PARAM_IDS))


def rotation_determinant(param_id, p, s):
    """P dQ/dmu - Q dP/dmu at s."""
    x, y = s
    big_p, big_q = field_xy(p, x, y)
    dp, dq = param_derivative_xy(param_id, x, y)
    return big_p * dq - big_q * dp


def reversibility_defect(p, sample):
    """|F(x, -y) + F(x, y)| with F = Q / P; vanishes for x-axis symmetric fields."""
    x, y = sample
    if y == 0:
        raise OnSection('reversibility defect undefined on the x-axis '
                        '(sample {})'.format(tuple(sample)))
    forward = field_xy(p, x, y)
    mirror = field_xy(p, x, -y)
    return abs(forward[1] / forward[0] + mirror[1] / mirror[0])


def is_reversible(p):
    return p.alpha0 == 0 and p.alpha2 == 0 and p.beta == 0 and p.gamma == 0


def q_symmetry_defect(q_case, x):
    """|q(2 - x) + q(x)|, zero for every x when q is odd about x = 1."""
    return abs(q_case.q(2.0 - x) + q_case.q(x))


def q_oddness_defect(q_case, x):
    return abs(q_case.q(-x) + q_case.q(x))


class FirstIntegral(object):
    """H(x, y) = -2 * integral of q + y^2 for the Hamiltonian skeleton.

    H_x = -2 q and H_y = 2 y, so dH/dt = 2 y^2 (Q - q) along the full field.
    """

    def __init__(self, q_case):
        self.q_case = q_case

    def __call__(self, x, y):
        c1, c2, c3 = self.q_case.coefficients
        x2 = x * x
        return -(c1 * x2 + (2.0 / 3.0) * c2 * x2 * x
                 + 0.5 * c3 * x2 * x2) + y * y

    def gradient(self, x, y):
        return -2.0 * self.q_case.q(x), 2.0 * y

    def lie_derivative(self, p, s):
        x, y = s
        big_p, big_q = field_xy(p, x, y)
        hx, hy = self.gradient(x, y)
        return hx * big_p + hy * big_q


def first_integral(q_case):
    return FirstIntegral(q_case)
