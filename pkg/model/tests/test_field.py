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

import os
import random
import sys

import numpy as np

script_dir = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.join(script_dir, "../../"))

import model
from model import KuklesParams, QCase
from utils import print_separator
from utils import set_random_seed


def random_params(q_case=None):
    if q_case is None:
        q_case = random.choice(list(model.PRESETS.values()))
    return model.CanonicalParams(
        q_case=q_case, c=random.uniform(-1, 1), d=random.uniform(-1, 1),
        alpha0=random.uniform(-1, 1), alpha2=random.uniform(-1, 1),
        beta=random.uniform(-1, 1), gamma=random.uniform(-1, 1))


def test_eval_field():
    print('> testing eval_field ...')
    assert model.eval_field(model.preset('case2_b0'), (1, 0)) == (0, -1)
    assert model.eval_field(model.preset('case1_a2'), (2, 0)) == (0, 0)
    assert model.eval_field(model.preset('case3', alpha0=1.0),
                            (0, 1)) == (1, 1)
    print('>> passed the test :-)')


def test_eval_kukles():
    print('> testing eval_kukles ...')
    assert model.eval_kukles(KuklesParams(), (1, 0)) == (0, -1)
    assert model.eval_kukles(KuklesParams(delta=1.0), (0, 2)) == (2, 2)
    assert model.eval_kukles(KuklesParams(a4=-1.0), (2, 0)) == (0, -10)
    print('>> passed the test :-)')


def test_jacobian_examples():
    print('> testing jacobian examples ...')
    p = model.preset('case1_a2')
    assert np.allclose(model.jacobian(p, (0, 0)), [[0, 1], [-1, 0]],
                       atol=1e-15)
    assert np.allclose(model.jacobian(p, (1, 0)), [[0, 1], [0.5, 0]],
                       atol=1e-15)
    assert np.allclose(model.jacobian(model.preset('case1_a2', alpha0=0.2),
                                      (0, 0)), [[0, 1], [-1, 0.2]],
                       atol=1e-15)
    print('>> passed the test :-)')


def test_jacobian_finite_differences(samples=500, h=1e-6):
    print('> testing jacobian against central differences ...')
    set_random_seed(1)
    error = 0.0
    for _ in range(samples):
        p = random_params()
        x, y = random.uniform(-2, 2), random.uniform(-2, 2)
        analytic = model.jacobian(p, (x, y))
        numeric = np.empty((2, 2))
        numeric[:, 0] = (np.array(model.eval_field(p, (x + h, y)))
                         - np.array(model.eval_field(p, (x - h, y)))) / (2 * h)
        numeric[:, 1] = (np.array(model.eval_field(p, (x, y + h)))
                         - np.array(model.eval_field(p, (x, y - h)))) / (2 * h)
        error = max(error, np.abs(analytic - numeric).max())
    print('   max error: {}'.format(error))
    assert error < 1.0e-6
    print('>> passed the test :-)')


def test_rotation_determinant_examples():
    print('> testing rotation determinant examples ...')
    p = model.preset('case1_a2')
    assert model.rotation_determinant(model.ALPHA0, p, (3, 2)) == 4
    assert model.rotation_determinant(model.GAMMA, p, (0, 1)) == 2
    assert model.rotation_determinant(model.BETA, p, (0, 1)) == -1
    print('>> passed the test :-)')


def test_rotation_determinant_identities(samples=10000):
    print('> testing rotation determinant closed forms and signs ...')
    set_random_seed(2)
    closed_forms = {
        model.ALPHA0: lambda x, y: y * y,
        model.ALPHA2: lambda x, y: x * x * y * y,
        model.GAMMA: lambda x, y: y * y * (1 + y * y),
        model.BETA: lambda x, y: (x - 1) * y * y,
    }
    error = 0.0
    for _ in range(samples):
        p = random_params()
        x, y = random.uniform(-3, 3), random.uniform(-3, 3)
        for param_id, closed in closed_forms.items():
            value = model.rotation_determinant(param_id, p, (x, y))
            expected = closed(x, y)
            error = max(error, abs(value - expected) / max(abs(expected),
                                                           1e-300))
            if param_id == model.BETA:
                assert (value >= 0) == (x >= 1 or y == 0)
            else:
                assert value >= 0
    print('   max relative error: {}'.format(error))
    assert error < 1e-12
    print('>> passed the test :-)')


def test_reversibility_defect():
    print('> testing reversibility defect ...')
    symmetric = model.preset('case1_a2', c=1.0, d=2.0)
    assert model.reversibility_defect(symmetric, (0.5, 0.7)) < 1e-15
    shifted = model.preset('case3', alpha0=1.0)
    for sample in ((0.3, 0.2), (-1.0, 2.0), (2.0, -0.5)):
        assert abs(model.reversibility_defect(shifted, sample) - 2.0) < 1e-12
    assert model.reversibility_defect(model.preset('case3', gamma=0.5),
                                      (0, 1)) > 0
    try:
        model.reversibility_defect(symmetric, (0.5, 0.0))
    except model.OnSection:
        pass
    else:
        raise AssertionError('expected OnSection')
    print('>> passed the test :-)')


def test_first_integral_values():
    print('> testing first integral values ...')
    assert model.first_integral(QCase(1, a=2.0))(0, 0) == 0
    assert abs(model.first_integral(QCase(3))(1, 0) - 1.0 / 3.0) < 1e-15
    assert abs(model.first_integral(QCase(2, b=-1.0))(1, 1) - 2.5) < 1e-15
    # the saddle level of the a = 2 eight-loop
    assert abs(model.first_integral(QCase(1, a=2.0))(1, 0) - 0.25) < 1e-15
    print('>> passed the test :-)')


def test_first_integral_lie_derivative(samples=10000):
    print('> testing first integral Lie derivative ...')
    set_random_seed(3)
    error = 0.0
    for _ in range(samples):
        q_case = random.choice(list(model.PRESETS.values()))
        p = model.CanonicalParams(q_case=q_case)
        h = model.first_integral(q_case)
        s = (random.uniform(-2, 2), random.uniform(-2, 2))
        error = max(error, abs(h.lie_derivative(p, s)))
    assert error < 1e-12
    print('>> passed the test :-)')


def test_q_symmetries(samples=1000):
    print('> testing q symmetries ...')
    set_random_seed(4)
    for _ in range(samples):
        x = random.uniform(-5, 5)
        assert model.q_symmetry_defect(QCase(1, a=2.0), x) < 1e-12 * (
            1 + abs(x) ** 3)
        assert model.q_oddness_defect(QCase(2, b=-1.0), x) < 1e-12 * (
            1 + abs(x) ** 3)
        assert model.q_oddness_defect(QCase(1, a=-1.0), x) < 1e-12 * (
            1 + abs(x) ** 3)
    print('>> passed the test :-)')


if __name__ == '__main__':

    print_separator('test field evaluation')
    test_eval_field()
    test_eval_kukles()
    test_jacobian_examples()
    test_jacobian_finite_differences()
    print_separator('test rotation parameters')
    test_rotation_determinant_examples()
    test_rotation_determinant_identities()
    test_reversibility_defect()
    print_separator('test first integrals')
    test_first_integral_values()
    test_first_integral_lie_derivative()
    test_q_symmetries()
