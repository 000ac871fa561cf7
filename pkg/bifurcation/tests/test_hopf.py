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

import math
import os
import sys

import numpy as np

script_dir = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.join(script_dir, "../../"))

import bifurcation
import cycles
import model
from cycles import Section
from integrate import IntegratorConfig
from model.errors import Insensitive
from utils import print_separator

TIGHT = IntegratorConfig(rtol=1e-11, atol=1e-14)


def test_hopf_examples():
    print('> testing Hopf values ...')
    report = bifurcation.hopf_value(model.preset('case1_a2', alpha0=0.1),
                                    'O', model.BETA)
    assert abs(report.critical_param_value - 0.1) < 1e-12
    report = bifurcation.hopf_value(
        model.preset('case1_a2', alpha0=0.1, beta=0.3), 'O', model.GAMMA)
    assert abs(report.critical_param_value - 0.2) < 1e-12
    report = bifurcation.hopf_value(model.preset('case1_a2'), 'A',
                                    model.ALPHA2)
    assert abs(report.critical_param_value) < 1e-12
    assert report.side is None
    print('>> passed the test :-)')


def test_trace_at_a():
    print('> testing the trace at A against the numerical Jacobian ...')
    p = model.preset('case1_a2', alpha0=0.03, beta=-0.02, gamma=0.05,
                     alpha2=0.07)
    h = 1e-6
    numeric = ((model.eval_field(p, (2.0, h))[1]
                - model.eval_field(p, (2.0, -h))[1]) / (2 * h))
    analytic = p.alpha0 + p.beta + p.gamma + 4 * p.alpha2
    assert abs(numeric - analytic) < 1e-8
    assert abs(np.trace(model.jacobian(p, (2.0, 0.0))) - analytic) < 1e-14
    print('>> passed the test :-)')


def test_critical_spectrum():
    print('> testing the spectrum at the critical value ...')
    for which, free in (('O', model.BETA), ('O', model.ALPHA0),
                        ('A', model.ALPHA2), ('A', model.GAMMA)):
        p = model.preset('case1_a2', alpha0=0.04, beta=0.01, alpha2=-0.02,
                         gamma=0.01)
        report = bifurcation.hopf_value(p, which, free)
        assert abs(report.trace_expr_value) < 1e-12
        assert all(abs(z.real) < 1e-8 for z in report.eigenvalues)
        expected = math.sqrt(-p.q_case.dq(report.singularity.x))
        assert abs(report.frequency - expected) < 1e-10
    print('>> passed the test :-)')


def test_insensitive():
    print('> testing Insensitive ...')
    try:
        bifurcation.hopf_value(model.preset('case1_a2'), 'O', model.ALPHA2)
        raise AssertionError('alpha2 does not move the trace at O')
    except Insensitive:
        pass
    print('>> passed the test :-)')


def test_hopf_amplitude_scaling():
    print('> testing amplitude of cycles born at the Hopf value ...')
    base = model.preset('case1_a2', alpha0=0.1, alpha2=0.5)
    report = bifurcation.hopf_value(base, 'O', model.BETA, TIGHT)
    assert report.side is not None and report.birth_direction != 0
    print('   {} at beta = {}, born on side {}'.format(
        report.side, report.critical_param_value, report.birth_direction))

    squares = []
    for offset in (1e-3, 2e-3, 4e-3):
        p = base.with_param(model.BETA, report.critical_param_value +
                            report.birth_direction * offset)
        found = cycles.count_cycles(p, Section.for_focus(p, 'O'), 0.01, 0.4,
                                    40, TIGHT)
        assert len(found) == 1
        if offset == 1e-3:
            assert found[0].amplitude < 0.15
        expected = cycles.STABLE if report.side == bifurcation.SUPERCRITICAL \
            else cycles.UNSTABLE
        assert found[0].stability == expected
        squares.append(found[0].section_coord ** 2)
    print('   squared radii: {}'.format(squares))
    assert abs(squares[1] / squares[0] - 2.0) < 0.4
    assert abs(squares[2] / squares[0] - 4.0) < 0.8

    p = base.with_param(model.BETA, report.critical_param_value +
                        report.birth_direction * 5e-6)
    small = cycles.count_cycles(p, Section.for_focus(p, 'O'), 0.001, 0.05,
                                25, TIGHT)
    assert len(small) == 1 and small[0].amplitude <= 1e-2
    period = 2 * math.pi / report.frequency
    assert abs(small[0].period - period) < 0.01 * period
    print('>> passed the test :-)')


def test_sign_flip_at_weak_focus():
    print('> testing the displacement sign flip across beta = alpha0 ...')
    p = model.preset('case1_a2', alpha0=0.05, beta=0.05)
    signs = []
    for shift in (-1e-3, 1e-3):
        shifted = p.with_param(model.BETA, 0.05 + shift)
        sec = Section.for_focus(shifted, 'O')
        signs.append(math.copysign(1.0, cycles.displacement(shifted, sec,
                                                             0.01, TIGHT)))
    assert signs[0] != signs[1]
    print('>> passed the test :-)')


if __name__ == '__main__':

    print_separator('test Hopf values')
    test_hopf_examples()
    test_trace_at_a()
    test_critical_spectrum()
    test_insensitive()
    print_separator('test cycles born at Hopf points')
    test_hopf_amplitude_scaling()
    test_sign_flip_at_weak_focus()
