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
import integrate
import model
from bifurcation import LEFT, RIGHT
from integrate import Event, IntegratorConfig
from model.errors import NoBracket, NotASaddle
from utils import print_separator

TIGHT = IntegratorConfig(rtol=1e-11, atol=1e-14)
ROTATED = dict(alpha0=0.05, beta=0.05)


def skeleton_saddle():
    p = model.preset('case1_a2')
    return p, model.saddles(p)[0]


def test_not_a_saddle():
    print('> testing NotASaddle ...')
    p = model.preset('case1_a2')
    try:
        bifurcation.separatrices(p, model.anti_saddles(p)[0])
        raise AssertionError('an anti-saddle has no separatrices')
    except NotASaddle:
        pass
    try:
        bifurcation.homoclinic_gap(model.preset('case3'), LEFT)
        raise AssertionError('case 3 has no loop between two anti-saddles')
    except NotASaddle:
        pass
    print('>> passed the test :-)')


def test_hamiltonian_loops():
    print('> testing separatrices on the level H = 1/4 ...')
    p, saddle = skeleton_saddle()
    h = model.first_integral(p.q_case)
    assert abs(h(1.0, 0.0) - 0.25) < 1e-15
    axis = Event('axis', lambda t, y: y[1], direction=1, terminal=False)
    sep = bifurcation.separatrices(p, saddle, cfg=TIGHT, t_max=60.0,
                                   events=[axis])
    assert sorted(sep.branches) == sorted(bifurcation.BRANCHES)
    for key, trajectory in sep.branches.items():
        drift = max(abs(h(x, y) - 0.25) for x, y in trajectory.states)
        assert drift < 1e-8, '{} drifted by {}'.format(key, drift)
    crossing = sep['u-'].first_event('axis')
    assert crossing is not None
    assert abs(crossing.state.x - (1.0 - math.sqrt(2.0))) < 1e-6
    print('>> passed the test :-)')


def test_branch_residual():
    print('> testing the ODE residual along a branch ...')
    p = model.preset('case1_a2', **ROTATED)
    saddle = model.saddles(p)[0]
    sep = bifurcation.separatrices(p, saddle, cfg=TIGHT, t_max=10.0)
    h = 1e-5
    for key in ('u+', 's-'):
        solution = sep[key].solution
        for t in np.linspace(0.2, 9.8, 9) * math.copysign(1.0,
                                                          sep[key].t[-1]):
            slope = (solution(t + h)[:2] - solution(t - h)[:2]) / (2 * h)
            field = model.eval_field(p, solution(t)[:2])
            assert np.abs(slope - np.array(field)).max() < 1e-6
    print('>> passed the test :-)')


def test_stable_branch_converges():
    print('> testing the stable branches approach S in forward time ...')
    p = model.preset('case1_a2', **ROTATED)
    saddle = model.saddles(p)[0]
    sep = bifurcation.separatrices(p, saddle, cfg=TIGHT, t_max=20.0,
                                   which=('s+', 's-'))
    for key in ('s+', 's-'):
        start = sep[key].solution(-15.0)[:2]
        forward = integrate.integrate(p, start, TIGHT, t_max=15.0)
        assert math.hypot(forward.end.x - 1.0, forward.end.y) < 1e-5
        assert math.hypot(start[0] - 1.0, start[1]) > 1e-3
    print('>> passed the test :-)')


def test_separatrix_export():
    print('> testing separatrix export ...')
    p, saddle = skeleton_saddle()
    sep = bifurcation.separatrices(p, saddle, t_max=2.0)
    frame = bifurcation.separatrix_frame(sep)
    assert set(frame['branch']) == set(bifurcation.BRANCHES)
    assert list(frame.columns) == ['t', 'x', 'y', 'branch']
    assert bifurcation.separatrix_csv(sep).splitlines()[0] == 't,x,y,branch'
    print('>> passed the test :-)')


def test_homoclinic_gaps():
    print('> testing homoclinic gaps ...')
    p = model.preset('case1_a2')
    for side in (LEFT, RIGHT):
        for transversal in bifurcation.homoclinic.TRANSVERSALS:
            gap = bifurcation.homoclinic_gap(p, side, TIGHT,
                                             transversal=transversal)
            assert abs(gap) < 1e-8, '{} {} gap {}'.format(side, transversal,
                                                          gap)
    rotated = model.preset('case1_a2', alpha0=0.05)
    for side in (LEFT, RIGHT):
        vertical = bifurcation.homoclinic_gap(rotated, side, TIGHT)
        axis = bifurcation.homoclinic_gap(rotated, side, TIGHT,
                                          transversal=bifurcation.AXIS)
        print('   {}: vertical {}, axis {}'.format(side, vertical, axis))
        assert vertical > 1e-4 and axis > 1e-4
    print('>> passed the test :-)')


def test_gap_monotone_in_alpha2():
    print('> testing monotonicity of the left gap in alpha2 ...')
    base = model.preset('case1_a2', **ROTATED)
    gaps = [bifurcation.homoclinic_gap(base.with_param(model.ALPHA2, a2),
                                       LEFT, TIGHT)
            for a2 in np.linspace(-0.08, -0.04, 5)]
    assert np.all(np.diff(gaps) > 0)
    assert gaps[0] < 0 < gaps[-1]
    print('>> passed the test :-)')


def test_eight_loop_find():
    print('> testing the eight-loop search ...')
    result = bifurcation.eight_loop_find(model.preset('case1_a2', **ROTATED),
                                         (-0.5, 0.0), TIGHT)
    print('   {}'.format(result.to_dict()))
    assert -0.08 < result.left < -0.045
    assert -0.04 < result.right < -0.015
    for residual in result.residuals.values():
        assert abs(residual) < 1e-8
    assert result.difference == result.right - result.left
    assert not result.is_eight_loop()

    flat = bifurcation.eight_loop_find(model.preset('case1_a2'), (-0.5, 0.0),
                                       TIGHT)
    assert flat.as_tuple() == (0.0, 0.0)
    assert flat.is_eight_loop()

    try:
        bifurcation.eight_loop_find(model.preset('case1_a2', **ROTATED),
                                    (-0.01, 0.0), TIGHT)
        raise AssertionError('no sign change in [-0.01, 0]')
    except NoBracket:
        pass
    print('>> passed the test :-)')


if __name__ == '__main__':

    print_separator('test separatrices')
    test_not_a_saddle()
    test_hamiltonian_loops()
    test_branch_residual()
    test_stable_branch_converges()
    test_separatrix_export()
    print_separator('test homoclinic gaps')
    test_homoclinic_gaps()
    test_gap_monotone_in_alpha2()
    test_eight_loop_find()
