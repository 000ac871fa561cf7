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
import sys

import numpy as np

script_dir = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.join(script_dir, "../../"))

import model
import scan
from integrate import IntegratorConfig
from scan import PortraitConfig, Window
from utils import print_separator

WINDOW = (-1.0, 3.0, -2.0, 2.0)


def test_window():
    print('> testing windows and seed lattices ...')
    window = Window.from_list(WINDOW)
    assert window.contains((0.0, 0.0)) and not window.contains((3.5, 0.0))
    seeds = PortraitConfig(nx=4, ny=2).seeds(window)
    assert seeds[0] == (-0.5, -1.0) and seeds[-1] == (2.5, 1.0)
    assert len(seeds) == 8
    assert PortraitConfig(nx=0).seeds(window) == []
    try:
        Window.from_list((1.0, 0.0, -1.0, 1.0))
        raise AssertionError('empty window accepted')
    except ValueError:
        pass
    cfg = PortraitConfig.from_dict({'nx': 3, 'both_directions': False})
    assert cfg.nx == 3 and cfg.ny == 7 and not cfg.both_directions
    print('>> passed the test :-)')


def test_level_sets():
    print('> testing portrait orbits stay on level sets of H ...')
    p = model.preset('case1_a2')
    h = model.first_integral(p.q_case)
    cfg = IntegratorConfig(rtol=1e-11, atol=1e-14)
    result = scan.portrait(p, WINDOW, PortraitConfig(nx=5, ny=4, t_max=20.0),
                           cfg)
    assert len(result.separatrix_labels()) == 4
    assert len(result) == 5 * 4 * 2 + 4
    window = result.window
    for label, trajectory in result.trajectories.items():
        levels = np.array([h(x, y) for x, y in trajectory.states])
        drift = np.abs(levels - levels[0]).max() / (1.0 + abs(levels[0]))
        assert drift < 1e-8, '{} drifted by {}'.format(label, drift)
        x, y = trajectory.states[-1]
        slack = 1e-9
        assert window.x_min - slack <= x <= window.x_max + slack
        assert window.y_min - slack <= y <= window.y_max + slack
    print('>> passed the test :-)')


def test_separatrices_only():
    print('> testing an empty seed lattice ...')
    p = model.preset('case1_a2', alpha0=0.02)
    result = scan.portrait(p, WINDOW, PortraitConfig(nx=0, ny=0, t_max=10.0))
    assert sorted(result.trajectories) == ['S0:s+', 'S0:s-', 'S0:u+', 'S0:u-']
    frame = scan.portrait_frame(result)
    assert list(frame.columns) == ['t', 'x', 'y', 'curve']
    assert set(frame['curve']) == set(result.trajectories)
    print('>> passed the test :-)')


def test_determinism():
    print('> testing portraits are reproducible ...')
    p = model.preset('case1_a2', alpha0=0.03, alpha2=-0.02, c=0.3)
    seeding = PortraitConfig(nx=3, ny=3, t_max=10.0)
    first = scan.portrait_json(scan.portrait(p, WINDOW, seeding))
    second = scan.portrait_json(scan.portrait(p, WINDOW, seeding))
    assert first == second
    assert scan.portrait_csv(scan.portrait(p, WINDOW, seeding)) == \
        scan.portrait_csv(scan.portrait(p, WINDOW, seeding))
    print('>> passed the test :-)')


if __name__ == '__main__':

    print_separator('test portraits')
    test_window()
    test_level_sets()
    test_separatrices_only()
    test_determinism()
