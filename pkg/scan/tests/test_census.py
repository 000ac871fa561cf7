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


import json
import os
import sys

script_dir = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.join(script_dir, "../../"))

import cycles
import model
import scan
from cycles import CycleConfig
from integrate import IntegratorConfig
from scan import GridSpec
from utils import print_separator

TIGHT = IntegratorConfig(rtol=1e-11, atol=1e-14)
SINGLE_CYCLE = dict(alpha0=0.02, beta=0.02, alpha2=-0.0275)
# gamma < 0 keeps a weak stable focus inside an unstable cycle at both foci,
# a small alpha0 step then opens a second cycle around O only
TWO_ONE = dict(c=0.05, d=0.01, alpha0=0.02861, beta=0.02, alpha2=-0.01002,
               gamma=-0.0086)
REGRESSION = os.path.join(script_dir, '../../scripts/census_regression.json')


def test_grid_spec():
    print('> testing grid enumeration ...')
    grid = GridSpec.from_dict({
        'params': {'q_case': {'case': 1, 'a': 2.0}, 'c': 0.5},
        'axes': {'alpha0': {'start': 0.0, 'stop': 0.1, 'num': 3},
                 'gamma': [0.01, 0.02]}})
    assert grid.shape == (3, 2) and len(grid) == 6
    points = list(grid.points())
    assert [(p.alpha0, p.gamma) for p in points[:3]] == \
        [(0.0, 0.01), (0.0, 0.02), (0.05, 0.01)]
    assert all(p.c == 0.5 and p.beta == 0.0 for p in points)
    assert GridSpec.from_dict(grid.to_dict()) == grid
    assert len(GridSpec(base=model.preset('case3'))) == 1

    for bad in ({'params': {'q_case': {'case': 3}}, 'axes': {'c': [1.0]}},
                {'params': {'q_case': {'case': 3}}, 'step': 1},
                {'params': {'q_case': {'case': 3}},
                 'axes': {'beta': {'start': 0.0, 'num': 2}}}):
        try:
            GridSpec.from_dict(bad)
            raise AssertionError('accepted {}'.format(bad))
        except ValueError:
            pass
    print('>> passed the test :-)')


def test_symmetric_point():
    print('> testing the census of a reversible system ...')
    record = scan.classify_point(model.preset('case1_a2', c=1.0))
    print('   {} + {} big, anomalies {}'.format(record.distribution,
                                               record.n_big,
                                               len(record.anomalies)))
    assert (record.n_O, record.n_A, record.n_big) == (0, 0, 0)
    assert record.distribution == '(0:0)'
    print('>> passed the test :-)')


def test_single_cycle_regime():
    print('> testing the census of the single cycle regime ...')
    record = scan.classify_point(model.preset('case1_a2', **SINGLE_CYCLE),
                                 TIGHT)
    print('   {} + {} big'.format(record.distribution, record.n_big))
    assert record.n_O == 1
    assert record.total <= 4
    print('>> passed the test :-)')


def test_two_one_point():
    print('> testing a (2:1) distribution with c, d != 0 ...')
    p = model.preset('case1_a2', **TWO_ONE)
    assert model.trace_at(p, 0.0) > 0 > model.trace_at(p, 2.0)
    record = scan.classify_point(p, TIGHT)
    print('   {} + {} big, anomalies {}'.format(record.distribution,
                                               record.n_big,
                                               record.anomalies))
    assert (record.n_O, record.n_A) == (2, 1), record.to_dict()
    assert record.total <= 4
    print('>> passed the test :-)')


def test_reverse_time_census():
    print('> testing census invariance under time reversal ...')
    p = model.preset('case1_a2', **SINGLE_CYCLE)
    forward, backward = [scan.classify_point(q, TIGHT) for q in
                         (p, model.reverse_time(p))]
    assert (forward.n_O, forward.n_A) == (backward.n_O, backward.n_A)

    stable = cycles.count_around(p, 'O', TIGHT)[0]
    unstable = cycles.count_around(model.reverse_time(p), 'O', TIGHT)[0]
    assert stable.stability == cycles.STABLE
    assert unstable.stability == cycles.UNSTABLE
    assert abs(stable.section_coord - unstable.section_coord) < 1e-7
    assert abs(stable.multiplier * unstable.multiplier - 1.0) < 1e-6
    print('>> passed the test :-)')


def test_census_determinism():
    print('> testing census output is independent of the worker count ...')
    grid = GridSpec.from_dict({
        'params': {'q_case': {'case': 1, 'a': 2.0}, 'c': 1.0},
        'axes': {'alpha0': [0.0, 0.01]}})
    cycle_cfg = CycleConfig(n_seeds=13, big_seeds=10)
    outputs = []
    for workers in (1, 2, 1):
        records = scan.census(grid, cycle_cfg=cycle_cfg, workers=workers,
                              progress=False)
        assert [r.index for r in records] == [0, 1]
        outputs.append(scan.census_jsonl(records, grid,
                                         cycle_cfg=cycle_cfg))
    assert outputs[0] == outputs[1] == outputs[2]

    lines = outputs[0].splitlines()
    assert len(lines) == 3
    header = json.loads(lines[0])
    assert header['format_version'] == '1'
    assert header['config']['grids'] == [grid.to_dict()]
    assert header['config']['cycles']['n_seeds'] == 13
    record = json.loads(lines[1])
    assert sorted(record) == ['anomalies', 'index', 'n_A', 'n_O', 'n_big',
                              'params']
    assert record['params']['c'] == 1.0
    print('>> passed the test :-)')


def test_census_regression():
    print('> running the regression census ...')
    with open(REGRESSION, 'r', encoding='utf-8') as reader:
        config = json.load(reader)
    grids = scan.grids_from_dict(config['census'])
    cfg = IntegratorConfig.from_dict(config['integrator'])
    assert sum(len(g) for g in grids) >= 200
    records = scan.census(grids, cfg)
    summary = scan.census_summary(records)
    print('   {}'.format(json.dumps(summary, indent=2)))
    for record in records:
        assert max(record.n_O, record.n_A) <= 3, record.to_dict()
        assert record.total <= 4, record.to_dict()
    two_one = [r for r in records if (r.n_O, r.n_A) == (2, 1)]
    print('   (2:1) records: {}'.format([r.index for r in two_one]))
    assert two_one, 'no (2:1) distribution in the regression grids'
    assert any(r.params.q_case.case == 2 for r in records)
    assert any(r.params.q_case.case == 3 for r in records)
    print('>> passed the test :-)')


if __name__ == '__main__':

    print_separator('test census')
    test_grid_spec()
    test_symmetric_point()
    test_single_cycle_regime()
    test_two_one_point()
    test_reverse_time_census()
    test_census_determinism()
    print_separator('regression census')
    test_census_regression()
