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

script_dir = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.join(script_dir, "../../"))

import model
from model import KuklesParams, QCase
from model.singularities import CENTER, FOCUS, NODE, SADDLE, SADDLE_NODE
from utils import print_separator
from utils import set_random_seed


def kinds(p):
    return [(s.location.x, s.kind) for s in model.finite_singularities(p)]


def test_finite_singularities_presets():
    print('> testing finite singularities of the presets ...')
    assert kinds(model.preset('case1_a2')) == [
        (0.0, CENTER), (1.0, SADDLE), (2.0, CENTER)]
    assert kinds(model.preset('case1_a1')) == [(0.0, CENTER),
                                               (1.0, SADDLE_NODE)]
    assert kinds(model.preset('case2_b0')) == [(0.0, CENTER)]
    assert kinds(model.preset('case2_bm1')) == [(0.0, CENTER)]
    assert kinds(model.preset('case3')) == [(0.0, CENTER), (1.0, SADDLE)]
    assert kinds(model.preset('case1_am1')) == [
        (-1.0, SADDLE), (0.0, CENTER), (1.0, SADDLE)]
    assert len(model.finite_singularities(model.preset('case1_am2'))) == 3
    centers = model.finite_singularities(model.preset('case1_a2', c=0.3))
    assert centers[0].certified and centers[2].certified
    print('>> passed the test :-)')


def test_classification_consistency(samples=2000):
    print('> testing eigenvalue classification ...')
    set_random_seed(11)
    for _ in range(samples):
        p = model.preset(random.choice(sorted(model.PRESETS)),
                         alpha0=random.uniform(-1, 1),
                         alpha2=random.uniform(-1, 1),
                         beta=random.uniform(-1, 1),
                         gamma=random.uniform(-1, 1))
        for s in model.finite_singularities(p):
            l1, l2 = s.eigenvalues
            assert abs((l1 + l2) - s.trace) < 1e-10
            assert abs(l1 * l2 - s.det) < 1e-10
            if s.kind == SADDLE:
                assert s.det < 0 and l1.real < 0 < l2.real
            elif s.kind == FOCUS:
                assert s.det > 0 and abs(l1.imag) > 0
            elif s.kind == NODE:
                assert s.det > 0 and l1.imag == 0
    print('>> passed the test :-)')


def test_foci_after_rotation():
    print('> testing foci created by alpha0 ...')
    found = model.finite_singularities(model.preset('case1_a2', alpha0=0.05))
    assert found[0].kind == FOCUS and found[0].trace > 0
    assert found[2].kind == FOCUS and found[2].trace > 0
    print('>> passed the test :-)')


def test_infinite_directions():
    print('> testing singular directions at infinity ...')
    assert model.infinite_directions(model.preset('case3', gamma=1.0)) == [0.0]
    roots = model.infinite_directions(model.preset('case2_bm1', d=1.0))
    assert len(roots) == 2
    assert abs(roots[0] + 1.0) < 1e-12 and abs(roots[1] - 1.0) < 1e-12
    assert model.infinite_directions(model.preset('case1_a2')) == []
    found = model.infinite_singularities(model.preset('case1_a2'))
    assert len(found) == 1 and found[0].direction is None
    triple = model.infinite_singularities(model.preset('case3', gamma=1.0))
    assert triple[0].multiplicity == 3
    print('>> passed the test :-)')


def test_kukles_infinite_directions(samples=200):
    print('> testing directions at infinity in Kukles coordinates ...')
    set_random_seed(12)
    for _ in range(samples):
        r1 = random.choice((-1, 1)) * random.uniform(0.5, 3.0)
        r2 = random.choice((-1, 1)) * random.uniform(0.5, 3.0)
        a4 = -1.0 / (r1 * r2)
        kp = KuklesParams(a1=-a4 * (r1 + r2), a4=a4,
                          a5=random.uniform(-1, 1), a6=random.uniform(-1, 1),
                          a7=random.uniform(-1, 1))
        original = model.kukles_infinite_directions(kp)
        canonical = model.infinite_directions(model.to_canonical(kp))
        # slopes are invariant under the uniform rescaling of x and y
        assert len(original) == len(canonical)
        for u, v in zip(original, canonical):
            assert abs(u - v) < 1e-8 * (1 + abs(u))
    print('>> passed the test :-)')


if __name__ == '__main__':

    print_separator('test finite singularities')
    test_finite_singularities_presets()
    test_classification_consistency()
    test_foci_after_rotation()
    print_separator('test infinity')
    test_infinite_directions()
    test_kukles_infinite_directions()
