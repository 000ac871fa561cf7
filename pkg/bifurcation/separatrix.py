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

"""Stable and unstable separatrices of a saddle."""

import dataclasses
import logging
from typing import Dict, Tuple

import numpy as np

from integrate import IntegratorConfig, Trajectory, integrate
from model import State
from model.errors import NotASaddle
from model.field import jacobian
from model.singularities import SADDLE

logger = logging.getLogger(__name__)

UNSTABLE_PLUS = 'u+'
UNSTABLE_MINUS = 'u-'
STABLE_PLUS = 's+'
STABLE_MINUS = 's-'
BRANCHES = (UNSTABLE_PLUS, UNSTABLE_MINUS, STABLE_PLUS, STABLE_MINUS)

DEFAULT_EPS = 1e-7


def _orient(vector):
    """Unit vector with positive x (or positive y when vertical)."""
    v = np.real(vector) / np.linalg.norm(np.real(vector))
    if v[0] < -1e-14 or (abs(v[0]) <= 1e-14 and v[1] < 0):
        v = -v
    return float(v[0]), float(v[1])


def saddle_directions(p, location):
    """(unstable eigenvector, stable eigenvector) at a saddle, +x oriented."""
    values, vectors = np.linalg.eig(jacobian(p, location))
    if not (values.real.max() > 0 > values.real.min()) or \
            np.any(np.abs(values.imag) > 0):
        raise NotASaddle('eigenvalues {} at {} are not of saddle '
                         'type'.format(values, location))
    order = np.argsort(values.real)
    return _orient(vectors[:, order[1]]), _orient(vectors[:, order[0]])


def branch_start(location, vector, sign, eps):
    return State(location[0] + sign * eps * vector[0],
                 location[1] + sign * eps * vector[1])


@dataclasses.dataclass
class SeparatrixSet(object):
    saddle: State
    unstable: Tuple[float, float]
    stable: Tuple[float, float]
    branches: Dict[str, Trajectory]

    def __getitem__(self, key):
        return self.branches[key]


def separatrices(p, saddle, eps=DEFAULT_EPS, cfg=None, t_max=None,
                 events=(), which=BRANCHES):
    """Integrates the four separatrices of `saddle` (a Singularity).

    Unstable branches start at S +- eps * v_u in forward time; stable
    branches start at S +- eps * v_s in reversed time.
    """
    if saddle.kind != SADDLE:
        raise NotASaddle('{} at {} is not a saddle'.format(
            saddle.kind, saddle.location))
    cfg = cfg or IntegratorConfig()
    unstable, stable = saddle_directions(p, saddle.location)
    branches = {}
    for key in which:
        vector = unstable if key[0] == 'u' else stable
        sign = 1.0 if key[1] == '+' else -1.0
        start = branch_start(saddle.location, vector, sign, eps)
        branches[key] = integrate(p, start, cfg, events=events, t_max=t_max,
                                  backward=key[0] == 's', dense=True)
        logger.info('separatrix {} ended with status {} after t = {}'.format(
            key, branches[key].status, branches[key].duration))
    return SeparatrixSet(saddle=saddle.location, unstable=unstable,
                         stable=stable, branches=branches)
