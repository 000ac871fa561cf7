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

"""Parameter grids over the rotation parameters"""

import dataclasses
import itertools
import json
from typing import Tuple

import numpy as np

from model import PARAM_IDS, CanonicalParams


def _axis_values(name, spec):
    if isinstance(spec, dict):
        unknown = set(spec) - {'start', 'stop', 'num'}
        if unknown or not {'start', 'stop', 'num'} <= set(spec):
            raise ValueError('axis {} needs exactly start, stop and num, '
                             'got {}'.format(name, sorted(spec)))
        num = int(spec['num'])
        if num < 1:
            raise ValueError('axis {} has num = {}'.format(name, num))
        return tuple(float(v) for v in np.linspace(float(spec['start']),
                                                   float(spec['stop']), num))
    values = tuple(float(v) for v in spec)
    if not values:
        raise ValueError('axis {} is empty'.format(name))
    return values


@dataclasses.dataclass(frozen=True)
class GridSpec(object):
    """Product grid over a subset of {alpha0, alpha2, beta, gamma}.

    `base` fixes q_case, c, d and every rotation parameter that is not an
    axis. Points are enumerated row-major in the order the axes are given,
    so the last axis varies fastest.
    """
    base: CanonicalParams
    axes: Tuple[Tuple[str, Tuple[float, ...]], ...] = ()

    def __post_init__(self):
        names = [name for name, _ in self.axes]
        if len(set(names)) != len(names):
            raise ValueError('repeated grid axis in {}'.format(names))
        for name in names:
            if name not in PARAM_IDS:
                raise ValueError('grid axes must be rotation parameters {}, '
                                 'got {}'.format(PARAM_IDS, name))

    @property
    def shape(self):
        return tuple(len(values) for _, values in self.axes)

    def __len__(self):
        return int(np.prod(self.shape, dtype=int)) if self.axes else 1

    def points(self):
        names = [name for name, _ in self.axes]
        for combo in itertools.product(*[values for _, values in self.axes]):
            yield self.base.replace(**dict(zip(names, combo)))

    def to_dict(self):
        return {'params': self.base.to_dict(),
                'axes': {name: list(values) for name, values in self.axes}}

    @classmethod
    def from_dict(cls, json_object):
        unknown = set(json_object) - {'params', 'axes'}
        if unknown:
            raise ValueError('unknown grid keys: {}'.format(sorted(unknown)))
        base = CanonicalParams.from_dict(json_object['params'])
        axes = tuple((name, _axis_values(name, spec))
                     for name, spec in json_object.get('axes', {}).items())
        return cls(base=base, axes=axes)

    @classmethod
    def from_json_file(cls, json_file):
        with open(json_file, "r", encoding='utf-8') as reader:
            text = reader.read()
        return cls.from_dict(json.loads(text))


def grids_from_dict(json_object):
    """A census block holds either one grid or a list under `grids`."""
    if 'grids' in json_object:
        if set(json_object) != {'grids'}:
            raise ValueError('a grid list cannot be mixed with other keys')
        return [GridSpec.from_dict(g) for g in json_object['grids']]
    return [GridSpec.from_dict(json_object)]
