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

"""Phase portraits: lattice orbits plus separatrices, clipped to a window"""

import dataclasses
import json
import logging
from typing import Dict, List, NamedTuple

import pandas as pd

from bifurcation import separatrices
from integrate import Event, IntegratorConfig, Trajectory
from integrate import integrate, trajectory_frame
from model import Singularity, finite_singularities, saddles

logger = logging.getLogger(__name__)

WINDOW_EXIT = 'WindowExit'


class Window(NamedTuple):
    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def contains(self, s):
        return (self.x_min <= s[0] <= self.x_max and
                self.y_min <= s[1] <= self.y_max)

    def exit_event(self):
        """Terminal event on leaving the rectangle."""
        return Event(WINDOW_EXIT,
                     lambda t, y: max(self.x_min - y[0], y[0] - self.x_max,
                                      self.y_min - y[1], y[1] - self.y_max),
                     direction=1, terminal=True)

    @classmethod
    def from_list(cls, values):
        window = cls(*[float(v) for v in values])
        if not (window.x_min < window.x_max and window.y_min < window.y_max):
            raise ValueError('window {} is empty'.format(list(window)))
        return window


@dataclasses.dataclass(frozen=True)
class PortraitConfig(object):
    """Seed lattice of nx by ny cell centres; 0 disables the lattice."""
    nx: int = 7
    ny: int = 7
    t_max: float = 30.0
    both_directions: bool = True
    separatrices: bool = True

    def __post_init__(self):
        if self.nx < 0 or self.ny < 0:
            raise ValueError('lattice size must be non-negative, got {} x '
                             '{}'.format(self.nx, self.ny))

    def seeds(self, window):
        if self.nx == 0 or self.ny == 0:
            return []
        dx = (window.x_max - window.x_min) / self.nx
        dy = (window.y_max - window.y_min) / self.ny
        return [(window.x_min + (i + 0.5) * dx, window.y_min + (j + 0.5) * dy)
                for j in range(self.ny) for i in range(self.nx)]

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, json_object):
        fields = {f.name: f.type for f in dataclasses.fields(cls)}
        unknown = set(json_object) - set(fields)
        if unknown:
            raise ValueError('unknown portrait keys: {}'.format(
                sorted(unknown)))
        values = {}
        for key, value in json_object.items():
            if fields[key] in (bool, 'bool'):
                values[key] = bool(value)
            elif fields[key] in (int, 'int'):
                values[key] = int(value)
            else:
                values[key] = float(value)
        return cls(**values)


@dataclasses.dataclass
class Portrait(object):
    window: Window
    trajectories: Dict[str, Trajectory]
    singularities: List[Singularity]

    def __len__(self):
        return len(self.trajectories)

    def separatrix_labels(self):
        return [label for label in self.trajectories if label.startswith('S')]


def portrait(p, window, seeding=None, cfg=None):
    """Orbits of p from a lattice of seeds plus all separatrix branches.

    Every orbit stops at the window boundary or after seeding.t_max.
    Labels are `seed<i>+` / `seed<i>-` for forward / backward orbits and
    `S<k>:<branch>` for the branches of the k-th saddle.
    """
    window = window if isinstance(window, Window) else \
        Window.from_list(window)
    seeding = seeding or PortraitConfig()
    cfg = cfg or IntegratorConfig()
    exit_event = window.exit_event()
    trajectories = {}
    directions = (False, True) if seeding.both_directions else (False,)
    for i, seed in enumerate(seeding.seeds(window)):
        for backward in directions:
            label = 'seed{}{}'.format(i, '-' if backward else '+')
            trajectories[label] = integrate(p, seed, cfg, events=[exit_event],
                                            t_max=seeding.t_max,
                                            backward=backward)
    if seeding.separatrices:
        for k, saddle in enumerate(saddles(p)):
            if not window.contains(saddle.location):
                continue
            branches = separatrices(p, saddle, cfg=cfg, t_max=seeding.t_max,
                                    events=[exit_event])
            for key, trajectory in branches.branches.items():
                trajectories['S{}:{}'.format(k, key)] = trajectory
    logger.info('portrait with {} orbits in {}'.format(len(trajectories),
                                                       list(window)))
    return Portrait(window=window, trajectories=trajectories,
                    singularities=finite_singularities(p))


def portrait_frame(portrait):
    """All orbits in one frame with a `curve` label column."""
    frames = [trajectory_frame(trajectory, curve=label)
              for label, trajectory in portrait.trajectories.items()]
    if not frames:
        return pd.DataFrame(columns=['t', 'x', 'y', 'curve'])
    return pd.concat(frames, ignore_index=True)


def portrait_csv(portrait):
    return portrait_frame(portrait).to_csv(index=False)


def portrait_dict(portrait):
    return {'window': list(portrait.window),
            'singularities': [s.to_dict() for s in portrait.singularities],
            'curves': {label: trajectory.states.tolist()
                       for label, trajectory in
                       portrait.trajectories.items()}}


def portrait_json(portrait):
    return json.dumps(portrait_dict(portrait), sort_keys=True)
