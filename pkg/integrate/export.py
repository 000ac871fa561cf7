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

"""CSV and JSON-lines export of trajectories"""

import pandas as pd

from utils import to_json_line


def trajectory_frame(trajectory, **columns):
    """Samples as a DataFrame with columns t, x, y plus constant extras."""
    frame = pd.DataFrame({'t': trajectory.t,
                          'x': trajectory.states[:, 0],
                          'y': trajectory.states[:, 1]})
    for name, value in columns.items():
        frame[name] = value
    return frame


def events_frame(trajectory):
    return pd.DataFrame({'t': [e.t for e in trajectory.events],
                         'x': [e.state.x for e in trajectory.events],
                         'y': [e.state.y for e in trajectory.events],
                         'event': [e.kind for e in trajectory.events]})


def trajectory_csv(trajectory):
    return trajectory_frame(trajectory).to_csv(index=False)


def trajectory_jsonl(trajectory):
    """One JSON object per sample, then one per event with an `event` field."""
    lines = [to_json_line({'t': float(t), 'x': float(s[0]), 'y': float(s[1])})
             for t, s in zip(trajectory.t, trajectory.states)]
    lines += [to_json_line({'t': e.t, 'x': e.state.x, 'y': e.state.y,
                            'event': e.kind})
              for e in trajectory.events]
    return '\n'.join(lines) + '\n'
