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

"""Tables and summaries of continuation branches and separatrices"""

import pandas as pd

from integrate import trajectory_frame

BRANCH_COLUMNS = ['param', 'r', 'period', 'multiplier', 'stability']


def branch_frame(branch):
    return pd.DataFrame([{'param': value,
                          'r': cycle.section_coord,
                          'period': cycle.period,
                          'multiplier': cycle.multiplier,
                          'stability': cycle.stability}
                         for value, cycle in branch.points],
                        columns=BRANCH_COLUMNS)


def branch_csv(branch):
    return branch_frame(branch).to_csv(index=False)


def branch_summary(branch):
    return {'param_id': branch.param_id,
            'points': len(branch.points),
            'termination': branch.termination,
            'param_span': [float(branch.params.min()),
                           float(branch.params.max())],
            'folds': [{'param': f.param_value, 'r': f.section_coord,
                       'multiplier': f.multiplier} for f in branch.folds]}


def separatrix_frame(separatrix_set):
    """All branches stacked, with a `branch` column in u+, u-, s+, s-."""
    frames = [trajectory_frame(trajectory, branch=key)
              for key, trajectory in separatrix_set.branches.items()]
    return pd.concat(frames, ignore_index=True)


def separatrix_csv(separatrix_set):
    return separatrix_frame(separatrix_set).to_csv(index=False)
