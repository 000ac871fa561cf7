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

"""Cycle-distribution census over parameter grids.

Every grid point is an independent work item; results carry their grid
index and are merged in index order, so the output does not depend on the
number of workers.
"""

import dataclasses
import logging
import multiprocessing
from typing import List

from tqdm import tqdm

from cycles import CycleConfig, Section, big_cycles, count_around
from integrate import IntegratorConfig
from model import CanonicalParams
from model.errors import KuklesError
from utils import get_worker_count, to_json_line

from .grid import GridSpec

logger = logging.getLogger(__name__)

FORMAT_VERSION = '1'


@dataclasses.dataclass(frozen=True)
class DistributionRecord(object):
    index: int
    params: CanonicalParams
    n_O: int
    n_A: int
    n_big: int
    anomalies: List[str] = dataclasses.field(default_factory=list)

    @property
    def distribution(self):
        return '({}:{})'.format(self.n_O, self.n_A)

    @property
    def total(self):
        return self.n_O + self.n_A + self.n_big

    def to_dict(self):
        return {'index': self.index,
                'params': self.params.to_dict(),
                'n_O': self.n_O,
                'n_A': self.n_A,
                'n_big': self.n_big,
                'anomalies': list(self.anomalies)}


def _count_focus(p, which, cfg, cycle_cfg, anomalies):
    try:
        location = Section.for_focus(p, which).anchor
    except ValueError:
        return 0
    try:
        found = count_around(p, which, cfg, cycle_cfg, anomalies)
    except KuklesError as e:
        anomalies.append('{} around {}: {}'.format(type(e).__name__, which, e))
        return 0
    own = [c for c in found if len(c.enclosed) == 1 and c.encloses(location)]
    if len(own) != len(found):
        anomalies.append('{} cycles on the {} ray enclose other singular '
                         'points'.format(len(found) - len(own), which))
    return len(own)


def classify_point(p, cfg=None, cycle_cfg=None, index=0):
    """DistributionRecord of one parameter point."""
    cfg = cfg or IntegratorConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    anomalies = []
    counts = {which: _count_focus(p, which, cfg, cycle_cfg, anomalies)
              for which in ('O', 'A')}
    try:
        n_big = len(big_cycles(p, cfg, cycle_cfg, anomalies))
    except KuklesError as e:
        anomalies.append('{} in the big-cycle search: {}'.format(
            type(e).__name__, e))
        n_big = 0
    record = DistributionRecord(index=index, params=p, n_O=counts['O'],
                                n_A=counts['A'], n_big=n_big,
                                anomalies=anomalies)
    if record.total > 4 or max(record.n_O, record.n_A) > 3:
        logger.warning('point {} exceeds the four-cycle bound: {} + {} '
                       'big'.format(index, record.distribution, n_big))
    return record


def _census_task(task):
    index, p, cfg, cycle_cfg = task
    return classify_point(p, cfg, cycle_cfg, index)


def census(grids, cfg=None, cycle_cfg=None, workers=None, progress=True):
    """Counts cycles around O, around A and around all singular points.

    Args:
        grids: a GridSpec or a list of them; indices run on across grids.
        workers: process count, default get_worker_count(); 1 runs inline.

    Returns:
        list of DistributionRecord sorted by index.
    """
    if isinstance(grids, GridSpec):
        grids = [grids]
    cfg = cfg or IntegratorConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    tasks = []
    for grid in grids:
        for p in grid.points():
            tasks.append((len(tasks), p, cfg, cycle_cfg))
    workers = min(workers or get_worker_count(), max(1, len(tasks)))
    logger.info('census of {} points on {} workers'.format(len(tasks),
                                                           workers))

    if workers == 1:
        records = [_census_task(task) for task in tqdm(
            tasks, desc='census', disable=not progress)]
    else:
        with multiprocessing.Pool(workers) as pool:
            records = list(tqdm(pool.imap_unordered(_census_task, tasks),
                                total=len(tasks), desc='census',
                                disable=not progress))
    records.sort(key=lambda record: record.index)
    return records


def census_header(grids, cfg, cycle_cfg):
    return {'format_version': FORMAT_VERSION,
            'config': {'grids': [g.to_dict() for g in grids],
                       'integrator': cfg.to_dict(),
                       'cycles': cycle_cfg.to_dict()}}


def census_jsonl(records, grids, cfg=None, cycle_cfg=None):
    """Header line followed by one record per line."""
    if isinstance(grids, GridSpec):
        grids = [grids]
    cfg = cfg or IntegratorConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    lines = [to_json_line(census_header(grids, cfg, cycle_cfg))]
    lines += [to_json_line(record.to_dict()) for record in records]
    return '\n'.join(lines) + '\n'


def census_summary(records):
    """Histogram of distributions and the largest counts seen."""
    histogram = {}
    for record in records:
        key = '{}+{}'.format(record.distribution, record.n_big)
        histogram[key] = histogram.get(key, 0) + 1
    return {'points': len(records),
            'distributions': dict(sorted(histogram.items())),
            'max_focus_count': max((max(r.n_O, r.n_A) for r in records),
                                   default=0),
            'max_total': max((r.total for r in records), default=0),
            'anomalous_points': sum(1 for r in records if r.anomalies)}
