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

"""Newton refinement, counting and big-cycle detection of limit cycles"""

import logging
import math

import numpy as np
from scipy.optimize import brentq

from integrate import IntegratorConfig
from model.errors import Degenerate, NewtonDiverged, NoReturn, Timeout
from model.field import field_xy
from model.singularities import finite_singularities

from .limit_cycle import LimitCycle, stability_of, winding_number
from .return_map import first_return
from .section import CycleConfig, Section

logger = logging.getLogger(__name__)


def nontrivial_multiplier(monodromy, flow):
    """Eigenvalue of the monodromy matrix whose eigenvector is not along the flow."""
    values, vectors = np.linalg.eig(monodromy)
    flow = np.asarray(flow, dtype=float)
    flow = flow / np.linalg.norm(flow)
    alignment = [abs(vectors[0, i].real * flow[1] - vectors[1, i].real * flow[0])
                 / np.linalg.norm(vectors[:, i].real) for i in range(2)]
    trivial = int(np.argmin(alignment))
    if abs(values[trivial] - 1.0) > 1e-4:
        logger.warning('trivial multiplier {} deviates from 1'.format(
            values[trivial]))
    return float(values[1 - trivial].real)


def cycle_at(p, sec, r, cfg=None, cycle_cfg=None):
    """LimitCycle through sec.point(r), classified from its monodromy."""
    cycle_cfg = cycle_cfg or CycleConfig()
    result = first_return(p, sec, r, cfg, cycle_cfg, variational=True,
                          dense=True)
    s0 = sec.point(r)
    multiplier = nontrivial_multiplier(result.monodromy,
                                       field_xy(p, s0.x, s0.y))
    liouville = math.exp(result.trajectory.trace_integral)
    if abs(multiplier - liouville) > 1e-6 * max(1.0, liouville):
        logger.warning('multiplier {} disagrees with exp(int trace) {}'.format(
            multiplier, liouville))
    polyline = result.trajectory.sample_dense(cycle_cfg.winding_samples)
    enclosed = tuple(s.location for s in finite_singularities(p)
                     if abs(winding_number(polyline, s.location)) == 1)
    amplitude = float(np.max(np.hypot(polyline[:, 0] - sec.anchor.x,
                                      polyline[:, 1] - sec.anchor.y)))
    return LimitCycle(section_coord=float(r), period=float(result.period),
                      multiplier=multiplier,
                      stability=stability_of(multiplier, cycle_cfg.mult_tol),
                      enclosed=enclosed, amplitude=amplitude,
                      anchor=sec.anchor, residual=abs(result.r - r),
                      polyline=polyline)


def find_cycle(p, sec, r_guess, cfg=None, cycle_cfg=None):
    """Newton iteration on r -> P(r) - r with the variational derivative.

    Converges when |P(r) - r| < newton_tol; the integrator tolerances must
    resolve P well below newton_tol.
    """
    cycle_cfg = cycle_cfg or CycleConfig()
    r = float(r_guess)
    for iteration in range(cycle_cfg.max_newton):
        if not 0 < r <= sec.limit:
            raise NewtonDiverged('Newton iterate {} left the ray (0, {}]'.format(
                r, sec.limit))
        result = first_return(p, sec, r, cfg, cycle_cfg, variational=True)
        residual = result.r - r
        slope = result.derivative - 1.0
        if abs(slope) < cycle_cfg.mult_tol:
            raise Degenerate('return map derivative {} at r = {} is within '
                             '{} of 1'.format(result.derivative, r,
                                              cycle_cfg.mult_tol))
        if abs(residual) < cycle_cfg.newton_tol:
            logger.debug('Newton converged to r = {} in {} iterations'.format(
                r, iteration))
            break
        r -= residual / slope
    else:
        raise NewtonDiverged('Newton did not converge from r = {} in {} '
                             'iterations'.format(r_guess,
                                                 cycle_cfg.max_newton))
    return cycle_at(p, sec, r, cfg, cycle_cfg)


def _displacements(p, sec, radii, cfg, cycle_cfg, anomalies):
    values = []
    for r in radii:
        try:
            d = first_return(p, sec, r, cfg, cycle_cfg).r - r
        except (NoReturn, Timeout) as e:
            anomalies.append('{} at r = {}: {}'.format(type(e).__name__, r, e))
            values.append(None)
            continue
        if abs(d) < cycle_cfg.disp_tol * max(1.0, r):
            d = 0.0
        values.append(d)
    return values


def _brackets(radii, values):
    """Adjacent sign changes of d(r), skipping zero-level seeds."""
    brackets = []
    last = None
    for r, d in zip(radii, values):
        if d is None:
            last = None
            continue
        if d == 0.0:
            continue
        if last is not None and (last[1] > 0) != (d > 0):
            brackets.append((last[0], r))
        last = (r, d)
    return brackets


def count_cycles(p, sec, r_min, r_max, n_seeds, cfg=None, cycle_cfg=None,
                 anomalies=None):
    """Cycles crossing the ray between r_min and r_max, ordered by r.

    NoReturn and Timeout seeds break brackets and are appended to
    `anomalies` when a list is given.
    """
    if not r_min > 0:
        raise ValueError('r_min must be positive, got {}'.format(r_min))
    cfg = cfg or IntegratorConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    anomalies = [] if anomalies is None else anomalies
    radii = np.linspace(r_min, min(r_max, sec.limit), n_seeds)
    values = _displacements(p, sec, radii, cfg, cycle_cfg, anomalies)

    def d(r):
        return first_return(p, sec, r, cfg, cycle_cfg).r - r

    cycles = []
    for lo, hi in _brackets(radii, values):
        try:
            root = brentq(d, lo, hi, xtol=0.01 * cycle_cfg.newton_tol)
        except (NoReturn, Timeout, ValueError) as e:
            anomalies.append('bracket [{}, {}] lost: {}'.format(lo, hi, e))
            continue
        try:
            cycle = find_cycle(p, sec, root, cfg, cycle_cfg)
        except (Degenerate, NewtonDiverged, NoReturn, Timeout) as e:
            logger.info('keeping bracketed root {} ({})'.format(root, e))
            try:
                cycle = cycle_at(p, sec, root, cfg, cycle_cfg)
            except (NoReturn, Timeout) as e:
                anomalies.append('cycle at r = {} lost: {}'.format(root, e))
                continue
        if cycles and abs(cycle.section_coord - cycles[-1].section_coord) < \
                10 * cycle_cfg.newton_tol:
            continue
        cycles.append(cycle)

    cycles.sort(key=lambda c: c.section_coord)
    for message in stability_breaks(cycles):
        logger.warning(message)
        anomalies.append(message)
    return cycles


def stability_breaks(cycles):
    """Nested hyperbolic cycles alternate in stability; lists the breaks."""
    return ['adjacent cycles at r = {} and {} are both {}'.format(
        inner.section_coord, outer.section_coord, inner.stability)
        for inner, outer in zip(cycles, cycles[1:])
        if inner.stability == outer.stability]


def count_around(p, which, cfg=None, cycle_cfg=None, anomalies=None):
    """count_cycles on the default ray of focus O or A."""
    cycle_cfg = cycle_cfg or CycleConfig()
    sec = Section.for_focus(p, which)
    span = sec.limit if math.isfinite(sec.limit) else 1.0
    return count_cycles(p, sec, cycle_cfg.r_min_fraction * span,
                        cycle_cfg.r_max_fraction * span, cycle_cfg.n_seeds,
                        cfg, cycle_cfg, anomalies)


def big_cycles(p, cfg=None, cycle_cfg=None, anomalies=None):
    """Cycles enclosing every finite singular point."""
    cfg = cfg or IntegratorConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    sec = Section.for_big_cycle(p)
    locations = [s.location for s in finite_singularities(p)]
    radii = np.geomspace(cycle_cfg.r_outer_min, 0.5 * cfg.escape_radius,
                         cycle_cfg.big_seeds)
    search_cfg = cycle_cfg.replace(t_max=cycle_cfg.big_t_max)
    anomalies = [] if anomalies is None else anomalies
    values = _displacements(p, sec, radii, cfg, search_cfg, anomalies)

    def d(r):
        return first_return(p, sec, r, cfg, search_cfg).r - r

    found = []
    for lo, hi in _brackets(radii, values):
        try:
            root = brentq(d, lo, hi, xtol=0.01 * cycle_cfg.newton_tol,
                          rtol=1e-14)
            cycle = cycle_at(p, sec, root, cfg, search_cfg)
        except (NoReturn, Timeout, ValueError) as e:
            anomalies.append('big bracket [{}, {}] lost: {}'.format(lo, hi, e))
            continue
        if all(cycle.encloses(loc) for loc in locations):
            found.append(cycle)
    return found


def detect_big_cycle(p, cfg=None, cycle_cfg=None, anomalies=None):
    """Outermost cycle around all finite singular points, or None."""
    found = big_cycles(p, cfg, cycle_cfg, anomalies)
    return found[-1] if found else None
