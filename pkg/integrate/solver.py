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

"""Adaptive Dormand-Prince integration of the canonical field.

The solver is stepped by hand so that event detection, escape and
equilibrium stops are decided per accepted step. Events are bracketed on
the sign change of the event function between two accepted steps and
refined by bisection on the dense output.
"""

import dataclasses
import logging
import math
from typing import NamedTuple

import numpy as np
from scipy.integrate import OdeSolution, RK45
from scipy.optimize import bisect

from model import State
from model.errors import StepFailure
from model.field import field_xy, jacobian_xy, param_derivative_xy

logger = logging.getLogger(__name__)

COMPLETED = 'Completed'
ESCAPED = 'Escaped'
EQUILIBRIUM = 'EquilibriumReached'
STEP_FAILURE = 'StepFailure'

EQUILIBRIUM_NORM = 1e-13
EQUILIBRIUM_STEPS = 3
MIN_RELATIVE_STEP = 1e-14
BISECTION_STEPS = 80


@dataclasses.dataclass(frozen=True)
class IntegratorConfig(object):
    rtol: float = 1e-9
    atol: float = 1e-12
    max_step: float = 0.1
    t_max: float = 100.0
    escape_radius: float = 1e3
    event_tol: float = 1e-11

    def __post_init__(self):
        if not (self.rtol > 0 and self.atol > 0):
            raise ValueError('rtol and atol must be positive, got {} {}'.format(
                self.rtol, self.atol))
        if not self.escape_radius > 0:
            raise ValueError('escape_radius must be positive, got {}'.format(
                self.escape_radius))
        if not (self.max_step > 0 and self.t_max > 0 and self.event_tol > 0):
            raise ValueError('max_step, t_max and event_tol must be positive')

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def halved(self):
        """Same configuration with both tolerances halved."""
        return self.replace(rtol=0.5 * self.rtol, atol=0.5 * self.atol)

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, json_object):
        allowed = {f.name for f in dataclasses.fields(cls)}
        unknown = set(json_object) - allowed
        if unknown:
            raise ValueError('unknown integrator keys: {}'.format(
                sorted(unknown)))
        return cls(**{k: float(v) for k, v in json_object.items()})


class Event(object):
    """Scalar event g(t, y) located on sign changes.

    `direction` is +1 for crossings where g increases in integration
    order, -1 for decreasing crossings and 0 for both. `accept` filters
    refined crossings by state, e.g. to keep only one half of a line.
    """

    def __init__(self, name, function, direction=0, terminal=False,
                 accept=None):
        assert direction in (-1, 0, 1), \
            'direction must be -1, 0 or 1, got {}'.format(direction)
        self.name = name
        self.function = function
        self.direction = direction
        self.terminal = terminal
        self.accept = accept

    def __call__(self, t, y):
        return self.function(t, y)

    def crossed(self, g_old, g_new):
        if self.direction >= 0 and g_old < 0 <= g_new:
            return True
        if self.direction <= 0 and g_old > 0 >= g_new:
            return True
        return False


def line_event(name, point, normal, direction=0, terminal=True, accept=None):
    """Event on the line through `point` with the given normal."""
    px, py = point
    nx, ny = normal
    return Event(name, lambda t, y: nx * (y[0] - px) + ny * (y[1] - py),
                 direction=direction, terminal=terminal, accept=accept)


def escape_event(radius):
    return Event(ESCAPED, lambda t, y: math.hypot(y[0], y[1]) - radius,
                 direction=1, terminal=True)


class EventRecord(NamedTuple):
    t: float
    state: State
    kind: str
    full: np.ndarray


class Trajectory(object):
    """Accepted steps of one integration run plus located events."""

    def __init__(self, t, states, events, status, solution=None, final=None):
        self.t = np.asarray(t)
        self.states = np.asarray(states).reshape(-1, 2)
        self.events = events
        self.status = status
        self.solution = solution
        # Full (possibly augmented) state at the last sample.
        self.final = final
        self.trace_integral = None
        self.sensitivity = None

    def __len__(self):
        return len(self.t)

    @property
    def samples(self):
        return [(float(t), State(float(s[0]), float(s[1])))
                for t, s in zip(self.t, self.states)]

    @property
    def end(self):
        return State(float(self.states[-1, 0]), float(self.states[-1, 1]))

    @property
    def duration(self):
        return float(self.t[-1] - self.t[0])

    def events_named(self, name):
        return [e for e in self.events if e.kind == name]

    def first_event(self, name):
        for e in self.events:
            if e.kind == name:
                return e
        return None

    def sample_dense(self, n, start=None, stop=None):
        """n states evenly spaced in time from the dense output."""
        assert self.solution is not None, \
            'trajectory was integrated without dense output'
        start = self.t[0] if start is None else start
        stop = self.t[-1] if stop is None else stop
        times = np.linspace(start, stop, n)
        return np.asarray(self.solution(times))[:2].T


def _refine(event, sol, t_old, t_new, g_old, g_new, event_tol):
    fn = lambda tt: event(tt, sol(tt))
    lo, hi = (t_old, t_new) if t_old < t_new else (t_new, t_old)
    f_lo, f_hi = fn(lo), fn(hi)
    if f_lo == 0.0:
        te = lo
    elif f_hi == 0.0:
        te = hi
    elif f_lo * f_hi > 0.0:
        # dense output and step endpoint disagree in the last bits
        te = t_new
    else:
        te = bisect(fn, lo, hi, xtol=1e-15, maxiter=BISECTION_STEPS,
                    disp=False)
    ye = sol(te)
    residual = abs(fn(te))
    if residual > event_tol:
        logger.warning('event {} refined only to {:.3e} at t = {}'.format(
            event.name, residual, te))
    return te, ye


def _drive(fun, t0, y0, t_bound, cfg, events, dense):
    solver = RK45(fun, t0, np.asarray(y0, dtype=float), t_bound,
                  max_step=cfg.max_step, rtol=cfg.rtol, atol=cfg.atol)
    sign = 1.0 if t_bound >= t0 else -1.0
    events = list(events) + [escape_event(cfg.escape_radius)]
    ts = [t0]
    ys = [np.array(y0, dtype=float)]
    interpolants = []
    records = []
    g_old = [ev(t0, ys[0]) for ev in events]
    quiet = 0
    status = COMPLETED

    while solver.status == 'running':
        message = solver.step()
        if solver.status == 'failed' or (
                solver.step_size is not None and
                solver.step_size < MIN_RELATIVE_STEP * abs(solver.t)):
            trajectory = Trajectory(ts, [y[:2] for y in ys], records,
                                    STEP_FAILURE, final=ys[-1])
            error = StepFailure('step size collapsed at t = {}: {}'.format(
                solver.t, message))
            error.trajectory = trajectory
            raise error
        t_old, t_new, y_new = solver.t_old, solver.t, solver.y
        g_new = [ev(t_new, y_new) for ev in events]
        sol = None
        hits = []
        for ev, ga, gb in zip(events, g_old, g_new):
            if not ev.crossed(ga, gb):
                continue
            if sol is None:
                sol = solver.dense_output()
            te, ye = _refine(ev, sol, t_old, t_new, ga, gb, cfg.event_tol)
            if ev.accept is not None and not ev.accept(ye):
                continue
            hits.append((sign * te, te, ye, ev))
        g_old = g_new
        hits.sort(key=lambda hit: hit[0])

        stop_at = None
        for _, te, ye, ev in hits:
            records.append(EventRecord(float(te), State(float(ye[0]),
                                                        float(ye[1])),
                                       ev.name, ye))
            if ev.terminal:
                stop_at = (te, ye)
                if ev.name == ESCAPED:
                    status = ESCAPED
                break

        if dense:
            if sol is None:
                sol = solver.dense_output()
            interpolants.append(sol)
        if stop_at is not None:
            ts.append(stop_at[0])
            ys.append(np.asarray(stop_at[1]))
            break
        ts.append(t_new)
        ys.append(np.array(y_new))

        # solver.f holds the right-hand side at the accepted point
        if math.hypot(solver.f[0], solver.f[1]) < EQUILIBRIUM_NORM:
            quiet += 1
            if quiet >= EQUILIBRIUM_STEPS:
                status = EQUILIBRIUM
                break
        else:
            quiet = 0

    solution = OdeSolution(ts, interpolants) if dense and interpolants \
        else None
    return Trajectory(ts, [y[:2] for y in ys], records, status,
                      solution=solution, final=ys[-1])


def _bound(t_max, backward):
    if not t_max > 0:
        raise ValueError('integration horizon must be positive, got {}'.format(
            t_max))
    return -t_max if backward else t_max


def integrate(p, s0, cfg=None, events=(), t_max=None, backward=False,
              dense=False):
    """Integrates the canonical field from s0.

    Args:
        p: CanonicalParams.
        s0: initial state (x, y).
        cfg: IntegratorConfig; defaults apply when None.
        events: iterable of Event.
        t_max: horizon overriding cfg.t_max.
        backward: integrate in reversed time.
        dense: keep the dense output as `trajectory.solution`.

    Returns:
        Trajectory. Raises StepFailure when the step size collapses.
    """
    cfg = cfg or IntegratorConfig()
    if not all(math.isfinite(v) for v in s0):
        raise ValueError('initial state must be finite, got {}'.format(s0))

    def fun(t, y):
        return np.array(field_xy(p, y[0], y[1]))

    horizon = cfg.t_max if t_max is None else t_max
    return _drive(fun, 0.0, [float(s0[0]), float(s0[1])],
                  _bound(horizon, backward), cfg, events, dense)


def integrate_with_variational(p, s0, cfg=None, T=None, events=(),
                               sensitivity=None, backward=False, dense=False):
    """Integrates the state together with its fundamental matrix.

    The augmented vector is (x, y, M00, M01, M10, M11, int trace J dt),
    followed by (dx/dmu, dy/dmu) when `sensitivity` names a rotation
    parameter mu. All components share the error control.

    Returns:
        (trajectory, M) with M the fundamental matrix at the final sample
        (the terminal event when one fired). The trace integral and the
        parameter sensitivity are attached to the trajectory.
    """
    cfg = cfg or IntegratorConfig()
    horizon = cfg.t_max if T is None else T

    def fun(t, y):
        x, v = y[0], y[1]
        big_p, big_q = field_xy(p, x, v)
        (_, _), (a, b) = jacobian_xy(p, x, v)
        out = [big_p, big_q,
               y[4], y[5],
               a * y[2] + b * y[4], a * y[3] + b * y[5],
               b]
        if sensitivity is not None:
            _, dq = param_derivative_xy(sensitivity, x, v)
            out.append(y[8])
            out.append(a * y[7] + b * y[8] + dq)
        return np.array(out)

    y0 = [float(s0[0]), float(s0[1]), 1.0, 0.0, 0.0, 1.0, 0.0]
    if sensitivity is not None:
        y0 += [0.0, 0.0]
    trajectory = _drive(fun, 0.0, y0, _bound(horizon, backward), cfg,
                        events, dense)
    final = trajectory.final
    monodromy = np.array(final[2:6]).reshape(2, 2)
    trajectory.trace_integral = float(final[6])
    if sensitivity is not None:
        trajectory.sensitivity = np.array(final[7:9])
    return trajectory, monodromy
