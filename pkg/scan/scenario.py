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

"""Scripted rotation of the a = 2 field through its bifurcation sequence.

Starting from the reversible system with two centers, the rotation
parameters are input one at a time: alpha0 makes both foci unstable,
beta = alpha0 makes O weak, alpha2 < 0 brings a big cycle from infinity
which contracts onto the separatrix loops, and beta and gamma then shape
the cycles around O. Each stage checks what the previous stages left
behind and raises StageFailed at the first unmet condition.
"""

import dataclasses
import json
import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from bifurcation import HomoclinicConfig, StepConfig
from bifurcation import continue_cycle, eight_loop_find, hopf_value
from cycles import STABLE, UNSTABLE, CycleConfig, Section
from cycles import count_around, detect_big_cycle, displacement
from integrate import IntegratorConfig
from model import ALPHA0, ALPHA2, BETA, GAMMA
from model import classify, preset, trace_at
from model.errors import KuklesError, StageFailed

from .census import FORMAT_VERSION, census
from .grid import GridSpec

logger = logging.getLogger(__name__)

FORWARD = 'forward'
REVERSE = 'reverse'

PASSED = 'passed'

FORWARD_STAGES = ('centers', 'alpha0_foci', 'beta_ah', 'big_cycle',
                  'eight_loop', 'post_eight_loop', 'beta_fold', 'gamma_hopf',
                  'gamma_fold')
REVERSE_STAGES = ('centers', 'alpha2_input', 'beta_input', 'alpha0_hopf',
                  'big_cycle', 'eight_loop', 'post_eight_loop', 'beta_fold',
                  'gamma_hopf', 'gamma_fold')

# a stage runs only after one stage of each group has passed
STAGE_REQUIRES = {
    'alpha0_foci': (('centers',),),
    'beta_ah': (('alpha0_foci',),),
    'alpha2_input': (('centers',),),
    'beta_input': (('alpha2_input',),),
    'alpha0_hopf': (('beta_input',),),
    'big_cycle': (('beta_ah', 'alpha0_hopf'),),
    'eight_loop': (('big_cycle',),),
    'post_eight_loop': (('eight_loop',),),
    'beta_fold': (('post_eight_loop',),),
    'gamma_hopf': (('beta_fold',),),
    'gamma_fold': (('gamma_hopf',),),
}

# abscissae of O and A for a = 2
X_O, X_A = 0.0, 2.0
# trace and Hopf identities are exact up to rounding
IDENTITY_TOL = 1e-12


@dataclasses.dataclass(frozen=True)
class ScenarioConfig(object):
    """Inputs of the scripted rotation.

    Offsets and spans are relative to alpha0 where noted, so the script
    scales with the size of the rotation.
    """
    alpha0: float = 0.05
    c: float = 0.0
    d: float = 0.0
    order: str = FORWARD
    stages: Optional[Tuple[str, ...]] = None
    big_cycle_alpha2: float = -0.01
    alpha2_bracket: Tuple[float, float] = (-0.5, 0.0)
    # alpha2 past the lower loop value, in units of alpha0
    post_loop_fraction: float = 0.1
    # beta continuation range above beta^AH, in units of alpha0
    beta_span: float = 0.5
    gamma_offset: float = 1e-3
    gamma_span: float = 0.01
    sign_probe: float = 1e-3

    def __post_init__(self):
        if self.order not in (FORWARD, REVERSE):
            raise ValueError('order must be {} or {}, got {}'.format(
                FORWARD, REVERSE, self.order))
        if not self.alpha0 > 0:
            raise ValueError('the script needs alpha0 > 0, got {}'.format(
                self.alpha0))
        if not self.big_cycle_alpha2 < 0:
            raise ValueError('big_cycle_alpha2 must be negative')
        known = set(FORWARD_STAGES) | set(REVERSE_STAGES)
        for stage in self.stages or ():
            if stage not in known:
                raise ValueError('unknown stage {}'.format(stage))

    @property
    def stage_names(self):
        if self.stages is not None:
            return tuple(self.stages)
        return FORWARD_STAGES if self.order == FORWARD else REVERSE_STAGES

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        output = dataclasses.asdict(self)
        output['alpha2_bracket'] = list(self.alpha2_bracket)
        output['stages'] = list(self.stage_names)
        return output

    @classmethod
    def from_dict(cls, json_object):
        allowed = {f.name for f in dataclasses.fields(cls)}
        unknown = set(json_object) - allowed
        if unknown:
            raise ValueError('unknown scenario keys: {}'.format(
                sorted(unknown)))
        values = dict(json_object)
        for key in allowed - {'order', 'stages', 'alpha2_bracket'}:
            if key in values:
                values[key] = float(values[key])
        if 'alpha2_bracket' in values:
            values['alpha2_bracket'] = tuple(
                float(v) for v in values['alpha2_bracket'])
        if values.get('stages') is not None:
            values['stages'] = tuple(values['stages'])
        return cls(**values)

    @classmethod
    def from_json_file(cls, json_file):
        with open(json_file, "r", encoding='utf-8') as reader:
            text = reader.read()
        return cls.from_dict(json.loads(text))


@dataclasses.dataclass
class StageResult(object):
    name: str
    params: Dict[str, Any]
    values: Dict[str, Any]
    status: str = PASSED
    cycles: Dict[str, List[Dict[str, Any]]] = dataclasses.field(
        default_factory=dict)

    def to_dict(self):
        return {'name': self.name, 'status': self.status,
                'params': self.params, 'values': self.values,
                'cycles': self.cycles}


@dataclasses.dataclass
class ScenarioReport(object):
    config: Dict[str, Any]
    stages: List[StageResult]

    def __getitem__(self, name):
        for stage in self.stages:
            if stage.name == name:
                return stage
        raise KeyError(name)

    def __contains__(self, name):
        return any(stage.name == name for stage in self.stages)

    def to_dict(self):
        return {'format_version': FORMAT_VERSION,
                'config': self.config,
                'stages': [stage.to_dict() for stage in self.stages]}


class _Context(object):
    """Mutable state threaded through the stages."""

    def __init__(self, scfg, cfg, cycle_cfg, step_cfg, hcfg):
        self.scfg = scfg
        self.cfg = cfg
        self.cycle_cfg = cycle_cfg
        self.step_cfg = step_cfg
        self.hcfg = hcfg
        self.p = preset('case1_a2', c=scfg.c, d=scfg.d)
        self.passed = {}
        self.found = {}


def _require(stage, condition, reason, *args):
    if not condition:
        raise StageFailed(stage, reason.format(*args))


def _result(ctx, name, values, **kwargs):
    return StageResult(name=name, params=ctx.p.to_dict(), values=values,
                       **kwargs)


def _stage_centers(ctx, name):
    p = ctx.p
    for label, x in (('O', X_O), ('A', X_A)):
        point = classify(p, x)
        _require(name, point.certified,
                 '{} is a {}, not a reversible center', label, point.kind)
    sec = Section.for_focus(p, 'O')
    d = displacement(p, sec, 0.05 * sec.limit, ctx.cfg, ctx.cycle_cfg)
    _require(name, abs(d) < ctx.cycle_cfg.disp_tol,
             'return map at O moved by {}', d)
    return _result(ctx, name, {'trace_O': trace_at(p, X_O),
                               'trace_A': trace_at(p, X_A),
                               'displacement_O': d})


def _stage_alpha0_foci(ctx, name):
    ctx.p = ctx.p.with_param(ALPHA0, ctx.scfg.alpha0)
    values = {}
    for label, x in (('O', X_O), ('A', X_A)):
        point = classify(ctx.p, x)
        _require(name, point.trace > 0, '{} has trace {} after alpha0',
                 label, point.trace)
        values['trace_' + label] = point.trace
        values['kind_' + label] = point.kind
    return _result(ctx, name, values)


def _weak_focus_flip(ctx, name, free_param, value):
    """Displacement at a small radius on both sides of the Hopf value."""
    signs = []
    for shift in (-ctx.scfg.sign_probe, ctx.scfg.sign_probe):
        shifted = ctx.p.with_param(free_param, value + shift)
        sec = Section.for_focus(shifted, 'O')
        signs.append(float(np.sign(displacement(shifted, sec, 0.01,
                                                ctx.cfg, ctx.cycle_cfg))))
    _require(name, signs[0] * signs[1] < 0,
             'displacement at O keeps its sign across {} = {}: {}',
             free_param, value, signs)
    return signs


def _stage_hopf_at_o(ctx, name, free_param, expected):
    report = hopf_value(ctx.p, 'O', free_param, ctx.cfg, ctx.cycle_cfg)
    value = report.critical_param_value
    _require(name, abs(value - expected) < IDENTITY_TOL,
             '{} = {} differs from {}', free_param, value, expected)
    signs = _weak_focus_flip(ctx, name, free_param, value)
    ctx.p = ctx.p.with_param(free_param, value)
    trace_a = trace_at(ctx.p, X_A)
    return _result(ctx, name, {'critical_value': value,
                               'free_param': free_param,
                               'side': report.side,
                               'trace_A': trace_a,
                               'displacement_signs': signs})


def _stage_beta_ah(ctx, name):
    result = _stage_hopf_at_o(ctx, name, BETA, ctx.p.alpha0)
    _require(name, result.values['trace_A'] > 0,
             'A lost its instability, trace {}', result.values['trace_A'])
    return result


def _stage_alpha2_input(ctx, name):
    ctx.p = ctx.p.with_param(ALPHA2, ctx.scfg.big_cycle_alpha2)
    trace_a = trace_at(ctx.p, X_A)
    _require(name, trace_a < 0, 'A has trace {} after alpha2', trace_a)
    return _result(ctx, name, {'trace_O': trace_at(ctx.p, X_O),
                               'trace_A': trace_a})


def _stage_beta_input(ctx, name):
    ctx.p = ctx.p.with_param(BETA, ctx.scfg.alpha0)
    trace_o = trace_at(ctx.p, X_O)
    _require(name, trace_o < 0, 'O has trace {} after beta', trace_o)
    return _result(ctx, name, {'trace_O': trace_o,
                               'trace_A': trace_at(ctx.p, X_A)})


def _stage_alpha0_hopf(ctx, name):
    return _stage_hopf_at_o(ctx, name, ALPHA0, ctx.p.beta)


def _stage_big_cycle(ctx, name):
    ctx.p = ctx.p.with_param(ALPHA2, ctx.scfg.big_cycle_alpha2)
    anomalies = []
    big = detect_big_cycle(ctx.p, ctx.cfg, ctx.cycle_cfg, anomalies)
    _require(name, big is not None, 'no big cycle at alpha2 = {}',
             ctx.p.alpha2)
    _require(name, big.stability == STABLE, 'big cycle is {}', big.stability)
    flat = detect_big_cycle(ctx.p.with_param(ALPHA2, 0.0), ctx.cfg,
                            ctx.cycle_cfg)
    _require(name, flat is None, 'big cycle already present at alpha2 = 0')
    ctx.found['big'] = big
    return _result(ctx, name, {'alpha2': ctx.p.alpha2, 'onset_above': 0.0,
                               'anomalies': anomalies},
                   cycles={'big': [big.to_dict()]})


def _stage_eight_loop(ctx, name):
    try:
        loop = eight_loop_find(ctx.p, ctx.scfg.alpha2_bracket, ctx.cfg,
                               ctx.hcfg)
    except KuklesError as e:
        raise StageFailed(name, str(e))
    for side, residual in loop.residuals.items():
        _require(name, abs(residual) <= ctx.hcfg.gap_tol,
                 '{} gap {} not refined', side, residual)
    _require(name, max(loop.as_tuple()) < ctx.p.alpha2,
             'loops at {} do not lie below the big cycle value {}',
             loop.as_tuple(), ctx.p.alpha2)
    ctx.found['eight_loop'] = loop
    return _result(ctx, name, loop.to_dict())


def _inventory(ctx, anomalies):
    around = {}
    for which in ('O', 'A'):
        around[which] = count_around(ctx.p, which, ctx.cfg, ctx.cycle_cfg,
                                     anomalies)
    return around


def _stage_post_eight_loop(ctx, name):
    loop = ctx.found['eight_loop']
    value = min(loop.as_tuple()) - ctx.scfg.post_loop_fraction * \
        ctx.scfg.alpha0
    ctx.p = ctx.p.with_param(ALPHA2, value)
    anomalies = []
    around = _inventory(ctx, anomalies)
    stable_o = [c for c in around['O'] if c.stability == STABLE]
    _require(name, stable_o, 'no stable cycle around O at alpha2 = {}', value)
    ctx.found['gamma1_o'] = stable_o[-1]
    stable_a = [c for c in around['A'] if c.stability == STABLE]
    _require(name, stable_a, 'no stable cycle around A at alpha2 = {}, '
             'trace at A is {}', value, trace_at(ctx.p, X_A))
    ctx.found['gamma1_a'] = stable_a[-1]
    return _result(ctx, name, {'alpha2': value,
                               'n_O': len(around['O']),
                               'n_A': len(around['A']),
                               'anomalies': anomalies},
                   cycles={k: [c.to_dict() for c in v]
                           for k, v in around.items()})


def _stage_beta_fold(ctx, name):
    base = ctx.p.beta
    branch = continue_cycle(ctx.p, ctx.found['gamma1_o'], BETA,
                            (base, base + ctx.scfg.beta_span *
                             ctx.scfg.alpha0),
                            ctx.step_cfg, ctx.cfg, ctx.cycle_cfg)
    _require(name, branch.folds, 'branch from Gamma1 ended ({}) without a '
             'fold', branch.termination)
    fold = branch.folds[0]
    _require(name, abs(fold.multiplier - 1.0) < 1e-3,
             'fold multiplier {} is not 1', fold.multiplier)
    _require(name, fold.param_value > base,
             'fold at beta = {} is not past beta^AH = {}', fold.param_value,
             base)
    unstable = [c for value, c in branch.points if c.stability == UNSTABLE]
    middle = base + 0.5 * (fold.param_value - base)
    ctx.p = ctx.p.with_param(BETA, middle)
    anomalies = []
    around_o = count_around(ctx.p, 'O', ctx.cfg, ctx.cycle_cfg, anomalies)
    return _result(ctx, name, {'fold_beta': fold.param_value,
                               'fold_r': fold.section_coord,
                               'fold_multiplier': fold.multiplier,
                               'termination': branch.termination,
                               'branch_points': len(branch),
                               'unstable_points': len(unstable),
                               'beta': middle,
                               'n_O': len(around_o),
                               'anomalies': anomalies},
                   cycles={'O': [c.to_dict() for c in around_o]})


def _stage_gamma_hopf(ctx, name):
    expected = ctx.p.beta - ctx.p.alpha0
    report = hopf_value(ctx.p, 'O', GAMMA, ctx.cfg, ctx.cycle_cfg)
    value = report.critical_param_value
    _require(name, abs(value - expected) < IDENTITY_TOL,
             'gamma = {} differs from beta - alpha0 = {}', value, expected)
    _require(name, report.birth_direction != 0,
             'no side of gamma = {} gives birth to a cycle at O', value)
    ctx.found['gamma_hopf'] = report
    ctx.p = ctx.p.with_param(GAMMA, value + report.birth_direction *
                             ctx.scfg.gamma_offset)
    around_o = count_around(ctx.p, 'O', ctx.cfg, ctx.cycle_cfg)
    _require(name, len(around_o) >= 3, 'no third cycle around O at gamma = '
             '{}: {} cycles', ctx.p.gamma, len(around_o))
    ctx.found['gamma3_o'] = around_o[0]
    return _result(ctx, name, {'critical_value': value, 'side': report.side,
                               'birth_direction': report.birth_direction,
                               'gamma': ctx.p.gamma,
                               'n_O': len(around_o)},
                   cycles={'O': [c.to_dict() for c in around_o]})


def _stage_gamma_fold(ctx, name):
    _require(name, 'gamma3_o' in ctx.found,
             'no third cycle around O to continue')
    report = ctx.found['gamma_hopf']
    hopf = report.critical_param_value
    span = ctx.scfg.gamma_span * report.birth_direction
    branch = continue_cycle(ctx.p, ctx.found['gamma3_o'], GAMMA,
                            (hopf, hopf + span), ctx.step_cfg, ctx.cfg,
                            ctx.cycle_cfg,
                            direction=report.birth_direction)
    _require(name, branch.folds, 'branch from Gamma3 ended ({}) without a '
             'fold', branch.termination)
    fold = branch.folds[0]
    return _result(ctx, name, {'fold_gamma': fold.param_value,
                               'fold_r': fold.section_coord,
                               'fold_multiplier': fold.multiplier,
                               'termination': branch.termination})


STAGES = {
    'centers': _stage_centers,
    'alpha0_foci': _stage_alpha0_foci,
    'beta_ah': _stage_beta_ah,
    'alpha2_input': _stage_alpha2_input,
    'beta_input': _stage_beta_input,
    'alpha0_hopf': _stage_alpha0_hopf,
    'big_cycle': _stage_big_cycle,
    'eight_loop': _stage_eight_loop,
    'post_eight_loop': _stage_post_eight_loop,
    'beta_fold': _stage_beta_fold,
    'gamma_hopf': _stage_gamma_hopf,
    'gamma_fold': _stage_gamma_fold,
}


def run_scenario(scfg=None, cfg=None, cycle_cfg=None, step_cfg=None,
                 hcfg=None, timers=None):
    """Runs the stages of scfg in order.

    Raises:
        StageFailed at the first stage whose checks or preconditions fail.
    """
    scfg = scfg or ScenarioConfig()
    cfg = cfg or IntegratorConfig()
    cycle_cfg = cycle_cfg or CycleConfig()
    step_cfg = step_cfg or StepConfig(ds_max=0.02)
    hcfg = hcfg or HomoclinicConfig()
    ctx = _Context(scfg, cfg, cycle_cfg, step_cfg, hcfg)
    report = ScenarioReport(config={'scenario': scfg.to_dict(),
                                    'integrator': cfg.to_dict(),
                                    'cycles': cycle_cfg.to_dict(),
                                    'continuation': step_cfg.to_dict(),
                                    'homoclinic': hcfg.to_dict()},
                            stages=[])
    for name in scfg.stage_names:
        for group in STAGE_REQUIRES.get(name, ()):
            if not any(ctx.passed.get(g) == PASSED for g in group):
                raise StageFailed(name, 'requires {} first'.format(
                    ' or '.join(group)))
        logger.info('stage {} at {}'.format(name, ctx.p.to_dict()))
        if timers is not None:
            timers(name).start()
        result = STAGES[name](ctx, name)
        if timers is not None:
            timers(name).stop()
        ctx.passed[name] = result.status
        report.stages.append(result)
    return report


@dataclasses.dataclass
class ThreeOneSearch(object):
    records: list
    best: Any

    @property
    def found(self):
        return self.best is not None and self.best.n_O >= 3 and \
            self.best.n_A >= 1

    def to_dict(self):
        return {'found': self.found,
                'best': None if self.best is None else self.best.to_dict(),
                'points': len(self.records)}


def search_three_one(base, alpha2_values=None,
                     gamma_offsets=(1e-4, 5e-4, 1e-3), cfg=None,
                     cycle_cfg=None, workers=None, progress=True):
    """Small census just past the gamma Hopf value looking for (3:1).

    Args:
        base: parameters with beta > alpha0; gamma is set to
            beta - alpha0 + offset for each offset.
        alpha2_values: defaults to six values from base.alpha2 toward
            -1.5 beta, where the weak focus at O changes its character.
    """
    if not base.beta > base.alpha0:
        raise ValueError('the search needs beta > alpha0, got {} and '
                         '{}'.format(base.beta, base.alpha0))
    if alpha2_values is None:
        alpha2_values = np.linspace(base.alpha2, -1.5 * base.beta, 6)
    hopf = base.beta - base.alpha0
    grid = GridSpec(base=base, axes=(
        (ALPHA2, tuple(float(v) for v in alpha2_values)),
        (GAMMA, tuple(hopf + float(o) for o in gamma_offsets))))
    records = census(grid, cfg, cycle_cfg, workers, progress)
    best = max(records, key=lambda r: (min(r.n_O, 3) + min(r.n_A, 1),
                                       r.total, -r.index), default=None)
    if best is not None:
        logger.info('best distribution {} + {} big at {}'.format(
            best.distribution, best.n_big, best.params.to_dict()))
    return ThreeOneSearch(records=records, best=best)
