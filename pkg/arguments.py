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

"""argparser configuration"""

import argparse
import dataclasses
import json
from typing import List, Optional

from bifurcation import HomoclinicConfig, StepConfig
from cycles import CycleConfig
from integrate import IntegratorConfig
from model import PARAM_IDS, CanonicalParams
from scan import GridSpec, PortraitConfig, ScenarioConfig, Window
from scan import grids_from_dict

COMMANDS = ('singularities', 'portrait', 'cycles', 'hopf', 'continue',
            'separatrix', 'eightloop', 'census', 'scenario')
DEFAULT_PARAMS = {'q_case': {'case': 1, 'a': 2.0}}
DEFAULT_WINDOW = (-1.0, 3.0, -2.0, 2.0)


class ConfigError(ValueError):
    """Bad flag or config file; the CLI exits with status 2."""


def add_params_args(parser):
    """Canonical parameter arguments"""

    group = parser.add_argument_group('params', 'canonical parameters')

    group.add_argument('--q-case', type=int, default=None, choices=[1, 2, 3],
                       help='shape of q: 1 roots 0, 1, a; 2 -x + b x^3; '
                       '3 -x + x^2')
    group.add_argument('--a', type=float, default=None,
                       help='third root of q in case 1 (default 2)')
    group.add_argument('--b', type=float, default=None,
                       help='cubic coefficient of q in case 2 (default 0)')
    group.add_argument('--c', type=float, default=None)
    group.add_argument('--d', type=float, default=None)
    group.add_argument('--alpha0', type=float, default=None,
                       help='rotation parameter alpha0')
    group.add_argument('--alpha2', type=float, default=None,
                       help='rotation parameter alpha2')
    group.add_argument('--beta', type=float, default=None,
                       help='semi-rotation parameter beta')
    group.add_argument('--gamma', type=float, default=None,
                       help='rotation parameter gamma')

    return parser


def add_integrator_args(parser):
    """Integrator arguments"""

    group = parser.add_argument_group('integrator', 'RK45 configuration')

    group.add_argument('--rtol', type=float, default=None,
                       help='relative tolerance (default 1e-9)')
    group.add_argument('--atol', type=float, default=None,
                       help='absolute tolerance (default 1e-12)')
    group.add_argument('--max-step', type=float, default=None)
    group.add_argument('--t-max', type=float, default=None,
                       help='integration horizon')
    group.add_argument('--escape-radius', type=float, default=None)

    return parser


def add_cycle_args(parser):
    """Cycle search arguments"""

    group = parser.add_argument_group('cycles', 'limit cycle search')

    group.add_argument('--focus', type=str, default='O', choices=['O', 'A'],
                       help='anti-saddle whose ray is searched')
    group.add_argument('--n-seeds', type=int, default=None,
                       help='seed radii on the ray')
    group.add_argument('--newton-tol', type=float, default=None)
    group.add_argument('--mult-tol', type=float, default=None)

    return parser


def add_continuation_args(parser):
    """Continuation arguments"""

    group = parser.add_argument_group('continuation',
                                      'pseudo-arclength continuation')

    group.add_argument('--free', type=str, default='beta', choices=PARAM_IDS,
                       help='free rotation parameter')
    group.add_argument('--range', type=float, nargs=2, default=None,
                       metavar=('LO', 'HI'),
                       help='interval of the free parameter')
    group.add_argument('--cycle-index', type=int, default=0,
                       help='which cycle on the ray to follow, innermost 0')
    group.add_argument('--direction', type=int, default=1, choices=[-1, 1])
    group.add_argument('--ds', type=float, default=None)
    group.add_argument('--ds-max', type=float, default=None)
    group.add_argument('--max-points', type=int, default=None)

    return parser


def add_output_args(parser, formats=('json', 'csv')):
    """Output arguments"""

    group = parser.add_argument_group('output', 'output configuration')

    group.add_argument('--config', type=str, default=None,
                       help='JSON run configuration; flags override it')
    group.add_argument('--format', type=str, default=formats[0],
                       choices=list(formats))
    group.add_argument('--out', type=str, default=None,
                       help='output file, standard output when absent')
    group.add_argument('--verbose', action='store_true',
                       help='print arguments and timings')
    group.add_argument('--log-level', type=str, default='warning',
                       choices=['debug', 'info', 'warning', 'error'])

    return parser


def add_command_args(subparsers):
    """One subcommand per operation family."""

    sub = subparsers.add_parser('singularities',
                                help='finite and infinite singular points')
    add_params_args(sub)
    add_output_args(sub)

    sub = subparsers.add_parser('portrait', help='phase portrait')
    add_params_args(sub)
    add_integrator_args(sub)
    add_output_args(sub, formats=('svg', 'csv', 'json'))
    sub.add_argument('--window', type=float, nargs=4, default=None,
                     metavar=('XMIN', 'XMAX', 'YMIN', 'YMAX'))
    sub.add_argument('--nx', type=int, default=None)
    sub.add_argument('--ny', type=int, default=None)
    sub.add_argument('--with-cycles', action='store_true',
                     help='stroke the cycles around O, A and the big cycle')

    sub = subparsers.add_parser('cycles', help='limit cycles around O, A '
                                'and all singular points')
    add_params_args(sub)
    add_integrator_args(sub)
    add_cycle_args(sub)
    add_output_args(sub)

    sub = subparsers.add_parser('hopf', help='Hopf value of a parameter')
    add_params_args(sub)
    add_integrator_args(sub)
    add_cycle_args(sub)
    add_output_args(sub, formats=('text', 'json', 'csv'))
    sub.add_argument('--free', type=str, default='beta', choices=PARAM_IDS)

    sub = subparsers.add_parser('continue', help='continue a limit cycle')
    add_params_args(sub)
    add_integrator_args(sub)
    add_cycle_args(sub)
    add_continuation_args(sub)
    add_output_args(sub, formats=('csv', 'json'))

    sub = subparsers.add_parser('separatrix', help='saddle separatrices')
    add_params_args(sub)
    add_integrator_args(sub)
    add_output_args(sub, formats=('csv', 'json'))
    sub.add_argument('--saddle', type=int, default=0,
                     help='index of the saddle, ordered by x')
    sub.add_argument('--eps', type=float, default=None)

    sub = subparsers.add_parser('eightloop', help='homoclinic alpha2 values')
    add_params_args(sub)
    add_integrator_args(sub)
    add_output_args(sub, formats=('text', 'json', 'csv'))
    sub.add_argument('--bracket', type=float, nargs=2, default=None,
                     metavar=('LO', 'HI'))
    sub.add_argument('--transversal', type=str, default=None,
                     choices=['vertical', 'axis'])

    sub = subparsers.add_parser('census', help='cycle distribution census')
    add_integrator_args(sub)
    add_cycle_args(sub)
    add_output_args(sub)
    sub.add_argument('--workers', type=int, default=None,
                     help='worker processes, capped by KUKLES_THREADS')
    sub.add_argument('--progress', action='store_true')

    sub = subparsers.add_parser('scenario', help='scripted rotation sequence')
    add_integrator_args(sub)
    add_output_args(sub, formats=('json',))
    add_params_args(sub)
    sub.add_argument('--order', type=str, default=None,
                     choices=['forward', 'reverse'])
    sub.add_argument('--three-one', action='store_true',
                     help='append the guided (3:1) search')

    return subparsers


def _flags(args, names):
    """{name: value} of the flags given on the command line."""
    return {name: getattr(args, name) for name in names
            if getattr(args, name, None) is not None}


def _check_scenario_flags(args):
    """The scenario runs on the a = 2 field and sets beta, alpha2, gamma."""
    if args.q_case not in (None, 1) or args.a not in (None, 2.0) or \
            args.b is not None:
        raise ConfigError('the scenario runs on q case 1 with a = 2')
    given = sorted(_flags(args, ('beta', 'alpha2', 'gamma')))
    if given:
        raise ConfigError('{} set by the scenario stages, not by flags'.format(
            ', '.join(given)))


@dataclasses.dataclass
class RunConfig(object):
    """Effective configuration of one command: file values, then flags."""
    params: CanonicalParams
    integrator: IntegratorConfig
    cycles: CycleConfig
    continuation: StepConfig
    homoclinic: HomoclinicConfig
    scenario: ScenarioConfig
    portrait: PortraitConfig
    window: Window
    census: Optional[List[GridSpec]] = None

    BLOCKS = ('params', 'integrator', 'cycles', 'continuation', 'homoclinic',
              'census', 'scenario', 'portrait')

    @classmethod
    def from_dict(cls, json_object, args=None):
        unknown = set(json_object) - set(cls.BLOCKS)
        if unknown:
            raise ConfigError('unknown config blocks: {}'.format(
                sorted(unknown)))
        try:
            return cls._build(json_object, args)
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError('bad configuration: {}'.format(e))

    @classmethod
    def _build(cls, json_object, args):
        params = dict(json_object.get('params', DEFAULT_PARAMS))
        integrator = dict(json_object.get('integrator', {}))
        cycles = dict(json_object.get('cycles', {}))
        continuation = dict(json_object.get('continuation', {}))
        homoclinic = dict(json_object.get('homoclinic', {}))
        scenario = dict(json_object.get('scenario', {}))
        portrait = dict(json_object.get('portrait', {}))
        window = portrait.pop('window', DEFAULT_WINDOW)

        if args is not None:
            q_case = dict(params.get('q_case', DEFAULT_PARAMS['q_case']))
            if getattr(args, 'q_case', None) is not None:
                q_case['case'] = args.q_case
            if q_case['case'] == 1 and q_case.get('a') is None:
                q_case['a'] = 2.0
            for key in ('a', 'b'):
                if getattr(args, key, None) is not None:
                    q_case[key] = getattr(args, key)
            params['q_case'] = q_case
            params.update(_flags(args, ('c', 'd') + PARAM_IDS))
            integrator.update(_flags(args, ('rtol', 'atol', 'max_step',
                                            't_max', 'escape_radius')))
            cycles.update(_flags(args, ('n_seeds', 'newton_tol',
                                        'mult_tol')))
            continuation.update(_flags(args, ('ds', 'ds_max', 'max_points')))
            if getattr(args, 'transversal', None) is not None:
                homoclinic['transversal'] = args.transversal
            if getattr(args, 'eps', None) is not None:
                homoclinic['eps'] = args.eps
            if getattr(args, 'command', None) == 'scenario':
                _check_scenario_flags(args)
                scenario.update(_flags(args, ('alpha0', 'c', 'd',
                                              'order')))
            portrait.update(_flags(args, ('nx', 'ny')))
            if getattr(args, 'window', None) is not None:
                window = args.window

        census = None
        if 'census' in json_object:
            census = grids_from_dict(json_object['census'])
        return cls(params=CanonicalParams.from_dict(params),
                   integrator=IntegratorConfig.from_dict(integrator),
                   cycles=CycleConfig.from_dict(cycles),
                   continuation=StepConfig.from_dict(continuation),
                   homoclinic=HomoclinicConfig.from_dict(homoclinic),
                   scenario=ScenarioConfig.from_dict(scenario),
                   portrait=PortraitConfig.from_dict(portrait),
                   window=Window.from_list(window),
                   census=census)

    @classmethod
    def from_json_file(cls, json_file, args=None):
        try:
            with open(json_file, "r", encoding='utf-8') as reader:
                text = reader.read()
            json_object = json.loads(text)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError('cannot read config {}: {}'.format(
                json_file, e))
        if not isinstance(json_object, dict):
            raise ConfigError('config {} is not a JSON object'.format(
                json_file))
        return cls.from_dict(json_object, args)

    def to_dict(self, blocks=None):
        output = {'params': self.params.to_dict(),
                  'integrator': self.integrator.to_dict(),
                  'cycles': self.cycles.to_dict(),
                  'continuation': self.continuation.to_dict(),
                  'homoclinic': self.homoclinic.to_dict(),
                  'scenario': self.scenario.to_dict(),
                  'portrait': dict(self.portrait.to_dict(),
                                   window=list(self.window))}
        if self.census is not None:
            output['census'] = {'grids': [g.to_dict() for g in self.census]}
        if blocks is not None:
            output = {k: v for k, v in output.items() if k in blocks}
        return output


def get_parser():
    parser = argparse.ArgumentParser(
        prog='kukles',
        description='Limit cycles and bifurcations of Kukles cubic systems')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    add_command_args(subparsers)
    return parser


def get_args(argv=None):
    """Parse all the args; returns (args, RunConfig)."""

    args = get_parser().parse_args(argv)
    if args.config:
        run_config = RunConfig.from_json_file(args.config, args)
    else:
        run_config = RunConfig.from_dict({}, args)
    return args, run_config
