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

"""Command line of the Kukles toolkit"""

import contextlib
import logging
import sys

from arguments import ConfigError, get_args
from bifurcation import branch_csv, branch_frame, branch_summary
from bifurcation import continue_cycle, eight_loop_find, hopf_value
from bifurcation import separatrices, separatrix_csv
from cycles import Section, big_cycles, count_around
from emitters import csv_output, json_output, svg_portrait, write_output
from model import CanonicalParams, KuklesError
from model import finite_singularities, infinite_singularities, saddles
from model.errors import NotASaddle
from scan import census, census_jsonl, portrait, portrait_csv, portrait_dict
from scan import run_scenario, search_three_one
from utils import Timers, print_args, to_json_document

logger = logging.getLogger('kukles')


def _cycles_around(p, which, run_config, anomalies):
    """Cycles around O or A; an absent anti-saddle yields none."""
    try:
        Section.for_focus(p, which)
    except ValueError as e:
        logger.info(str(e))
        return []
    return count_around(p, which, run_config.integrator, run_config.cycles,
                        anomalies)


def _focus_section(p, which):
    try:
        return Section.for_focus(p, which)
    except ValueError as e:
        raise ConfigError(str(e))


def run_singularities(args, run_config):
    p = run_config.params
    finite = finite_singularities(p)
    infinite = infinite_singularities(p)
    if args.format == 'csv':
        return csv_output([{'kind': s.kind, 'x': s.location.x,
                            'y': s.location.y, 'trace': s.trace,
                            'det': s.det, 'multiplicity': s.multiplicity,
                            'certified': s.certified} for s in finite])
    return json_output({'finite': [s.to_dict() for s in finite],
                        'infinite': [s.to_dict() for s in infinite]},
                       run_config.to_dict(blocks=('params',)))


def run_portrait(args, run_config):
    p = run_config.params
    result = portrait(p, run_config.window, run_config.portrait,
                      run_config.integrator)
    if args.format == 'csv':
        return portrait_csv(result)
    if args.format == 'json':
        return json_output(portrait_dict(result), run_config.to_dict(
            blocks=('params', 'integrator', 'portrait')))
    cycles = []
    if args.with_cycles:
        anomalies = []
        for which in ('O', 'A'):
            cycles += _cycles_around(p, which, run_config, anomalies)
        cycles += big_cycles(p, run_config.integrator, run_config.cycles,
                             anomalies)
        for anomaly in anomalies:
            logger.warning(anomaly)
    return svg_portrait(result, cycles)


def run_cycles(args, run_config):
    p = run_config.params
    anomalies = []
    found = {which: _cycles_around(p, which, run_config, anomalies)
             for which in ('O', 'A')}
    found['big'] = big_cycles(p, run_config.integrator, run_config.cycles,
                              anomalies)
    if args.format == 'csv':
        return csv_output([dict(cycle.to_dict(), around=which,
                                enclosed=len(cycle.enclosed))
                           for which, cycles in found.items()
                           for cycle in cycles])
    result = {which: [cycle.to_dict() for cycle in cycles]
              for which, cycles in found.items()}
    result['distribution'] = '({}:{})'.format(len(found['O']),
                                              len(found['A']))
    result['anomalies'] = anomalies
    return json_output(result, run_config.to_dict(
        blocks=('params', 'integrator', 'cycles')))


def run_hopf(args, run_config):
    _focus_section(run_config.params, args.focus)
    report = hopf_value(run_config.params, args.focus, args.free,
                        run_config.integrator, run_config.cycles)
    if args.format == 'text':
        return '{} = {!r}\n'.format(args.free, report.critical_param_value)
    if args.format == 'csv':
        return csv_output([{'free_param': report.free_param,
                            'critical_value': report.critical_param_value,
                            'side': report.side,
                            'birth_direction': report.birth_direction}])
    return json_output(report.to_dict(), run_config.to_dict(
        blocks=('params', 'integrator', 'cycles')))


def run_continue(args, run_config):
    p = run_config.params
    if args.range is None:
        raise ConfigError('continue needs --range LO HI')
    lo, hi = args.range
    value = p.get(args.free)
    if not lo <= value <= hi:
        raise ConfigError('{} = {} lies outside --range {} {}'.format(
            args.free, value, lo, hi))
    sec = _focus_section(p, args.focus)
    found = count_around(p, args.focus, run_config.integrator,
                         run_config.cycles)
    if not 0 <= args.cycle_index < len(found):
        raise ConfigError('cycle index {} out of range: {} cycles around '
                          '{}'.format(args.cycle_index, len(found),
                                      args.focus))
    branch = continue_cycle(p, found[args.cycle_index], args.free,
                            args.range, run_config.continuation,
                            run_config.integrator, run_config.cycles,
                            which=args.focus, sec=sec,
                            direction=args.direction)
    if args.format == 'csv':
        return branch_csv(branch)
    return json_output({'summary': branch_summary(branch),
                        'points': branch_frame(branch).to_dict(
                            orient='records')},
                       run_config.to_dict(blocks=('params', 'integrator',
                                                  'cycles',
                                                  'continuation')))


def run_separatrix(args, run_config):
    p = run_config.params
    found = saddles(p)
    if not 0 <= args.saddle < len(found):
        raise NotASaddle('saddle index {} out of range: {} saddles'.format(
            args.saddle, len(found)))
    branches = separatrices(p, found[args.saddle],
                            eps=run_config.homoclinic.eps,
                            cfg=run_config.integrator)
    if args.format == 'csv':
        return separatrix_csv(branches)
    return json_output(
        {'saddle': list(branches.saddle),
         'unstable': list(branches.unstable),
         'stable': list(branches.stable),
         'branches': {key: {'status': trajectory.status,
                            'states': trajectory.states.tolist()}
                      for key, trajectory in branches.branches.items()}},
        run_config.to_dict(blocks=('params', 'integrator', 'homoclinic')))


def run_eightloop(args, run_config):
    bracket = args.bracket or run_config.scenario.alpha2_bracket
    loop = eight_loop_find(run_config.params, tuple(bracket),
                           run_config.integrator, run_config.homoclinic)
    if args.format == 'text':
        return 'alpha2 left = {!r}\nalpha2 right = {!r}\n'.format(
            loop.left, loop.right)
    if args.format == 'csv':
        return csv_output([{'side': side, 'value': value,
                            'residual': loop.residuals[side],
                            'transversal': loop.transversals[side]}
                           for side, value in (('left', loop.left),
                                               ('right', loop.right))])
    return json_output(loop.to_dict(), run_config.to_dict(
        blocks=('params', 'integrator', 'homoclinic')))


def run_census(args, run_config):
    if run_config.census is None:
        raise ConfigError('census needs a config file with a census block')
    records = census(run_config.census, run_config.integrator,
                     run_config.cycles, workers=args.workers,
                     progress=args.progress)
    if args.format == 'csv':
        rows = []
        for record in records:
            row = {'index': record.index, 'n_O': record.n_O,
                   'n_A': record.n_A, 'n_big': record.n_big,
                   'anomalies': len(record.anomalies)}
            params = record.params.to_dict()
            params.pop('q_case')
            row.update(params)
            rows.append(row)
        return csv_output(rows)
    return census_jsonl(records, run_config.census, run_config.integrator,
                        run_config.cycles)


def run_scenario_command(args, run_config, timers):
    report = run_scenario(run_config.scenario, run_config.integrator,
                          run_config.cycles, run_config.continuation,
                          run_config.homoclinic, timers=timers)
    output = report.to_dict()
    if args.three_one:
        if 'beta_fold' not in report:
            raise ConfigError('--three-one needs the beta_fold stage')
        base = CanonicalParams.from_dict(report['beta_fold'].params)
        output['three_one'] = search_three_one(
            base, cfg=run_config.integrator, cycle_cfg=run_config.cycles,
            progress=False).to_dict()
    return to_json_document(output)


COMMAND_HANDLERS = {
    'singularities': run_singularities,
    'portrait': run_portrait,
    'cycles': run_cycles,
    'hopf': run_hopf,
    'continue': run_continue,
    'separatrix': run_separatrix,
    'eightloop': run_eightloop,
    'census': run_census,
}


def main(argv=None):
    """Runs one command; returns 0, 1 on a numerical failure, 2 on usage."""

    try:
        args, run_config = get_args(argv)
    except SystemExit as e:
        return e.code
    except ConfigError as e:
        print('kukles: error: {}'.format(e), file=sys.stderr)
        return 2

    logging.basicConfig(level=getattr(logging, args.log_level.upper()),
                        format='%(asctime)s %(levelname)s %(name)s: '
                               '%(message)s')
    timers = Timers()
    if args.verbose:
        with contextlib.redirect_stdout(sys.stderr):
            print_args(args)

    try:
        timers(args.command).start()
        if args.command == 'scenario':
            text = run_scenario_command(args, run_config, timers)
        else:
            text = COMMAND_HANDLERS[args.command](args, run_config)
        timers(args.command).stop()
        write_output(text, args.out)
    except KuklesError as e:
        print('kukles: {}: {}'.format(type(e).__name__, e), file=sys.stderr)
        return 1
    except ConfigError as e:
        print('kukles: error: {}'.format(e), file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as e:
        print('kukles: {}: {}'.format(type(e).__name__, e), file=sys.stderr)
        return 1

    if args.verbose:
        with contextlib.redirect_stdout(sys.stderr):
            timers.log(sorted(timers.timers))
    return 0


if __name__ == '__main__':
    sys.exit(main())
