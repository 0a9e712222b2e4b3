# Copyright 2026 The fractional-pinn Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Command-line front end: ``fpinn-bench {caputo-eval, train, eval, sweep}``.

Exit codes: 0 success, 1 runtime failure, 2 validation failure.
"""

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

import numpy as np
from dotenv import load_dotenv

from ..solvers import caputo, network, numerics, problems, trainer
from ..solvers.internal.common import solver_constants, solver_messages
from ..solvers.internal.utils.file_manager import FileManager
from ..solvers.internal.utils.logger import Logger
from ..solvers.internal.utils.validators import Validators
from ..solvers.models import SchemeKind, TimeGrid
from ..version import __version__
from .run_config import RunConfig
from .runner import SLICE_HEADER_PREFIX, execute_run, utc_now
from .sweep import SweepSpec, run_sweep

CAPUTO_HEADER = ('t', 'derivative', 'exact')
ORDER_HEADER = ('h', 'n_steps', 'value', 'exact', 'error')


class ValidationFailure(Exception):
    """Argument or configuration problem found before any compute"""


def _print_table(header: Sequence[str], rows: Sequence[Sequence]):
    print(','.join(header))
    for row in rows:
        print(','.join(repr(float(value)) if isinstance(value, (float, np.floating)) else str(value) for value in row))


def _read_samples(file_path: str):
    """(times, values) from a CSV with columns t, f on a uniform grid starting at 0"""
    table = FileManager.read_csv(file_path)
    if table is None:
        raise ValidationFailure(solver_messages.CSV_FORMAT_ERROR + file_path)
    header, rows = table
    try:
        columns = {name.strip(): index for index, name in enumerate(header)}
        times = np.array([float(row[columns['t']]) for row in rows])
        values = np.array([float(row[columns['f']]) for row in rows])
    except (KeyError, IndexError, ValueError) as err:
        raise ValidationFailure(solver_messages.CSV_FORMAT_ERROR + '{0} ({1})'.format(file_path, err)) from err
    if times.size < 2 or times[0] != 0.0:
        raise ValidationFailure(solver_messages.CSV_FORMAT_ERROR + file_path + ' (need t_0 = 0 and two rows)')
    h = times[1] - times[0]
    if not h > 0 or not np.allclose(np.diff(times), h, rtol=1e-9, atol=1e-12):
        raise ValidationFailure(solver_messages.CSV_FORMAT_ERROR + file_path + ' (t must be uniformly spaced)')
    return TimeGrid(h, times.size - 1), values


def cmd_caputo_eval(args) -> int:
    """Discrete Caputo derivative of a monomial or of sampled data, optionally with the order study"""
    if not Validators.validate_alpha(args.alpha):
        raise ValidationFailure(solver_messages.ALPHA_RANGE_ERROR + repr(args.alpha))
    kind = SchemeKind.parse(args.scheme)
    if args.samples:
        grid, values = _read_samples(args.samples)
        exact = [''] * (grid.get_n_steps())
    else:
        if not (Validators.validate_positive_real(args.h) and Validators.validate_positive_real(args.t_final)):
            raise ValidationFailure(solver_messages.TIME_GRID_ERROR)
        if args.monomial != 0 and args.monomial < 1:
            raise ValidationFailure(solver_messages.MONOMIAL_POWER_ERROR)
        grid = TimeGrid(args.h, max(1, int(round(args.t_final / args.h))))
        values = grid.nodes() ** args.monomial
        exact = [caputo.exact_caputo_monomial(args.monomial, args.alpha, t) for t in grid.nodes()[1:]]
    study = None
    if args.order:
        if args.samples:
            raise ValidationFailure('--order needs --monomial')
        h_sequence = [args.h / 2 ** level for level in range(args.levels)]
        table = caputo.convergence_table(kind, args.alpha, args.monomial, args.t_final, h_sequence)
        study = (table, caputo.table_order(table))

    scheme = caputo.build_scheme(kind, args.alpha, grid)
    derivative = caputo.apply_scheme_all(scheme, values)
    rows = [(float(t), float(d), e) for t, d, e in zip(grid.nodes()[1:], derivative, exact)]
    _print_table(CAPUTO_HEADER, rows)
    if args.output:
        FileManager.store_csv(args.output, CAPUTO_HEADER, rows)

    if study:
        table, order = study
        print()
        _print_table(ORDER_HEADER, [tuple(row) for row in table])
        print('observed_order,{0!r}'.format(order))
    return solver_constants.EXIT_OK


def _load_run_config(args) -> RunConfig:
    if args.preset:
        config = RunConfig.preset(args.preset)
    else:
        document = FileManager.read_json(args.config)
        if document is None:
            raise ValidationFailure(solver_messages.CONFIG_VALIDATION_ERROR + ': cannot read ' + args.config)
        config = RunConfig.from_dict(document)
    overrides = {}
    if args.scheme is not None:
        overrides['scheme'] = args.scheme
    if args.alpha is not None:
        overrides['alpha'] = args.alpha
    if args.time_window is not None:
        overrides['time_window'] = args.time_window
    if args.output_dir is not None:
        overrides['output_dir'] = args.output_dir
    if args.max_iters is not None:
        overrides['train'] = {'max_iters': args.max_iters}
    return config.with_changes(**overrides) if overrides else config


def cmd_train(args) -> int:
    """Train one configuration and write its artifacts"""
    config = _load_run_config(args)
    output_dir = config.get_output_dir()
    summary = execute_run(config, output_dir)
    report = summary['report']
    print(json.dumps({'output_dir': output_dir, 'status': report['status'], 'iterations': report['iterations'],
                      'final_losses': report['final_losses'], 'final_metrics': report['final_metrics']}, indent=2))
    return solver_constants.EXIT_RUNTIME_FAILURE if report['status'] == 'diverged' else solver_constants.EXIT_OK


def _parse_fixed(assignments: Optional[List[str]]) -> dict:
    fixed = {}
    for assignment in assignments or []:
        name, _, value = assignment.partition('=')
        try:
            fixed[name.strip()] = float(value)
        except ValueError as err:
            raise ValidationFailure('--fix expects AXIS=VALUE, got ' + repr(assignment)) from err
    return fixed


def cmd_eval(args) -> int:
    """Score a checkpoint (or the analytical oracle) on any grid"""
    try:
        model, metadata = network.load_checkpoint(args.checkpoint)
        problem = problems.get_problem(metadata['problem'], metadata['alpha'], metadata.get('time_window'))
    except (KeyError, TypeError, ValueError) as err:
        Logger.error(solver_messages.CHECKPOINT_FORMAT_ERROR + ': ' + args.checkpoint)
        raise RuntimeError(str(err)) from err
    if args.oracle:
        model = problems.AnalyticalField(problem)
    grid = list(args.points or trainer.DEFAULT_EVALUATION_GRID[problem.get_name()])
    if len(grid) != problem.get_domain().get_input_dim():
        raise ValidationFailure(solver_messages.COLLOCATION_DIM_ERROR)
    fixed = _parse_fixed(args.fix)
    output_dir = args.output_dir or os.path.join(os.path.dirname(os.path.abspath(args.checkpoint)), 'eval')
    FileManager.ensure_directory(output_dir)

    try:
        if fixed:
            times = np.linspace(0.0, problem.get_domain().get_time_window(), grid[-1])
            tables = trainer.evaluate_slices(model, problem, times, grid[:-1], fixed)
            header = next(iter(tables.values())).header()
            rows = [row for table in tables.values() for row in table.rows()]
            predicted = np.concatenate([table.get_predicted() for table in tables.values()])
            exact = np.concatenate([table.get_exact() for table in tables.values()])
            metrics = numerics.error_metrics(predicted, exact)
        else:
            evaluation = trainer.evaluate(model, problem, grid)
            header, rows, metrics = evaluation.header(), evaluation.rows(), evaluation.get_metrics()
    except ValueError as err:
        raise ValidationFailure(str(err)) from err
    FileManager.store_csv(os.path.join(output_dir, solver_constants.EVALUATION_FILE), header, rows)

    slice_metrics = {}
    times = args.times if args.times is not None else problem.get_slice_times()
    if times:
        slices = trainer.evaluate_slices(model, problem, times, grid[:-1], fixed)
        slice_rows = []
        for t, table in slices.items():
            slice_rows.extend((t,) + row for row in table.rows())
            slice_metrics[repr(t)] = table.get_metrics().to_dict()
        FileManager.store_csv(os.path.join(output_dir, solver_constants.SLICES_FILE),
                              SLICE_HEADER_PREFIX + header, slice_rows)
    summary = {'created_at': utc_now(), 'checkpoint': os.path.abspath(args.checkpoint), 'oracle': bool(args.oracle),
               'grid': grid, 'fixed': fixed, 'metrics': metrics.to_dict(), 'slice_metrics': slice_metrics}
    FileManager.store_json(summary, os.path.join(output_dir, solver_constants.SUMMARY_FILE))
    print(json.dumps({'output_dir': output_dir, 'metrics': summary['metrics'], 'slice_metrics': slice_metrics},
                     indent=2))
    return solver_constants.EXIT_OK


def cmd_sweep(args) -> int:
    """Run a sweep spec; nonzero exit when any child failed"""
    document = FileManager.read_json(args.spec)
    if document is None:
        raise ValidationFailure(solver_messages.CONFIG_VALIDATION_ERROR + ': cannot read ' + args.spec)
    if args.workers is not None:
        document['workers'] = args.workers
    if args.output_dir is not None:
        document['output_dir'] = args.output_dir
    spec = SweepSpec.from_dict(document)
    _, failures = run_sweep(spec)
    print(json.dumps({'output_dir': spec.get_output_dir(), 'children': len(spec.get_values()),
                      'failed': failures}, indent=2))
    return solver_constants.EXIT_RUNTIME_FAILURE if failures else solver_constants.EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of every subcommand"""
    parser = argparse.ArgumentParser(prog='fpinn-bench',
                                     description='fPINN benchmarks for time-fractional differential equations.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--debug', action='store_true', help='verbose logging (also FPINN_DEBUG=1)')
    commands = parser.add_subparsers(dest='command', required=True)

    caputo_eval = commands.add_parser('caputo-eval', help='discrete Caputo derivative and its convergence order')
    caputo_eval.add_argument('--scheme', default='diethelm', choices=[kind.value for kind in SchemeKind])
    caputo_eval.add_argument('--alpha', type=float, default=solver_constants.DEFAULT_ALPHA)
    source = caputo_eval.add_mutually_exclusive_group()
    source.add_argument('--monomial', type=float, default=2.0, help='test function t^P')
    source.add_argument('--samples', help='CSV with columns t, f on a uniform grid from t = 0')
    caputo_eval.add_argument('--h', type=float, default=0.01)
    caputo_eval.add_argument('--t-final', type=float, default=1.0)
    caputo_eval.add_argument('--order', action='store_true', help='print the convergence table')
    caputo_eval.add_argument('--levels', type=int, default=4, help='halving resolutions for --order')
    caputo_eval.add_argument('--output', help='also write the derivative table to this CSV')
    caputo_eval.set_defaults(handler=cmd_caputo_eval)

    train = commands.add_parser('train', help='train one configuration')
    chosen = train.add_mutually_exclusive_group(required=True)
    chosen.add_argument('--preset', choices=['fode', 'fpde2d', 'fpde3d'])
    chosen.add_argument('--config', help='JSON run configuration')
    train.add_argument('--scheme', choices=[kind.value for kind in SchemeKind])
    train.add_argument('--alpha', type=float)
    train.add_argument('--max-iters', type=int)
    train.add_argument('--time-window', type=float)
    train.add_argument('--output-dir')
    train.set_defaults(handler=cmd_train)

    evaluate = commands.add_parser('eval', help='evaluate a checkpoint')
    evaluate.add_argument('--checkpoint', required=True)
    evaluate.add_argument('--points', type=int, nargs='+', help='grid counts, spatial axes first, time last')
    evaluate.add_argument('--fix', action='append', metavar='AXIS=VALUE', help='pin a spatial axis, e.g. x=1')
    evaluate.add_argument('--times', type=float, nargs='*', help='reporting timestamps for slices.csv')
    evaluate.add_argument('--oracle', action='store_true', help='evaluate the analytical solution instead')
    evaluate.add_argument('--output-dir')
    evaluate.set_defaults(handler=cmd_eval)

    sweep = commands.add_parser('sweep', help='run a one-axis sweep')
    sweep.add_argument('--spec', required=True, help='JSON sweep spec')
    sweep.add_argument('--workers', type=int)
    sweep.add_argument('--output-dir')
    sweep.set_defaults(handler=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the fpinn-bench console script"""
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return solver_constants.EXIT_OK if err.code == 0 else solver_constants.EXIT_VALIDATION_FAILURE
    Logger.set_debug(args.debug or os.environ.get(solver_constants.ENV_DEBUG, '') in ('1', 'true', 'yes'))
    try:
        return args.handler(args)
    except (ValidationFailure, ValueError) as err:
        Logger.error(err)
        return solver_constants.EXIT_VALIDATION_FAILURE
    except Exception as err:  # pylint: disable=broad-except
        Logger.error(err)
        return solver_constants.EXIT_RUNTIME_FAILURE


if __name__ == '__main__':
    sys.exit(main())
