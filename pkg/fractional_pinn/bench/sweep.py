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
This module runs one-axis experiment sweeps: every swept value yields one child run
that differs from the base configuration on that axis only. Children may run in
parallel; their rows are collected into summary.csv and comparison.csv.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from threading import Lock
from typing import Any, List, Optional, Tuple

from ..solvers.internal.common import solver_constants, solver_messages
from ..solvers.internal.utils.file_manager import FileManager
from ..solvers.internal.utils.logger import Logger
from ..solvers.internal.utils.validators import ConfigValidationError, Validators
from ..solvers.models import SchemeKind
from .run_config import RunConfig
from .runner import SLICE_HEADER_PREFIX, execute_run, load_summary

# Dotted location in the run document of every sweep axis
AXIS_PATHS = {
    'colloc_all_dims': ('collocation.points_per_axis',),
    'colloc_time_only': ('collocation.points_per_axis',),
    'colloc_space_only': ('collocation.points_per_axis',),
    'time_window': ('time_window',),
    'wall_budget': ('train.max_wall_seconds',),
    'architecture': ('network.hidden_layers', 'network.neurons_per_layer'),
    'scheme': ('scheme',),
    'iter_budget': ('train.max_iters',),
}

SPEC_KEYS = ('base', 'axis', 'values', 'workers', 'output_dir')

SUMMARY_HEADER = ('index', 'axis', 'value', 'status', 'iterations', 'wall_seconds',
                  'phi_eq', 'phi_ic', 'phi_bc', 'phi_total', 'rel_l2', 'max_abs', 'rmse')


def flatten(document: dict, prefix: str = '') -> dict:
    """Nested mapping as {dotted.key: leaf value}"""
    flat = {}
    for key, value in document.items():
        if isinstance(value, dict):
            flat.update(flatten(value, prefix + key + '.'))
        else:
            flat[prefix + key] = value
    return flat


def diff_documents(first: dict, second: dict) -> List[str]:
    """Dotted keys whose values differ between two documents"""
    left, right = flatten(first), flatten(second)
    return sorted(key for key in set(left) | set(right) if left.get(key) != right.get(key))


def value_label(value) -> str:
    """Swept value as text for CSV cells and directory names"""
    if isinstance(value, (list, tuple)):
        return 'x'.join(str(item) for item in value)
    return str(value)


def apply_axis(base: RunConfig, axis: str, value) -> RunConfig:
    """Child configuration of a sweep value.

    Raises:
        ValueError: the value does not fit the axis.
    """
    document = base.to_dict()
    counts = list(document['collocation']['points_per_axis'])
    if axis in ('colloc_all_dims', 'colloc_time_only', 'colloc_space_only'):
        if not Validators.validate_positive_int(value) or value < 2 \
                or (axis == 'colloc_space_only' and len(counts) == 1):
            raise ValueError(solver_messages.SWEEP_VALUE_ERROR + '{0}: {1!r}'.format(axis, value))
        if axis == 'colloc_all_dims':
            counts = [value] * len(counts)
        elif axis == 'colloc_time_only':
            counts[-1] = value
        else:
            counts[:-1] = [value] * (len(counts) - 1)
        return base.with_changes(collocation={'points_per_axis': counts})
    if axis == 'time_window':
        return base.with_changes(time_window=value)
    if axis == 'wall_budget':
        return base.with_changes(train={'max_wall_seconds': value})
    if axis == 'iter_budget':
        return base.with_changes(train={'max_iters': value})
    if axis == 'scheme':
        return base.with_changes(scheme=SchemeKind.parse(value).value)
    if axis == 'architecture':
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise ValueError(solver_messages.SWEEP_VALUE_ERROR + '{0}: {1!r}'.format(axis, value))
        return base.with_changes(network={'hidden_layers': value[0], 'neurons_per_layer': value[1]})
    raise ValueError(solver_messages.SWEEP_AXIS_ERROR + repr(axis))


class SweepSpec:
    """
        Attributes:
           base (RunConfig): configuration every child starts from.
           axis (str): one of AXIS_PATHS.
           values (list): swept values, one child each.
           workers (int): children run concurrently.
           output_dir (str): sweep directory holding the child directories.
    """

    def __init__(self, base: RunConfig, axis: str, values: List[Any], workers: int = 1,
                 output_dir: str = 'sweeps/sweep'):
        self.__base = base
        self.__axis = axis
        self.__values = list(values)
        self.__workers = workers
        self.__output_dir = output_dir
        self.__children = self.__build_children()

    def __build_children(self) -> List[RunConfig]:
        errors = []
        if self.__axis not in AXIS_PATHS:
            raise ConfigValidationError([solver_messages.SWEEP_AXIS_ERROR + repr(self.__axis)])
        if not self.__values:
            errors.append(solver_messages.SWEEP_VALUE_ERROR + self.__axis + ': no values')
        if not Validators.validate_positive_int(self.__workers):
            errors.append(solver_messages.CONFIG_TYPE_ERROR + "'workers' (expected a positive integer)")
        children = []
        for value in self.__values:
            try:
                children.append(apply_axis(self.__base, self.__axis, value))
            except ConfigValidationError as err:
                errors.extend(err.errors)
            except ValueError as err:
                errors.append(str(err))
        if errors:
            raise ConfigValidationError(errors)
        return children

    @classmethod
    def from_dict(cls, document: dict) -> 'SweepSpec':
        """Build from a JSON document whose base is a run document or a preset name"""
        errors = Validators.check_keys(document, SPEC_KEYS, ('base', 'axis', 'values'))
        if errors:
            raise ConfigValidationError(errors)
        base = document['base']
        base = RunConfig.preset(base) if isinstance(base, str) else RunConfig.from_dict(base)
        return cls(base, document['axis'], document['values'], document.get('workers', 1),
                   document.get('output_dir', 'sweeps/' + str(document['axis'])))

    def to_dict(self) -> dict:
        """Plain mapping for JSON documents"""
        return {'base': self.__base.to_dict(), 'axis': self.__axis, 'values': list(self.__values),
                'workers': self.__workers, 'output_dir': self.__output_dir}

    def get_base(self) -> RunConfig:
        """Get the base configuration"""
        return self.__base

    def get_axis(self) -> str:
        """Get the swept axis"""
        return self.__axis

    def get_values(self) -> List[Any]:
        """Get the swept values"""
        return list(self.__values)

    def get_workers(self) -> int:
        """Get the worker count"""
        return self.__workers

    def get_output_dir(self, root: Optional[str] = None) -> str:
        """Sweep directory; relative paths resolve against root, then FPINN_OUTPUT_ROOT"""
        root = root or os.environ.get(solver_constants.ENV_OUTPUT_ROOT)
        if root and not os.path.isabs(self.__output_dir):
            return os.path.join(root, self.__output_dir)
        return self.__output_dir

    def children(self) -> List[Tuple[int, Any, RunConfig]]:
        """(index, value, child configuration) per swept value"""
        return [(index, value, child) for index, (value, child) in enumerate(zip(self.__values, self.__children))]


class SummaryWriter:
    """Single writer of the sweep tables; children report concurrently."""

    def __init__(self, directory: str, slice_times: List[float]):
        self.__lock = Lock()
        self.__summary_path = os.path.join(directory, solver_constants.SWEEP_SUMMARY_FILE)
        self.__comparison_path = os.path.join(directory, solver_constants.SWEEP_COMPARISON_FILE)
        self.__slice_times = list(slice_times)
        self.__header = SUMMARY_HEADER + tuple('rel_l2_t' + repr(t) for t in self.__slice_times) + ('output_dir',)
        self.__rows = []
        self.__comparison_header = None
        self.__comparison_rows = []
        for path in (self.__summary_path, self.__comparison_path):
            if os.path.exists(path):
                os.remove(path)

    def get_header(self) -> Tuple[str, ...]:
        """Get the summary.csv columns"""
        return self.__header

    def add(self, index: int, axis: str, value, summary: Optional[dict], child_dir: str):
        """Record one finished child; summary None marks a failed child"""
        row = self.summary_row(index, axis, value, summary, child_dir)
        comparison = self.__read_slices(index, value, child_dir) if summary else ([], None)
        self.__lock.acquire()
        try:
            self.__rows.append(row)
            FileManager.append_csv_row(self.__summary_path, self.__header, row)
            rows, header = comparison
            if header is not None:
                self.__comparison_header = self.__comparison_header or header
                self.__comparison_rows.extend(rows)
        finally:
            self.__lock.release()

    def summary_row(self, index: int, axis: str, value, summary: Optional[dict], child_dir: str) -> tuple:
        """summary.csv row of a child"""
        blanks = ('',) * (len(self.__header) - len(SUMMARY_HEADER) - 1)
        if summary is None:
            return (index, axis, value_label(value), 'failed') + ('',) * (len(SUMMARY_HEADER) - 4) + blanks \
                + (child_dir,)
        report = summary['report']
        losses = report['final_losses'] or {}
        metrics = report['final_metrics'] or {}
        slices = summary.get('slice_metrics', {})
        row = (index, axis, value_label(value), report['status'], report['iterations'], report['wall_seconds'],
               losses.get('phi_eq', ''), losses.get('phi_ic', ''), losses.get('phi_bc', ''),
               losses.get('phi_total', ''), metrics.get('rel_l2', ''), metrics.get('max_abs', ''),
               metrics.get('rmse', ''))
        row += tuple(slices.get(repr(t), {}).get('rel_l2', '') for t in self.__slice_times)
        return row + (child_dir,)

    @staticmethod
    def __read_slices(index: int, value, child_dir: str):
        table = FileManager.read_csv(os.path.join(child_dir, solver_constants.SLICES_FILE))
        if table is None:
            return [], None
        header, rows = table
        return [(index, value_label(value)) + tuple(row) for row in rows], ('index', 'value') + tuple(header)

    def finish(self) -> List[tuple]:
        """Rewrite both tables ordered by child index; returns the summary rows"""
        self.__lock.acquire()
        try:
            self.__rows.sort(key=lambda row: row[0])
            FileManager.store_csv(self.__summary_path, self.__header, self.__rows)
            if self.__comparison_header is not None:
                self.__comparison_rows.sort(key=lambda row: row[0])
                FileManager.store_csv(self.__comparison_path, self.__comparison_header, self.__comparison_rows)
            return list(self.__rows)
        finally:
            self.__lock.release()


def child_directory(sweep_dir: str, index: int, axis: str, value) -> str:
    """Per-child run directory"""
    return os.path.join(sweep_dir, '{0:02d}_{1}_{2}'.format(index, axis, value_label(value)))


def run_sweep(spec: SweepSpec, root: Optional[str] = None) -> Tuple[List[tuple], int]:
    """Execute every child and aggregate the tables.

    A failing child is logged and recorded as 'failed'; the sweep carries on.

    Returns:
        (summary rows ordered by index, number of failed or diverged children)
    """
    sweep_dir = spec.get_output_dir(root)
    FileManager.ensure_directory(sweep_dir)
    FileManager.store_json(spec.to_dict(), os.path.join(sweep_dir, solver_constants.CONFIG_FILE))
    writer = SummaryWriter(sweep_dir, spec.get_base().slice_times())
    failures = []

    def run_child(index, value, child):
        child_dir = child_directory(sweep_dir, index, spec.get_axis(), value)
        summary = None
        try:
            execute_run(child, child_dir, current_thread_only=spec.get_workers() > 1)
            summary = load_summary(os.path.join(child_dir, solver_constants.SUMMARY_FILE))
            if summary is None or summary['report']['status'] == 'diverged':
                failures.append(index)
        except Exception as err:  # pylint: disable=broad-except
            Logger.error(solver_messages.SWEEP_CHILD_FAILED + '{0} = {1}: {2}'.format(
                spec.get_axis(), value_label(value), err))
            failures.append(index)
        writer.add(index, spec.get_axis(), value, summary, child_dir)

    with ThreadPoolExecutor(max_workers=spec.get_workers()) as executor:
        for future in [executor.submit(run_child, *child) for child in spec.children()]:
            future.result()
    rows = writer.finish()
    Logger.info('Sweep over {0}: {1} children, {2} failed'.format(spec.get_axis(), len(rows), len(failures)))
    return rows, len(failures)
