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
This module executes one benchmark run and persists its artifacts:
config, collocation points, loss trace, checkpoint(s), evaluation tables, log and summary.
"""

import datetime
import os
from typing import Optional

from dateutil import parser, tz

from ..solvers import collocation, network, trainer
from ..solvers.internal.common import solver_constants
from ..solvers.internal.utils.file_manager import FileManager
from ..solvers.internal.utils.logger import Logger
from ..solvers.models import TRACE_HEADER
from .run_config import RunConfig

SLICE_HEADER_PREFIX = ('slice_t',)


def utc_now() -> str:
    """ISO-8601 UTC timestamp"""
    return datetime.datetime.now(tz=tz.tzutc()).isoformat()


def load_summary(file_path: str) -> Optional[dict]:
    """Read a run summary, with created_at parsed back into an aware datetime"""
    summary = FileManager.read_json(file_path)
    if summary is None:
        return None
    created_at = summary.get('created_at')
    if isinstance(created_at, str):
        summary['created_at'] = parser.isoparse(created_at)
    return summary


def checkpoint_metadata(config: RunConfig, iterations: int) -> dict:
    """What `eval` needs to rebuild the problem of a checkpoint"""
    return {
        'problem': config.get_problem_name().value,
        'alpha': config.get_alpha(),
        'time_window': config.build_problem().get_domain().get_time_window(),
        'scheme': config.get_scheme().value,
        'iterations': iterations,
    }


def execute_run(config: RunConfig, output_dir: str, current_thread_only: bool = False) -> dict:
    """Train one configuration and write every artifact into output_dir.

    Args:
        config: Validated run configuration.
        output_dir: Run directory, created when missing.
        current_thread_only: Restrict log.txt to records of the calling thread.
    Returns:
        The summary document (also written to summary.json).
    """
    FileManager.ensure_directory(output_dir)
    handler = Logger.add_file_handler(os.path.join(output_dir, solver_constants.LOG_FILE), current_thread_only)
    try:
        FileManager.store_json(config.to_dict(), os.path.join(output_dir, solver_constants.CONFIG_FILE))
        problem = config.build_problem()
        colloc = config.build_collocation(problem)
        collocation.dump_csv(colloc, os.path.join(output_dir, solver_constants.COLLOCATION_FILE))
        checkpoint_path = os.path.join(output_dir, solver_constants.CHECKPOINT_FILE)

        every = config.get_checkpoint_every()

        def periodic_checkpoint(iteration, current):
            if iteration % every == 0:
                network.save_checkpoint(current, checkpoint_path, checkpoint_metadata(config, iteration))

        callback = periodic_checkpoint if every else None
        initial = network.init(config.build_network_config())
        trained, report = trainer.train(initial, problem, colloc, config.build_train_config(), callback,
                                        config.get_evaluation_grid())
        network.save_checkpoint(trained, checkpoint_path, checkpoint_metadata(config, report.get_iterations()))
        FileManager.store_csv(os.path.join(output_dir, solver_constants.TRACE_FILE), TRACE_HEADER,
                              report.trace_rows())

        slice_metrics = {}
        if not report.is_diverged():
            evaluation = trainer.evaluate(trained, problem, config.get_evaluation_grid())
            FileManager.store_csv(os.path.join(output_dir, solver_constants.EVALUATION_FILE),
                                  evaluation.header(), evaluation.rows())
            slices = trainer.evaluate_slices(trained, problem, config.slice_times(problem),
                                             config.get_evaluation_grid()[:-1])
            rows, header = [], None
            for t, table in slices.items():
                header = SLICE_HEADER_PREFIX + table.header()
                rows.extend((t,) + row for row in table.rows())
                slice_metrics[repr(t)] = table.get_metrics().to_dict()
            if header:
                FileManager.store_csv(os.path.join(output_dir, solver_constants.SLICES_FILE), header, rows)

        summary = {
            'created_at': utc_now(),
            'config': config.to_dict(),
            'collocation': colloc.counts(),
            'parameter_count': trained.get_params().size,
            'report': report.to_dict(),
            'slice_metrics': slice_metrics,
        }
        FileManager.store_json(summary, os.path.join(output_dir, solver_constants.SUMMARY_FILE))
        if report.is_diverged():
            Logger.error(report.get_diagnostic())
        else:
            Logger.success('Run written to ' + output_dir)
        return summary
    finally:
        Logger.remove_handler(handler)
