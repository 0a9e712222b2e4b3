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
This module defines the outcome of one training run.
"""

from typing import List, NamedTuple, Optional

from .error_metrics import ErrorMetrics


class LossRecord(NamedTuple):
    """One trace entry; phi_total is phi_eq + phi_ic + phi_bc"""
    iteration: int
    phi_eq: float
    phi_ic: float
    phi_bc: float
    phi_total: float
    lr: float
    elapsed_s: float


TRACE_HEADER = ('iter', 'phi_eq', 'phi_ic', 'phi_bc', 'phi_total', 'lr', 'elapsed_s')


class TrainReport:
    """
        Attributes:
           iterations (int): optimiser steps taken.
           wall_seconds (float): elapsed training time.
           loss_trace (list): LossRecord entries, every ``log_every`` iterations plus the last one.
           final_metrics (ErrorMetrics): error against the analytical solution on the evaluation grid.
           status (str): 'max_iters', 'wall_time', 'tolerance' or 'diverged'.
           diagnostic (str): explanation when the run diverged, else ''.
    """

    STATUSES = ('max_iters', 'wall_time', 'tolerance', 'diverged')

    def __init__(self, iterations: int, wall_seconds: float, loss_trace: List[LossRecord],
                 status: str, final_metrics: Optional[ErrorMetrics] = None, diagnostic: str = ''):
        self.__iterations = iterations
        self.__wall_seconds = wall_seconds
        self.__loss_trace = list(loss_trace)
        self.__status = status
        self.__final_metrics = final_metrics
        self.__diagnostic = diagnostic

    def get_iterations(self) -> int:
        """Get the number of optimiser steps"""
        return self.__iterations

    def get_wall_seconds(self) -> float:
        """Get the training time"""
        return self.__wall_seconds

    def get_loss_trace(self) -> List[LossRecord]:
        """Get the loss trace"""
        return list(self.__loss_trace)

    def get_status(self) -> str:
        """Get the stop reason"""
        return self.__status

    def get_final_metrics(self) -> Optional[ErrorMetrics]:
        """Get the error against the analytical solution"""
        return self.__final_metrics

    def set_final_metrics(self, metrics: ErrorMetrics):
        """Attach the evaluation once the network has been scored"""
        self.__final_metrics = metrics

    def get_diagnostic(self) -> str:
        """Get the divergence explanation"""
        return self.__diagnostic

    def is_diverged(self) -> bool:
        """Check whether the run aborted on a non-finite loss"""
        return self.__status == 'diverged'

    def final_record(self) -> Optional[LossRecord]:
        """Last trace entry, None for an empty trace"""
        return self.__loss_trace[-1] if self.__loss_trace else None

    def trace_rows(self) -> List[tuple]:
        """Trace as CSV rows in TRACE_HEADER order"""
        return [tuple(record) for record in self.__loss_trace]

    def to_dict(self) -> dict:
        """Plain mapping for summaries"""
        last = self.final_record()
        return {
            'iterations': self.__iterations,
            'wall_seconds': self.__wall_seconds,
            'status': self.__status,
            'diagnostic': self.__diagnostic,
            'final_losses': None if last is None else {
                'phi_eq': last.phi_eq,
                'phi_ic': last.phi_ic,
                'phi_bc': last.phi_bc,
                'phi_total': last.phi_total
            },
            'final_metrics': None if self.__final_metrics is None else self.__final_metrics.to_dict()
        }
