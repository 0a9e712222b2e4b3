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
This module defines the optimiser settings and budgets of one training run.
"""

import bisect
from typing import List, Optional, Sequence

from ..internal.common import solver_messages
from ..internal.utils.validators import Validators
from .scheme_kind import SchemeKind


class TrainConfig:
    """Step-scheduled Adam settings with iteration / wall-clock / tolerance stops.

    Iterations are counted from 1. Iteration ``i`` runs with
    ``lr_values[k]`` where ``k`` is the number of entries of ``lr_change_iters``
    strictly below ``i``; a change listed at 200 therefore takes effect at iteration 201.

    Full-batch Adam draws no random numbers, so ``seed`` does not steer training. It
    records the initialisation seed of the run (the bench front end copies it from the
    network config) and is written to run documents with the rest of the configuration.
    """

    KEYS = ('lr_values', 'lr_change_iters', 'max_iters', 'max_wall_seconds', 'seed',
            'scheme_kind', 'loss_tolerance', 'log_every')

    def __init__(self, lr_values: Sequence[float],
                 lr_change_iters: Sequence[int] = (),
                 max_iters: Optional[int] = None,
                 max_wall_seconds: Optional[float] = None,
                 seed: int = 0,
                 scheme_kind=SchemeKind.DIETHELM,
                 loss_tolerance: Optional[float] = None,
                 log_every: int = 100):
        self.__lr_values = list(lr_values)
        self.__lr_change_iters = list(lr_change_iters)
        self.__max_iters = max_iters
        self.__max_wall_seconds = max_wall_seconds
        self.__seed = seed
        self.__scheme_kind = scheme_kind
        self.__loss_tolerance = loss_tolerance
        self.__log_every = log_every
        errors = self.validate()
        if errors:
            raise ValueError(solver_messages.TRAIN_CONFIG_ERROR + '; '.join(errors))
        self.__scheme_kind = SchemeKind.parse(scheme_kind)
        self.__lr_values = [float(value) for value in self.__lr_values]
        if self.__max_wall_seconds is not None:
            self.__max_wall_seconds = float(self.__max_wall_seconds)
        if self.__loss_tolerance is not None:
            self.__loss_tolerance = float(self.__loss_tolerance)

    def validate(self) -> List[str]:
        """Every violated constraint as a message"""
        errors = []
        if not self.__lr_values or not all(Validators.validate_positive_real(v) for v in self.__lr_values):
            errors.append('lr_values must be a non-empty list of positive reals')
        if not Validators.validate_strictly_increasing(self.__lr_change_iters):
            errors.append('lr_change_iters must be strictly increasing iteration indices')
        if len(self.__lr_values) != len(self.__lr_change_iters) + 1:
            errors.append('lr_values must have exactly one more entry than lr_change_iters')
        if self.__max_iters is not None and not Validators.validate_positive_int(self.__max_iters):
            errors.append('max_iters must be a positive integer or null')
        if self.__max_wall_seconds is not None \
                and not Validators.validate_positive_real(self.__max_wall_seconds):
            errors.append('max_wall_seconds must be a positive real or null')
        if self.__max_iters is None and self.__max_wall_seconds is None:
            errors.append('at least one of max_iters and max_wall_seconds must be finite')
        if self.__loss_tolerance is not None and not Validators.validate_positive_real(self.__loss_tolerance):
            errors.append('loss_tolerance must be a positive real or null')
        if not Validators.validate_nonnegative_int(self.__seed):
            errors.append('seed must be an unsigned integer')
        if not Validators.validate_positive_int(self.__log_every):
            errors.append('log_every must be a positive integer')
        try:
            SchemeKind.parse(self.__scheme_kind)
        except ValueError as err:
            errors.append(str(err))
        return errors

    def get_lr_values(self) -> List[float]:
        """Get the learning rates of the schedule"""
        return list(self.__lr_values)

    def get_lr_change_iters(self) -> List[int]:
        """Get the iterations after which the learning rate changes"""
        return list(self.__lr_change_iters)

    def get_max_iters(self) -> Optional[int]:
        """Get the iteration budget, None when unlimited"""
        return self.__max_iters

    def get_max_wall_seconds(self) -> Optional[float]:
        """Get the wall-clock budget, None when unlimited"""
        return self.__max_wall_seconds

    def get_seed(self) -> int:
        """Get the run seed (provenance only)"""
        return self.__seed

    def get_scheme_kind(self) -> SchemeKind:
        """Get the Caputo discretisation"""
        return self.__scheme_kind

    def get_loss_tolerance(self) -> Optional[float]:
        """Get the total-loss stop threshold"""
        return self.__loss_tolerance

    def get_log_every(self) -> int:
        """Get the trace interval"""
        return self.__log_every

    def learning_rate(self, iteration: int) -> float:
        """Learning rate in effect at a 1-based iteration"""
        return self.__lr_values[bisect.bisect_left(self.__lr_change_iters, iteration)]

    def with_changes(self, **changes) -> 'TrainConfig':
        """Copy with some fields replaced"""
        values = self.to_dict()
        values.update(changes)
        return TrainConfig(**values)

    def to_dict(self) -> dict:
        """Plain mapping for JSON documents"""
        return {
            'lr_values': list(self.__lr_values),
            'lr_change_iters': list(self.__lr_change_iters),
            'max_iters': self.__max_iters,
            'max_wall_seconds': self.__max_wall_seconds,
            'seed': self.__seed,
            'scheme_kind': self.__scheme_kind.value,
            'loss_tolerance': self.__loss_tolerance,
            'log_every': self.__log_every
        }

    @classmethod
    def from_dict(cls, document: dict) -> 'TrainConfig':
        """Build from a mapping, rejecting unknown keys"""
        errors = Validators.check_keys(document, cls.KEYS, ('lr_values',))
        if errors:
            raise ValueError('; '.join(errors))
        return cls(**document)

    def __eq__(self, other):
        return isinstance(other, TrainConfig) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(repr(self.to_dict()))

    def __repr__(self):
        return 'TrainConfig({0})'.format(self.to_dict())
