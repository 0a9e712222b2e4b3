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
This module defines the run configuration document of the benchmark front end and
the three presets that encode the published hyperparameter table.

A run is reconstructible from its JSON document alone. Unknown keys are rejected at
every nesting level and every problem found is reported at once.
"""

import copy
import math
import os
from typing import List, Optional

from ..solvers.collocation import CollocationSet, build_grid
from ..solvers.internal.common import solver_constants, solver_messages
from ..solvers.internal.utils.validators import ConfigValidationError, Validators
from ..solvers.models import NetworkConfig, ProblemName, SchemeKind, TrainConfig
from ..solvers.problems import Problem, get_problem

ROOT_KEYS = ('problem', 'alpha', 'scheme', 'seed', 'time_window', 'output_dir', 'checkpoint_every',
             'network', 'collocation', 'train', 'evaluation')
NETWORK_KEYS = ('hidden_layers', 'neurons_per_layer', 'activation')
COLLOCATION_KEYS = ('points_per_axis', 'n_ic', 'n_bc')
TRAIN_KEYS = ('lr_values', 'lr_change_iters', 'max_iters', 'max_wall_seconds', 'loss_tolerance', 'log_every')
EVALUATION_KEYS = ('points_per_axis', 'slice_times')
ROOT_DEFAULTS = {'seed': 0, 'time_window': None, 'checkpoint_every': None}
REQUIRED_ROOT_KEYS = tuple(key for key in ROOT_KEYS if key not in ROOT_DEFAULTS)

_FODE_SCHEDULE = {'lr_values': [0.01, 0.001, 0.0005], 'lr_change_iters': [200, 1000]}
_FPDE_SCHEDULE = {'lr_values': [0.01, 0.005, 0.001], 'lr_change_iters': [2000, 5000]}

PRESETS = {
    'fode': {
        'problem': 'fode', 'alpha': 0.5, 'scheme': 'diethelm', 'seed': 0, 'time_window': None,
        'output_dir': 'runs/fode', 'checkpoint_every': None,
        'network': {'hidden_layers': 3, 'neurons_per_layer': 10, 'activation': 'tanh'},
        'collocation': {'points_per_axis': [30], 'n_ic': 30, 'n_bc': 0},
        'train': dict(_FODE_SCHEDULE, max_iters=5000, max_wall_seconds=None, loss_tolerance=None, log_every=100),
        'evaluation': {'points_per_axis': [101], 'slice_times': None},
    },
    'fpde2d': {
        'problem': 'fpde2d', 'alpha': 0.5, 'scheme': 'diethelm', 'seed': 0, 'time_window': None,
        'output_dir': 'runs/fpde2d', 'checkpoint_every': None,
        'network': {'hidden_layers': 4, 'neurons_per_layer': 20, 'activation': 'tanh'},
        'collocation': {'points_per_axis': [10, 10], 'n_ic': 100, 'n_bc': 100},
        'train': dict(_FPDE_SCHEDULE, max_iters=100000, max_wall_seconds=600.0, loss_tolerance=None, log_every=500),
        'evaluation': {'points_per_axis': [41, 41], 'slice_times': None},
    },
    'fpde3d': {
        'problem': 'fpde3d', 'alpha': 0.5, 'scheme': 'diethelm', 'seed': 0, 'time_window': None,
        'output_dir': 'runs/fpde3d', 'checkpoint_every': None,
        'network': {'hidden_layers': 4, 'neurons_per_layer': 20, 'activation': 'tanh'},
        'collocation': {'points_per_axis': [5, 5, 5], 'n_ic': 5, 'n_bc': 25},
        'train': dict(_FPDE_SCHEDULE, max_iters=100000, max_wall_seconds=1800.0, loss_tolerance=None, log_every=500),
        'evaluation': {'points_per_axis': [21, 21, 21], 'slice_times': None},
    },
}


def _optional(value, check) -> bool:
    return value is None or check(value)


def _int_list(value, minimum: int) -> bool:
    return isinstance(value, list) and all(
        Validators.validate_nonnegative_int(item) and item >= minimum for item in value)


def validate_document(document) -> List[str]:
    """Every problem of a run configuration document, in a fixed order"""
    errors = Validators.check_keys(document, ROOT_KEYS, REQUIRED_ROOT_KEYS)
    if not isinstance(document, dict):
        return errors

    problem = None
    if 'problem' in document:
        try:
            problem = ProblemName.parse(document['problem'])
        except ValueError as err:
            errors.append(str(err))
    if 'alpha' in document and not Validators.validate_alpha(document['alpha']):
        errors.append(solver_messages.ALPHA_RANGE_ERROR + repr(document['alpha']))
    if 'scheme' in document:
        try:
            SchemeKind.parse(document['scheme'])
        except ValueError as err:
            errors.append(str(err))
    if 'seed' in document and not Validators.validate_nonnegative_int(document['seed']):
        errors.append(solver_messages.CONFIG_TYPE_ERROR + "'seed' (expected a nonnegative integer)")
    if not _optional(document.get('time_window'), Validators.validate_positive_real):
        errors.append(solver_messages.CONFIG_TYPE_ERROR + "'time_window' (expected a positive number or null)")
    if 'output_dir' in document and not Validators.validate_string(document['output_dir']):
        errors.append(solver_messages.CONFIG_TYPE_ERROR + "'output_dir' (expected a non-empty string)")
    if not _optional(document.get('checkpoint_every'), Validators.validate_positive_int):
        errors.append(solver_messages.CONFIG_TYPE_ERROR + "'checkpoint_every' (expected a positive integer or null)")

    input_dim = None if problem is None else get_problem(problem).get_domain().get_input_dim()
    if 'network' in document:
        errors.extend(_validate_network(document['network']))
    if 'collocation' in document:
        errors.extend(_validate_collocation(document['collocation'], problem, input_dim))
    if 'train' in document:
        errors.extend(_validate_train(document['train']))
    if 'evaluation' in document:
        errors.extend(_validate_evaluation(document['evaluation'], input_dim, _time_window(document, problem)))
    return errors


def _time_window(document: dict, problem: Optional[ProblemName]) -> Optional[float]:
    """T the run will use, None when it cannot be resolved"""
    window = document.get('time_window')
    if window is not None:
        return float(window) if Validators.validate_positive_real(window) else None
    if problem is None:
        return None
    return get_problem(problem).get_domain().get_time_window()


def _validate_network(section) -> List[str]:
    errors = Validators.check_keys(section, NETWORK_KEYS, NETWORK_KEYS[:2], 'network.')
    if not isinstance(section, dict):
        return errors
    for key in NETWORK_KEYS[:2]:
        if key in section and not Validators.validate_positive_int(section[key]):
            errors.append(solver_messages.CONFIG_TYPE_ERROR + repr('network.' + key) + ' (expected a positive integer)')
    if section.get('activation', 'tanh') != 'tanh':
        errors.append(solver_messages.NETWORK_ACTIVATION_ERROR + repr(section['activation']))
    return errors


def _validate_collocation(section, problem: Optional[ProblemName], input_dim: Optional[int]) -> List[str]:
    errors = Validators.check_keys(section, COLLOCATION_KEYS, COLLOCATION_KEYS, 'collocation.')
    if not isinstance(section, dict):
        return errors
    counts = section.get('points_per_axis')
    if 'points_per_axis' in section:
        if not _int_list(counts, 2):
            errors.append(solver_messages.COLLOCATION_COUNT_ERROR + 'points_per_axis needs integers >= 2')
        elif input_dim is not None and len(counts) != input_dim:
            errors.append(solver_messages.COLLOCATION_DIM_ERROR + ' (expected {0} counts)'.format(input_dim))
    for key in ('n_ic', 'n_bc'):
        if key in section and not Validators.validate_nonnegative_int(section[key]):
            errors.append(solver_messages.CONFIG_TYPE_ERROR + repr('collocation.' + key) + ' (expected an integer >= 0)')
    n_bc = section.get('n_bc')
    if Validators.validate_nonnegative_int(n_bc):
        if problem is ProblemName.FODE and n_bc:
            errors.append(solver_messages.COLLOCATION_COUNT_ERROR + 'the fODE has no boundary, n_bc must be 0')
        if problem is ProblemName.FPDE3D and math.isqrt(n_bc) ** 2 != n_bc:
            errors.append(solver_messages.COLLOCATION_COUNT_ERROR + '3D boundary count per face must be a square')
    return errors


def _validate_train(section) -> List[str]:
    errors = Validators.check_keys(section, TRAIN_KEYS, ('lr_values',), 'train.')
    if errors or not isinstance(section, dict):
        return errors
    try:
        TrainConfig(**section)
    except (TypeError, ValueError) as err:
        errors.append(str(err))
    return errors


def _validate_evaluation(section, input_dim: Optional[int], time_window: Optional[float] = None) -> List[str]:
    errors = Validators.check_keys(section, EVALUATION_KEYS, ('points_per_axis',), 'evaluation.')
    if not isinstance(section, dict):
        return errors
    counts = section.get('points_per_axis')
    if 'points_per_axis' in section:
        if not _int_list(counts, 1):
            errors.append(solver_messages.COLLOCATION_COUNT_ERROR + 'evaluation points_per_axis needs integers >= 1')
        elif input_dim is not None and len(counts) != input_dim:
            errors.append(solver_messages.COLLOCATION_DIM_ERROR + ' (expected {0} evaluation counts)'.format(input_dim))
    times = section.get('slice_times')
    if times is not None and not (isinstance(times, list) and all(
            Validators.validate_real(t) and t >= 0 for t in times)):
        errors.append(solver_messages.CONFIG_TYPE_ERROR + "'evaluation.slice_times' (expected nonnegative numbers)")
    elif times is not None and time_window is not None:
        outside = [t for t in times if t > time_window]
        if outside:
            errors.append(solver_messages.SLICE_TIME_ERROR + '{0!r} > T = {1!r}'.format(outside, time_window))
    return errors


class RunConfig:
    """
        Attributes:
           document (dict): the validated JSON document, in canonical form.
    """

    def __init__(self, document: dict):
        errors = validate_document(document)
        if errors:
            raise ConfigValidationError(errors)
        self.__document = copy.deepcopy(document)
        for key, default in ROOT_DEFAULTS.items():
            self.__document.setdefault(key, default)
        self.__document['problem'] = ProblemName.parse(document['problem']).value
        self.__document['scheme'] = SchemeKind.parse(document['scheme']).value
        self.__document['network'].setdefault('activation', 'tanh')
        self.__document['evaluation'].setdefault('slice_times', None)
        self.__document['train'] = {key: TrainConfig(**document['train']).to_dict()[key] for key in TRAIN_KEYS}

    @classmethod
    def from_dict(cls, document: dict) -> 'RunConfig':
        """Validate and build"""
        return cls(document)

    @classmethod
    def preset(cls, name: str) -> 'RunConfig':
        """One of 'fode', 'fpde2d', 'fpde3d'"""
        key = str(name).strip().lower()
        if key not in PRESETS:
            raise ConfigValidationError([solver_messages.PRESET_ERROR + repr(name)])
        return cls(PRESETS[key])

    def to_dict(self) -> dict:
        """Canonical JSON document"""
        return copy.deepcopy(self.__document)

    def with_changes(self, **changes) -> 'RunConfig':
        """Copy with root keys replaced; nested sections are merged key by key"""
        document = self.to_dict()
        for key, value in changes.items():
            if isinstance(value, dict) and isinstance(document.get(key), dict):
                document[key].update(value)
            else:
                document[key] = value
        return RunConfig(document)

    def get_problem_name(self) -> ProblemName:
        """Get the benchmark problem"""
        return ProblemName.parse(self.__document['problem'])

    def get_alpha(self) -> float:
        """Get the fractional order"""
        return float(self.__document['alpha'])

    def get_scheme(self) -> SchemeKind:
        """Get the Caputo scheme"""
        return SchemeKind.parse(self.__document['scheme'])

    def get_seed(self) -> int:
        """Get the seed of initialisation and training"""
        return self.__document['seed']

    def get_time_window(self) -> Optional[float]:
        """Get the time window override"""
        return self.__document['time_window']

    def get_checkpoint_every(self) -> Optional[int]:
        """Get the periodic checkpoint interval"""
        return self.__document['checkpoint_every']

    def get_collocation_counts(self) -> dict:
        """Get points_per_axis, n_ic and n_bc"""
        return dict(self.__document['collocation'])

    def get_evaluation_grid(self) -> List[int]:
        """Get the evaluation grid counts"""
        return list(self.__document['evaluation']['points_per_axis'])

    def get_output_dir(self, root: Optional[str] = None) -> str:
        """Output directory; relative paths resolve against root, then FPINN_OUTPUT_ROOT"""
        output_dir = self.__document['output_dir']
        root = root or os.environ.get(solver_constants.ENV_OUTPUT_ROOT)
        if root and not os.path.isabs(output_dir):
            return os.path.join(root, output_dir)
        return output_dir

    def build_problem(self) -> Problem:
        """Benchmark problem with this alpha and time window"""
        return get_problem(self.get_problem_name(), self.get_alpha(), self.get_time_window())

    def build_network_config(self) -> NetworkConfig:
        """Architecture, with the input dimension of the problem"""
        section = self.__document['network']
        input_dim = get_problem(self.get_problem_name()).get_domain().get_input_dim()
        return NetworkConfig(input_dim, section['hidden_layers'], section['neurons_per_layer'],
                             section['activation'], self.get_seed())

    def build_train_config(self) -> TrainConfig:
        """Training configuration with this scheme and seed"""
        return TrainConfig(seed=self.get_seed(), scheme_kind=self.get_scheme(), **self.__document['train'])

    def build_collocation(self, problem: Optional[Problem] = None) -> CollocationSet:
        """Collocation set for the problem"""
        section = self.__document['collocation']
        return build_grid(problem or self.build_problem(), section['points_per_axis'], section['n_ic'], section['n_bc'])

    def slice_times(self, problem: Optional[Problem] = None) -> List[float]:
        """Reporting timestamps: configured ones, else the problem defaults inside the window"""
        configured = self.__document['evaluation']['slice_times']
        if configured is not None:
            return [float(t) for t in configured]
        return (problem or self.build_problem()).get_slice_times()

    def __eq__(self, other):
        return isinstance(other, RunConfig) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(repr(self.to_dict()))

    def __repr__(self):
        return 'RunConfig({0})'.format(self.__document)
