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
Loss assembly, Adam optimisation under iteration / wall-clock / tolerance budgets,
and evaluation of trained networks against the analytical solutions.
"""

import math
import time
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .caputo import CaputoScheme, build_scheme
from .collocation import COORDINATE_NAMES, CollocationSet
from .diff_engine import Tape, Variable, value_of
from .internal.common import solver_constants, solver_messages
from .internal.utils.logger import Logger
from .internal.utils.validators import Validators
from .models import ErrorMetrics, LossRecord, ProblemName, TrainConfig, TrainReport
from .network import Network
from .numerics import error_metrics
from .problems import Problem, residual

# Held-out evaluation grids used to score a finished run
DEFAULT_EVALUATION_GRID = {
    ProblemName.FODE: (101,),
    ProblemName.FPDE2D: (41, 41),
    ProblemName.FPDE3D: (21, 21, 21),
}

EVALUATION_COLUMNS = ('u_nn', 'u_exact', 'abs_error')


class AdamOptimizer:
    """Adam with bias correction; the learning rate is supplied at every step"""

    def __init__(self, size: int, beta1: float = solver_constants.ADAM_BETA1,
                 beta2: float = solver_constants.ADAM_BETA2, epsilon: float = solver_constants.ADAM_EPSILON):
        self.__beta1 = beta1
        self.__beta2 = beta2
        self.__epsilon = epsilon
        self.__first = np.zeros(size)
        self.__second = np.zeros(size)
        self.__steps = 0

    def get_steps(self) -> int:
        """Get the number of updates applied"""
        return self.__steps

    def step(self, theta: np.ndarray, gradient: np.ndarray, lr: float) -> np.ndarray:
        """Return the updated parameters"""
        self.__steps += 1
        self.__first = self.__beta1 * self.__first + (1.0 - self.__beta1) * gradient
        self.__second = self.__beta2 * self.__second + (1.0 - self.__beta2) * gradient * gradient
        first_hat = self.__first / (1.0 - self.__beta1 ** self.__steps)
        second_hat = self.__second / (1.0 - self.__beta2 ** self.__steps)
        return theta - lr * first_hat / (np.sqrt(second_hat) + self.__epsilon)


def _mean_square(difference):
    if value_of(difference).size == 0:
        return 0.0
    return (difference * difference).mean()


def _check_dimensions(network, problem: Problem, colloc: CollocationSet):
    input_dim = problem.get_domain().get_input_dim()
    if network.get_config().get_input_dim() != input_dim or colloc.get_input_dim() != input_dim:
        raise ValueError(solver_messages.COLLOCATION_DIM_ERROR)


def _bc_targets(problem: Problem, colloc: CollocationSet) -> np.ndarray:
    points = colloc.get_bc_points()
    faces = np.asarray(colloc.get_bc_faces())
    targets = np.zeros(points.shape[0])
    for condition in problem.get_bcs():
        rows = faces == condition.face.name
        if rows.any():
            targets[rows] = condition.function(points[rows])
    return targets


def loss_terms(network, problem: Problem, colloc: CollocationSet, scheme: CaputoScheme, params=None):
    """(phi_eq, phi_ic, phi_bc) as floats, or tape variables when params is a Variable"""
    _check_dimensions(network, problem, colloc)
    phi_eq = _mean_square(residual(problem, network, scheme, colloc, params))
    phi_ic, phi_bc = 0.0, 0.0
    ic_points = colloc.get_ic_points()
    if ic_points.shape[0]:
        predicted = network.forward_any(ic_points, params).reshape(-1)
        phi_ic = _mean_square(predicted - problem.get_ic()(ic_points))
    bc_points = colloc.get_bc_points()
    if bc_points.shape[0]:
        predicted = network.forward_any(bc_points, params).reshape(-1)
        phi_bc = _mean_square(predicted - _bc_targets(problem, colloc))
    return phi_eq, phi_ic, phi_bc


def loss(network, problem: Problem, colloc: CollocationSet,
         scheme: CaputoScheme) -> Tuple[float, float, float, float]:
    """Mean squared equation residual, initial mismatch and boundary mismatch, and their sum.

    Returns:
        (phi_eq, phi_ic, phi_bc, phi_total) with phi_total = phi_eq + phi_ic + phi_bc.
    """
    phi_eq, phi_ic, phi_bc = (float(value_of(term)) for term in loss_terms(network, problem, colloc, scheme))
    return phi_eq, phi_ic, phi_bc, phi_eq + phi_ic + phi_bc


def minimize(objective: Callable, theta0, config: TrainConfig,
             callback: Optional[Callable] = None) -> Tuple[np.ndarray, TrainReport]:
    """Full-batch Adam on a tape-differentiable objective.

    Args:
        objective: Function of the tape variable holding theta, returning either one
            scalar Variable or the three loss components (phi_eq, phi_ic, phi_bc).
        theta0: Starting parameters.
        config: Learning-rate schedule, budgets and trace interval.
        callback: Called as callback(iteration, theta) after every update.
    Returns:
        (theta, report); the report has no final metrics.
    """
    theta = np.array(theta0, dtype=np.float64)
    optimizer = AdamOptimizer(theta.size)
    max_iters = config.get_max_iters()
    max_wall = config.get_max_wall_seconds()
    tolerance = config.get_loss_tolerance()
    log_every = config.get_log_every()
    trace: List[LossRecord] = []
    status, diagnostic = None, ''
    current_lr = None
    last = None
    start = time.monotonic()
    iteration = 0
    while status is None:
        elapsed = time.monotonic() - start
        if max_iters is not None and iteration >= max_iters:
            status = 'max_iters'
            break
        if max_wall is not None and elapsed >= max_wall:
            status = 'wall_time'
            break
        iteration += 1
        lr = config.learning_rate(iteration)
        if current_lr is not None and lr != current_lr:
            Logger.info(solver_messages.LEARNING_RATE_SWITCH + '{0} at iteration {1}'.format(lr, iteration))
        current_lr = lr

        tape = Tape()
        variable = tape.variable(theta)
        terms = objective(variable)
        if isinstance(terms, Variable) or not isinstance(terms, (tuple, list)):
            terms = (terms, 0.0, 0.0)
        components = [float(value_of(term)) for term in terms]
        phi_total = components[0] + components[1] + components[2]
        last = LossRecord(iteration, components[0], components[1], components[2], phi_total, lr, elapsed)

        if not all(math.isfinite(value) for value in components):
            status = 'diverged'
            diagnostic = solver_messages.TRAIN_DIVERGED + '{0}: phi_eq={1} phi_ic={2} phi_bc={3}'.format(
                iteration, *components)
            Logger.error(diagnostic)
            iteration -= 1
            break
        if iteration == 1 or iteration % log_every == 0:
            trace.append(last)
            Logger.debug('iter {0} phi_total {1:.6e} (eq {2:.3e}, ic {3:.3e}, bc {4:.3e}) lr {5}'.format(
                iteration, phi_total, components[0], components[1], components[2], lr))
        if tolerance is not None and phi_total <= tolerance:
            status = 'tolerance'
            iteration -= 1
            break

        total = terms[0] + terms[1] + terms[2]
        gradient = tape.gradient(total, [variable])[0] if isinstance(total, Variable) else np.zeros_like(theta)
        theta = optimizer.step(theta, gradient, lr)
        if callback is not None:
            callback(iteration, theta)

    if last is not None and (not trace or trace[-1] is not last):
        trace.append(last)
    report = TrainReport(iterations=iteration, wall_seconds=time.monotonic() - start,
                         loss_trace=trace, status=status, diagnostic=diagnostic)
    return theta, report


def train(network: Network, problem: Problem, colloc: CollocationSet, config: TrainConfig,
          callback: Optional[Callable] = None,
          evaluation_grid: Optional[Sequence[int]] = None) -> Tuple[Network, TrainReport]:
    """Fit a network to a problem on a collocation set.

    Args:
        network: Initial network.
        problem: Benchmark problem.
        colloc: Collocation set of the problem.
        config: Training configuration; its scheme kind selects the Caputo scheme.
        callback: Optional callback(iteration, network) after every update.
        evaluation_grid: Held-out grid scoring the final network, per-problem default otherwise.
    Returns:
        (trained network, report with final metrics)
    """
    _check_dimensions(network, problem, colloc)
    scheme = build_scheme(config.get_scheme_kind(), problem.get_alpha(), colloc.get_time_grid())
    Logger.info('Training {0} with the {1} scheme, {2} parameters'.format(
        problem.get_name().value, config.get_scheme_kind().value, network.get_params().size))

    def objective(theta):
        return loss_terms(network, problem, colloc, scheme, theta)

    def on_step(iteration, theta):
        callback(iteration, network.with_params(theta))

    theta, report = minimize(objective, network.get_params(), config, on_step if callback else None)
    trained = network.with_params(theta)
    if not report.is_diverged():
        grid = evaluation_grid or DEFAULT_EVALUATION_GRID[problem.get_name()]
        report.set_final_metrics(evaluate(trained, problem, grid).get_metrics())
        Logger.info('Finished after {0} iterations ({1}), rel_l2 {2:.3e}'.format(
            report.get_iterations(), report.get_status(), report.get_final_metrics().get_rel_l2()))
    return trained, report


class Evaluation:
    """
        Attributes:
           coordinate_names (tuple): column names of the points.
           points (numpy.ndarray): (P, input_dim) evaluation points.
           predicted (numpy.ndarray): u_NN at the points.
           exact (numpy.ndarray): analytical solution at the points.
           metrics (ErrorMetrics): over the whole table.
    """

    def __init__(self, coordinate_names: Sequence[str], points: np.ndarray,
                 predicted: np.ndarray, exact: np.ndarray):
        self.__coordinate_names = tuple(coordinate_names)
        self.__points = points
        self.__predicted = predicted
        self.__exact = exact
        self.__metrics = error_metrics(predicted, exact)

    def get_points(self) -> np.ndarray:
        """Get the evaluation points"""
        return self.__points

    def get_predicted(self) -> np.ndarray:
        """Get u_NN"""
        return self.__predicted

    def get_exact(self) -> np.ndarray:
        """Get the analytical values"""
        return self.__exact

    def get_abs_error(self) -> np.ndarray:
        """Get |u_NN - u|"""
        return np.abs(self.__predicted - self.__exact)

    def get_metrics(self) -> ErrorMetrics:
        """Get the metrics of the full table"""
        return self.__metrics

    def slice_metrics(self) -> Dict[float, ErrorMetrics]:
        """Metrics per distinct time value"""
        times = self.__points[:, -1]
        return {float(t): error_metrics(self.__predicted[times == t], self.__exact[times == t])
                for t in np.unique(times)}

    def header(self) -> Tuple[str, ...]:
        """CSV column names"""
        return self.__coordinate_names + EVALUATION_COLUMNS

    def rows(self) -> List[tuple]:
        """CSV rows in header order"""
        return [tuple(float(c) for c in point) + (float(u), float(exact), float(abs(u - exact)))
                for point, u, exact in zip(self.__points, self.__predicted, self.__exact)]


def _evaluate_points(network, problem: Problem, points: np.ndarray) -> Evaluation:
    names = COORDINATE_NAMES[points.shape[1]]
    return Evaluation(names, points, network.forward_batch(points), problem.get_analytical()(points))


def evaluate(network, problem: Problem, eval_grid: Sequence[int]) -> Evaluation:
    """Dense uniform grid over the whole domain including t = 0, independent of the training set"""
    domain = problem.get_domain()
    counts = list(eval_grid)
    if len(counts) != domain.get_input_dim() or not all(Validators.validate_positive_int(c) for c in counts):
        raise ValueError(solver_messages.COLLOCATION_COUNT_ERROR + 'evaluation grid ' + repr(eval_grid))
    spatial = [np.linspace(lo, hi, count) for (lo, hi), count in zip(domain.get_spatial_box(), counts[:-1])]
    # time-major like the collocation grids
    mesh = np.meshgrid(np.linspace(0.0, domain.get_time_window(), counts[-1]), *spatial, indexing='ij')
    points = np.stack([axis.ravel() for axis in mesh[1:] + mesh[:1]], axis=1)
    return _evaluate_points(network, problem, points)


def evaluate_slices(network, problem: Problem, times: Sequence[float], points_per_axis: Sequence[int],
                    fixed: Optional[Mapping[str, float]] = None) -> Dict[float, Evaluation]:
    """Tables at exact reporting times.

    Args:
        network: Network or AnalyticalField.
        problem: Benchmark problem.
        times: Reporting timestamps inside the time window.
        points_per_axis: Node count per spatial axis.
        fixed: Spatial axes pinned to one value, by coordinate name, e.g. {'x': 1.0}.
    Returns:
        Evaluation per timestamp.
    """
    domain = problem.get_domain()
    names = COORDINATE_NAMES[domain.get_input_dim()]
    fixed = dict(fixed or {})
    unknown = [name for name in fixed if name not in names[:-1]]
    if unknown or len(points_per_axis) != domain.get_spatial_dim():
        raise ValueError(solver_messages.COLLOCATION_DIM_ERROR)
    axes = []
    for name, (lo, hi), count in zip(names, domain.get_spatial_box(), points_per_axis):
        axes.append(np.array([float(fixed[name])]) if name in fixed else np.linspace(lo, hi, count))
    if axes:
        mesh = np.meshgrid(*axes, indexing='ij')
        space = np.stack([axis.ravel() for axis in mesh], axis=1)
    else:
        space = np.zeros((1, 0))
    slices = {}
    for t in times:
        if not 0.0 <= t <= domain.get_time_window() + 1e-12:
            raise ValueError(solver_messages.NEGATIVE_TIME_ERROR if t < 0 else solver_messages.DOMAIN_ERROR)
        points = np.hstack([space, np.full((space.shape[0], 1), float(t))])
        slices[float(t)] = _evaluate_points(network, problem, points)
    return slices
