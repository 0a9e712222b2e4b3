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
The three benchmark problems: governing equation, manufactured source, initial and
boundary data, analytical solution and domain, plus the residual assembler

    Res = D^alpha u + u - (sum of second spatial derivatives of u) - f

evaluated on a collocation set with the time derivative taken by a Caputo scheme.
"""

import math
from typing import Callable, List, NamedTuple, Optional, Sequence

import numpy as np

from .caputo import CaputoScheme, build_scheme
from .collocation import CollocationSet, build_grid
from .diff_engine import DualJet2, caputo_apply, second_spatial_batch
from .internal.common import solver_constants, solver_messages
from .internal.utils.validators import Validators
from .models import Domain, NetworkConfig, ProblemName, SchemeKind
from .numerics import gamma, log_slope

# 8 / (3 sqrt(pi)) = 2 / Gamma(5/2)
FODE_SOURCE_COEFFICIENT = 8.0 / (3.0 * math.sqrt(math.pi))


class Face(NamedTuple):
    """Boundary face {x_axis = value}"""
    name: str
    axis: int
    value: float


class BoundaryCondition(NamedTuple):
    """Dirichlet data on one face; function of (P, input_dim) points"""
    face: Face
    function: Callable


def _as_output(values):
    return values if np.ndim(values) else float(values)


def _check_time(t) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    if np.any(t < 0):
        raise ValueError(solver_messages.NEGATIVE_TIME_ERROR)
    return t


def _parabola(s):
    return s * (2.0 - s)


def source_fode(t):
    """t^2 + 8/(3 sqrt(pi)) t^1.5"""
    t = _check_time(t)
    return _as_output(t * t + FODE_SOURCE_COEFFICIENT * t ** 1.5)


def source_2d(x, t, alpha: float):
    """(2/Gamma(3-alpha)) x(2-x) t^(2-alpha) + t^2 x(2-x) + 2 t^2"""
    Validators.require_alpha(alpha)
    t = _check_time(t)
    x = np.asarray(x, dtype=np.float64)
    bump = _parabola(x)
    return _as_output(2.0 / gamma(3.0 - alpha) * bump * t ** (2.0 - alpha) + t * t * bump + 2.0 * t * t)


def source_3d(x, y, t, alpha: float):
    """(2/Gamma(3-alpha)) t^(2-alpha) [x(2-x)+y(2-y)] + t^2 [x(2-x)+y(2-y)] + 4 t^2"""
    Validators.require_alpha(alpha)
    t = _check_time(t)
    bump = _parabola(np.asarray(x, dtype=np.float64)) + _parabola(np.asarray(y, dtype=np.float64))
    return _as_output(2.0 / gamma(3.0 - alpha) * t ** (2.0 - alpha) * bump + t * t * bump + 4.0 * t * t)


def literal_source_3d(x, y, t, alpha: float):
    """3D source as published, with the extra x(2-x) factor on the fractional term.

    The analytical solution does not satisfy the equation under this source; it is kept
    to measure that mismatch.
    """
    Validators.require_alpha(alpha)
    t = _check_time(t)
    x = np.asarray(x, dtype=np.float64)
    bump = _parabola(x) + _parabola(np.asarray(y, dtype=np.float64))
    return _as_output(2.0 / gamma(3.0 - alpha) * _parabola(x) * t ** (2.0 - alpha) * bump
                      + t * t * bump + 4.0 * t * t)


def analytical_fode(t):
    """u(t) = t^2"""
    t = np.asarray(t, dtype=np.float64)
    return _as_output(t * t)


def analytical_2d(x, t):
    """u(x, t) = t^2 x(2-x)"""
    t = np.asarray(t, dtype=np.float64)
    return _as_output(t * t * _parabola(np.asarray(x, dtype=np.float64)))


def analytical_3d(x, y, t):
    """u(x, y, t) = t^2 [x(2-x) + y(2-y)]"""
    t = np.asarray(t, dtype=np.float64)
    return _as_output(t * t * (_parabola(np.asarray(x, dtype=np.float64))
                               + _parabola(np.asarray(y, dtype=np.float64))))


class Problem:
    """
        Attributes:
           name (ProblemName): which benchmark.
           domain (Domain): spatial box and time window.
           alpha (float): fractional order in (0, 1).
           source (callable): f at (P, input_dim) points.
           analytical (callable): manufactured solution at (P, input_dim) points.
           ic (callable): initial data at (P, input_dim) points with t = 0.
           bcs (list): BoundaryCondition per face, in the fixed face order.
    """

    def __init__(self, name: ProblemName, domain: Domain, alpha: float, source: Callable,
                 analytical: Callable, spatial_derivatives: Callable, ic: Callable,
                 bcs: Sequence[BoundaryCondition], slice_times: Sequence[float]):
        Validators.require_alpha(alpha)
        self.__name = name
        self.__domain = domain
        self.__alpha = float(alpha)
        self.__source = source
        self.__analytical = analytical
        self.__spatial_derivatives = spatial_derivatives
        self.__ic = ic
        self.__bcs = list(bcs)
        self.__slice_times = tuple(slice_times)

    def get_name(self) -> ProblemName:
        """Get the problem name"""
        return self.__name

    def get_domain(self) -> Domain:
        """Get the domain"""
        return self.__domain

    def get_alpha(self) -> float:
        """Get the fractional order"""
        return self.__alpha

    def get_source(self) -> Callable:
        """Get f as a function of (P, input_dim) points"""
        return self.__source

    def get_analytical(self) -> Callable:
        """Get the analytical solution as a function of (P, input_dim) points"""
        return self.__analytical

    def get_ic(self) -> Callable:
        """Get the initial data"""
        return self.__ic

    def get_bcs(self) -> List[BoundaryCondition]:
        """Get the boundary conditions in face order"""
        return list(self.__bcs)

    def get_bc(self, face_name: str) -> BoundaryCondition:
        """Get the boundary condition of one face"""
        for condition in self.__bcs:
            if condition.face.name == face_name:
                return condition
        raise ValueError(solver_messages.UNKNOWN_FACE_ERROR + repr(face_name))

    def get_slice_times(self) -> List[float]:
        """Reporting timestamps that fall inside the time window"""
        t_final = self.__domain.get_time_window()
        return [t for t in self.__slice_times if t <= t_final + 1e-12]

    def spatial_derivatives(self, points, axis: int):
        """First and second derivative of the analytical solution along a spatial axis"""
        return self.__spatial_derivatives(self.check_points(points), axis)

    def check_points(self, points) -> np.ndarray:
        """Points as a (P, input_dim) array"""
        points = np.asarray(points, dtype=np.float64)
        if points.ndim != 2 or points.shape[1] != self.__domain.get_input_dim():
            raise ValueError(solver_messages.COLLOCATION_DIM_ERROR)
        return points

    def with_time_window(self, time_window: float) -> 'Problem':
        """Same problem over [0, time_window]"""
        return get_problem(self.__name, self.__alpha, time_window)

    def __repr__(self):
        return 'Problem({0}, alpha={1!r}, {2!r})'.format(self.__name.value, self.__alpha, self.__domain)


def _zero(points):
    return np.zeros(points.shape[0])


def _fode(alpha: float, time_window: float) -> Problem:
    return Problem(ProblemName.FODE, Domain([], time_window), alpha,
                   source=lambda p: source_fode(p[:, 0]),
                   analytical=lambda p: analytical_fode(p[:, 0]),
                   spatial_derivatives=None,
                   ic=_zero, bcs=[], slice_times=solver_constants.SLICE_TIMES_FODE)


def _derivatives_2d(points, axis):
    t = points[:, -1]
    return t * t * (2.0 - 2.0 * points[:, axis]), -2.0 * t * t


def _fpde2d(alpha: float, time_window: float) -> Problem:
    faces = [Face('x_lo', 0, 0.0), Face('x_hi', 0, 2.0)]
    return Problem(ProblemName.FPDE2D, Domain([(0.0, 2.0)], time_window), alpha,
                   source=lambda p: source_2d(p[:, 0], p[:, 1], alpha),
                   analytical=lambda p: analytical_2d(p[:, 0], p[:, 1]),
                   spatial_derivatives=_derivatives_2d,
                   ic=_zero,
                   bcs=[BoundaryCondition(face, _zero) for face in faces],
                   slice_times=solver_constants.SLICE_TIMES_2D)


def _fpde3d(alpha: float, time_window: float) -> Problem:
    def along_y(points):
        return analytical_2d(points[:, 1], points[:, 2])

    def along_x(points):
        return analytical_2d(points[:, 0], points[:, 2])

    return Problem(ProblemName.FPDE3D, Domain([(0.0, 2.0), (0.0, 2.0)], time_window), alpha,
                   source=lambda p: source_3d(p[:, 0], p[:, 1], p[:, 2], alpha),
                   analytical=lambda p: analytical_3d(p[:, 0], p[:, 1], p[:, 2]),
                   spatial_derivatives=_derivatives_2d,
                   ic=_zero,
                   bcs=[BoundaryCondition(Face('x_lo', 0, 0.0), along_y),
                        BoundaryCondition(Face('x_hi', 0, 2.0), along_y),
                        BoundaryCondition(Face('y_lo', 1, 0.0), along_x),
                        BoundaryCondition(Face('y_hi', 1, 2.0), along_x)],
                   slice_times=solver_constants.SLICE_TIMES_3D)


_FACTORIES = {
    ProblemName.FODE: (_fode, solver_constants.DEFAULT_TIME_WINDOW_FODE),
    ProblemName.FPDE2D: (_fpde2d, solver_constants.DEFAULT_TIME_WINDOW_2D),
    ProblemName.FPDE3D: (_fpde3d, solver_constants.DEFAULT_TIME_WINDOW_3D),
}


def get_problem(name, alpha: float = solver_constants.DEFAULT_ALPHA,
                time_window: Optional[float] = None) -> Problem:
    """Build a benchmark problem by name ('fode', 'fpde2d', 'fpde3d')"""
    factory, default_window = _FACTORIES[ProblemName.parse(name)]
    return factory(alpha, default_window if time_window is None else time_window)


class AnalyticalField:
    """The analytical solution of a problem behind the network evaluation interface.

    Stands in for a trained network wherever one is evaluated (residual, losses,
    evaluation tables), so the discretisation can be checked in isolation.
    """

    def __init__(self, problem: Problem):
        self.__problem = problem
        self.__config = NetworkConfig(problem.get_domain().get_input_dim(), 1, 1)

    def get_config(self) -> NetworkConfig:
        """Nominal config carrying the input dimension"""
        return self.__config

    def forward_any(self, inputs, params=None):  # pylint: disable=unused-argument
        """(P, 1) values of u, or a jet along the seeded spatial axis"""
        if isinstance(inputs, DualJet2):
            points = self.__problem.check_points(inputs.value)
            axis = int(np.argmax(inputs.d1[0]))
            d1, d2 = self.__problem.spatial_derivatives(points, axis)
            return DualJet2(self.__problem.get_analytical()(points).reshape(-1, 1),
                            np.asarray(d1).reshape(-1, 1), np.asarray(d2).reshape(-1, 1))
        points = self.__problem.check_points(inputs)
        return self.__problem.get_analytical()(points).reshape(-1, 1)

    def forward_batch(self, points) -> np.ndarray:
        """u at every row of a (P, input_dim) array"""
        return self.forward_any(points).reshape(-1)


def residual(problem: Problem, network, scheme: CaputoScheme, colloc: CollocationSet, params=None):
    """Equation residual at every equation point of a collocation set.

    The network is evaluated on the full time-major history grid (t_0..t_N for every
    spatial column), the scheme turns each column into D^alpha u at t_1..t_N, and the
    result is flattened in the order of colloc.get_eq_points().

    Args:
        problem: Benchmark problem.
        network: Network, AnalyticalField or anything exposing get_config/forward_any.
        scheme: Caputo scheme on the collocation time grid.
        colloc: Collocation set of the problem.
        params: Optional flat parameters (array or tape Variable) for the network.
    Returns:
        (N_eq,) numpy array, or a tape Variable when params is one.
    Raises:
        ValueError: the set does not match the problem, or the scheme grid does not
            cover the history of every equation point.
    """
    spatial_dim = problem.get_domain().get_spatial_dim()
    if colloc.get_input_dim() != spatial_dim + 1:
        raise ValueError(solver_messages.COLLOCATION_DIM_ERROR)
    grid = colloc.get_time_grid()
    if scheme.get_grid() != grid:
        raise ValueError(solver_messages.HISTORY_ERROR)
    history = colloc.history_points()
    n_rows, n_space = grid.get_n_steps() + 1, colloc.get_n_space()
    if history.shape[0] != n_rows * n_space:
        raise ValueError(solver_messages.HISTORY_ERROR)

    source = problem.get_source()(colloc.get_eq_points()).reshape(n_rows - 1, n_space)
    if spatial_dim == 0:
        values = network.forward_any(history, params).reshape(n_rows, n_space)
        laplacian = None
    else:
        jets = [second_spatial_batch(network, history, axis, params) for axis in range(spatial_dim)]
        values = jets[0].value.reshape(n_rows, n_space)
        laplacian = jets[0].d2.reshape(n_rows, n_space)[1:]
        for jet in jets[1:]:
            laplacian = laplacian + jet.d2.reshape(n_rows, n_space)[1:]
    result = caputo_apply(scheme, values) + values[1:]
    if laplacian is not None:
        result = result - laplacian
    return (result - source).reshape(-1)


def residual_refinement_order(problem: Problem, kind=SchemeKind.DIETHELM,
                              time_counts: Sequence[int] = (11, 21, 41, 81),
                              space_count: int = 5) -> float:
    """Observed order of max |Res| of the analytical solution as the time grid is refined"""
    spatial_dim = problem.get_domain().get_spatial_dim()
    field = AnalyticalField(problem)
    steps, errors = [], []
    for count in time_counts:
        colloc = build_grid(problem, [space_count] * spatial_dim + [count], 0, 0)
        grid = colloc.get_time_grid()
        scheme = build_scheme(kind, problem.get_alpha(), grid)
        steps.append(grid.get_h())
        errors.append(float(np.max(np.abs(residual(problem, field, scheme, colloc)))))
    return log_slope(steps, errors)
