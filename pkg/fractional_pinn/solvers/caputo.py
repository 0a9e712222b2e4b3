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
Discrete Caputo fractional derivatives on uniform time grids.

Two schemes of order 2 - alpha are provided, the Diethelm finite-difference
scheme and the L1 scheme, together with the closed-form Caputo derivative of
monomials used to validate them. Both schemes are folded into one linear form
per target node,

    D^alpha f(t_r) ~= sum_{j=0..r} w[r][j] f(t_j),

with the grid prefactor absorbed into w. Every row sums to zero, so the form is
evaluated as sum_{j>=1} w[r][j] (f_j - f_0), which annihilates constants exactly.
"""

from threading import Lock
from typing import Dict, List, NamedTuple, Sequence, Tuple

import numpy as np

from .internal.common import solver_messages
from .internal.utils.logger import Logger
from .internal.utils.validators import Validators
from .models import SchemeKind, TimeGrid
from .numerics import gamma, log_slope

# Errors at or below this fraction of the exact value carry no convergence information
ROUNDOFF_TOLERANCE = 1e-12


def _require_index(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(solver_messages.NEGATIVE_INDEX_ERROR)


def diethelm_coefficient(n: int, n_r: int, alpha: float) -> float:
    """Three-branch Diethelm weight a_{n, n_r}.

    Args:
        n: History offset, 0 <= n <= n_r.
        n_r: Target node index, >= 1.
        alpha: Fractional order in (0, 1).
    """
    Validators.require_alpha(alpha)
    _require_index(n)
    _require_index(n_r)
    if n_r < 1 or n > n_r:
        raise ValueError(solver_messages.COEFFICIENT_INDEX_ERROR)
    beta = 1.0 - alpha
    if n == 0:
        return 1.0
    if n < n_r:
        return (n + 1) ** beta - 2.0 * n ** beta + (n - 1) ** beta
    return beta * n_r ** (-alpha) - n_r ** beta + (n_r - 1) ** beta


def l1_coefficient(n: int, alpha: float) -> float:
    """L1 weight b_n = ((n+1)^(1-alpha) - n^(1-alpha)) / Gamma(2 - alpha)"""
    Validators.require_alpha(alpha)
    _require_index(n)
    beta = 1.0 - alpha
    return ((n + 1) ** beta - n ** beta) / gamma(2.0 - alpha)


def _toeplitz_lower(generator: np.ndarray) -> np.ndarray:
    size = generator.size
    offsets = np.arange(size)[:, None] - np.arange(size)[None, :]
    return np.where(offsets >= 0, generator[np.clip(offsets, 0, None)], 0.0)


def _diethelm_generator(alpha: float, n_steps: int, h: float) -> np.ndarray:
    # entry n multiplies f_{r-n}; the n = n_r branch multiplies f_0 - f_0 and drops out
    beta = 1.0 - alpha
    n = np.arange(n_steps, dtype=np.float64)
    generator = (n + 1.0) ** beta - 2.0 * n ** beta + np.abs(n - 1.0) ** beta
    generator[0] = 1.0
    return generator / (h ** alpha * gamma(2.0 - alpha))


def _l1_generator(alpha: float, n_steps: int, h: float) -> np.ndarray:
    beta = 1.0 - alpha
    n = np.arange(n_steps + 1, dtype=np.float64)
    b = ((n + 1.0) ** beta - n ** beta) / gamma(2.0 - alpha)
    generator = np.empty(n_steps, dtype=np.float64)
    generator[0] = b[0]
    generator[1:] = b[1:n_steps] - b[:n_steps - 1]
    return generator * h ** (-alpha)


class CaputoScheme:
    """Immutable weight table of one discrete Caputo operator.

    ``get_weights()`` is the full (N+1) x (N+1) lower-triangular table, row r holding
    w[r][0..r] (row 0 is empty since the operator is undefined at t_0).
    ``get_difference_matrix()`` is its N x N block acting on f_j - f_0, j = 1..N.
    """

    def __init__(self, kind: SchemeKind, alpha: float, grid: TimeGrid):
        Validators.require_alpha(alpha)
        kind = SchemeKind.parse(kind)
        n_steps = grid.get_n_steps()
        if kind is SchemeKind.DIETHELM:
            generator = _diethelm_generator(alpha, n_steps, grid.get_h())
        else:
            generator = _l1_generator(alpha, n_steps, grid.get_h())
        difference_matrix = _toeplitz_lower(generator)
        weights = np.zeros((n_steps + 1, n_steps + 1), dtype=np.float64)
        weights[1:, 1:] = difference_matrix
        weights[1:, 0] = -difference_matrix.sum(axis=1)
        difference_matrix.setflags(write=False)
        weights.setflags(write=False)
        self.__kind = kind
        self.__alpha = float(alpha)
        self.__grid = grid
        self.__difference_matrix = difference_matrix
        self.__weights = weights

    def get_kind(self) -> SchemeKind:
        """Get the scheme kind"""
        return self.__kind

    def get_alpha(self) -> float:
        """Get the fractional order"""
        return self.__alpha

    def get_grid(self) -> TimeGrid:
        """Get the time grid"""
        return self.__grid

    def get_weights(self) -> np.ndarray:
        """Get the read-only (N+1) x (N+1) weight table"""
        return self.__weights

    def get_difference_matrix(self) -> np.ndarray:
        """Get the read-only N x N block acting on f_j - f_0"""
        return self.__difference_matrix

    def row(self, r: int) -> np.ndarray:
        """Weights w[r][0..r], r + 1 entries"""
        self.__check_node(r)
        return self.__weights[r, :r + 1]

    def apply(self, values: Sequence[float], r: int) -> float:
        """Discrete derivative at t_r from samples at all N + 1 nodes"""
        self.__check_node(r)
        values = self.__check_values(values)
        return float(self.__difference_matrix[r - 1, :r] @ (values[1:r + 1] - values[0]))

    def apply_all(self, values: Sequence[float]) -> np.ndarray:
        """Discrete derivative at every node r = 1..N"""
        values = self.__check_values(values)
        return self.__difference_matrix @ (values[1:] - values[0])

    def __check_node(self, r):
        if isinstance(r, bool) or not isinstance(r, (int, np.integer)) \
                or not 1 <= r <= self.__grid.get_n_steps():
            raise ValueError(solver_messages.SCHEME_NODE_ERROR + repr(r))

    def __check_values(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 1 or values.size != self.__grid.get_n_steps() + 1:
            raise ValueError(solver_messages.SCHEME_LENGTH_ERROR)
        return values

    def __repr__(self):
        return 'CaputoScheme(kind={0}, alpha={1!r}, grid={2!r})'.format(
            self.__kind.value, self.__alpha, self.__grid)


class _SchemeCache:
    """Process-wide table of built schemes keyed by (kind, alpha, h, N)"""
    __lock = Lock()
    __schemes: Dict[Tuple, CaputoScheme] = dict()

    @classmethod
    def get(cls, kind: SchemeKind, alpha: float, grid: TimeGrid) -> CaputoScheme:
        """Return the cached scheme, building it on first use"""
        key = (kind, float(alpha), grid.get_h(), grid.get_n_steps())
        cls.__lock.acquire()
        try:
            scheme = cls.__schemes.get(key)
            if scheme is None:
                scheme = CaputoScheme(kind, alpha, grid)
                cls.__schemes[key] = scheme
                Logger.debug('Built {0!r}'.format(scheme))
            return scheme
        finally:
            cls.__lock.release()

    @classmethod
    def clear(cls):
        """Drop every cached scheme"""
        cls.__lock.acquire()
        try:
            cls.__schemes = dict()
        finally:
            cls.__lock.release()


def build_scheme(kind, alpha: float, grid: TimeGrid) -> CaputoScheme:
    """Weight table for ``kind`` on ``grid``, shared between callers.

    Args:
        kind: SchemeKind or its value ('diethelm', 'l1').
        alpha: Fractional order in (0, 1).
        grid: Uniform time grid.
    """
    Validators.require_alpha(alpha)
    return _SchemeCache.get(SchemeKind.parse(kind), alpha, grid)


def apply_scheme(scheme: CaputoScheme, values: Sequence[float], r: int) -> float:
    """Discrete Caputo derivative at t_r, r = 1..N"""
    return scheme.apply(values, r)


def apply_scheme_all(scheme: CaputoScheme, values: Sequence[float]) -> np.ndarray:
    """Discrete Caputo derivative at every t_r, r = 1..N"""
    return scheme.apply_all(values)


def exact_caputo_monomial(p: float, alpha: float, t: float) -> float:
    """Caputo derivative of t^p: Gamma(p+1) / Gamma(p+1-alpha) t^(p-alpha); 0 for p = 0"""
    Validators.require_alpha(alpha)
    if t < 0:
        raise ValueError(solver_messages.NEGATIVE_TIME_ERROR)
    if p == 0:
        return 0.0
    if p < 1:
        raise ValueError(solver_messages.MONOMIAL_POWER_ERROR)
    return float(gamma(p + 1.0) / gamma(p + 1.0 - alpha) * t ** (p - alpha))


class ConvergenceRow(NamedTuple):
    """Discrete derivative against the exact value at one resolution"""
    h: float
    n_steps: int
    value: float
    exact: float
    error: float


def _check_halving(h_sequence: Sequence[float]):
    if len(h_sequence) < 3:
        raise ValueError(solver_messages.ORDER_LEVELS_ERROR)
    for coarse, fine in zip(h_sequence, h_sequence[1:]):
        if not fine > 0 or abs(coarse / fine - 2.0) > 1e-9:
            raise ValueError(solver_messages.ORDER_LEVELS_ERROR)


def convergence_table(kind, alpha: float, p: float, t_final: float,
                      h_sequence: Sequence[float]) -> List[ConvergenceRow]:
    """Error of the scheme on f = t^p at t_final for every spacing in h_sequence"""
    _check_halving(h_sequence)
    rows = []
    for h in h_sequence:
        n_steps = int(round(t_final / h))
        grid = TimeGrid(h, n_steps)
        scheme = build_scheme(kind, alpha, grid)
        value = scheme.apply(grid.nodes() ** p, n_steps)
        exact = exact_caputo_monomial(p, alpha, grid.get_t_final())
        rows.append(ConvergenceRow(h=float(h), n_steps=n_steps, value=value, exact=exact,
                                   error=abs(value - exact)))
    return rows


def observed_order(kind, alpha: float, p: float, t_final: float, h_sequence: Sequence[float]) -> float:
    """Least-squares slope of log(error) against log(h).

    Args:
        kind: Scheme kind.
        alpha: Fractional order in (0, 1).
        p: Monomial power of the test function t^p.
        t_final: Evaluation time; every h must divide it.
        h_sequence: At least three spacings, each half the previous.
    Raises:
        ValueError: invalid arguments, or the scheme is exact on t^p up to roundoff.
    """
    return table_order(convergence_table(kind, alpha, p, t_final, h_sequence))


def table_order(rows: Sequence[ConvergenceRow]) -> float:
    """Observed order of a convergence table"""
    scale = max(1.0, max(abs(row.exact) for row in rows))
    if max(row.error for row in rows) <= ROUNDOFF_TOLERANCE * scale:
        raise ValueError(solver_messages.ORDER_ROUNDOFF_ERROR)
    return log_slope([row.h for row in rows], [row.error for row in rows])
