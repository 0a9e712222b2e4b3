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
Exact differentiation for the fPINN losses.

Reverse mode: a `Tape` records vectorised numpy primitives applied to `Variable`
objects and replays them backwards to obtain the gradient of a scalar loss with
respect to the network parameters. The primitive set is closed: +, -, *, /,
power with a constant exponent, exp, tanh, the dense-layer linear algebra
(matrix product, sums, reshapes, slicing) and the fixed linear Caputo functional.
Anything else raises `UnsupportedPrimitiveError` while the graph is being built.

Forward mode: `DualJet2` carries a value with its first and second derivative
along one tagged input. Its components may themselves be tape variables, so the
second spatial derivative of the network is recorded on the tape like any other
quantity (forward-over-reverse).
"""

from typing import Callable, List, Sequence

import numpy as np

from .internal.common import solver_constants, solver_messages


class UnsupportedPrimitiveError(TypeError):
    """Raised when a graph uses an operation outside the supported primitive set"""


def _unbroadcast(gradient: np.ndarray, shape: tuple) -> np.ndarray:
    """Sum a broadcast adjoint back to the operand shape"""
    if gradient.shape == shape:
        return gradient
    while gradient.ndim > len(shape):
        gradient = gradient.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and gradient.shape[axis] != 1:
            gradient = gradient.sum(axis=axis, keepdims=True)
    return gradient


class Tape:
    """Append-only record of the primitive operations of one forward pass"""

    def __init__(self):
        self.__entries = []
        self.__operation_count = 0

    def __len__(self):
        """Number of recorded primitive operations (leaves excluded)"""
        return self.__operation_count

    def variable(self, value) -> 'Variable':
        """Register a leaf, e.g. the flat parameter vector"""
        leaf = Variable(np.array(value, dtype=np.float64), self, len(self.__entries))
        self.__entries.append(leaf)
        return leaf

    def record(self, value, parents: Sequence['Variable'], vjps: Sequence[Callable]) -> 'Variable':
        """Append one operation: its value, its variable inputs and one adjoint rule per input"""
        for parent in parents:
            if parent.tape is not self:
                raise ValueError(solver_messages.TAPE_MISMATCH_ERROR)
        node = Variable(np.asarray(value, dtype=np.float64), self, len(self.__entries),
                        tuple(parents), tuple(vjps))
        self.__entries.append(node)
        self.__operation_count += 1
        return node

    def gradient(self, output: 'Variable', wrt: Sequence['Variable']) -> List[np.ndarray]:
        """Replay the tape backwards from a scalar output.

        Args:
            output: Variable holding a single value.
            wrt: Variables (usually leaves) whose adjoints are returned.
        Returns:
            d(output)/d(v) for every v in wrt, shaped like v.
        """
        if output.tape is not self or any(variable.tape is not self for variable in wrt):
            raise ValueError(solver_messages.TAPE_MISMATCH_ERROR)
        if output.value.size != 1:
            raise ValueError(solver_messages.NON_SCALAR_OUTPUT_ERROR)
        wanted = {variable.slot for variable in wrt}
        found = dict()
        adjoints = {output.slot: np.ones_like(output.value)}
        for node in reversed(self.__entries[:output.slot + 1]):
            adjoint = adjoints.pop(node.slot, None)
            if adjoint is None:
                continue
            if node.slot in wanted:
                found[node.slot] = adjoint
            for parent, vjp in zip(node.parents, node.vjps):
                contribution = vjp(adjoint)
                if parent.slot in adjoints:
                    adjoints[parent.slot] = adjoints[parent.slot] + contribution
                else:
                    adjoints[parent.slot] = contribution
        return [found.get(variable.slot, np.zeros_like(variable.value)) for variable in wrt]


def _value(operand):
    return operand.value if isinstance(operand, Variable) else np.asarray(operand, dtype=np.float64)


def _tape_of(*operands) -> Tape:
    tapes = {id(operand.tape): operand.tape for operand in operands if isinstance(operand, Variable)}
    if len(tapes) > 1:
        raise ValueError(solver_messages.TAPE_MISMATCH_ERROR)
    return next(iter(tapes.values()))


def _binary(value, a, b, vjp_a, vjp_b) -> 'Variable':
    parents, vjps = [], []
    if isinstance(a, Variable):
        parents.append(a)
        vjps.append(vjp_a)
    if isinstance(b, Variable):
        parents.append(b)
        vjps.append(vjp_b)
    return _tape_of(a, b).record(value, parents, vjps)


def add(a, b):
    """a + b with broadcasting"""
    if not isinstance(a, Variable) and not isinstance(b, Variable):
        return _value(a) + _value(b)
    va, vb = _value(a), _value(b)
    return _binary(va + vb, a, b,
                   lambda g: _unbroadcast(g, va.shape),
                   lambda g: _unbroadcast(g, vb.shape))


def subtract(a, b):
    """a - b with broadcasting"""
    if not isinstance(a, Variable) and not isinstance(b, Variable):
        return _value(a) - _value(b)
    va, vb = _value(a), _value(b)
    return _binary(va - vb, a, b,
                   lambda g: _unbroadcast(g, va.shape),
                   lambda g: _unbroadcast(-g, vb.shape))


def multiply(a, b):
    """a * b with broadcasting"""
    if not isinstance(a, Variable) and not isinstance(b, Variable):
        return _value(a) * _value(b)
    va, vb = _value(a), _value(b)
    return _binary(va * vb, a, b,
                   lambda g: _unbroadcast(g * vb, va.shape),
                   lambda g: _unbroadcast(g * va, vb.shape))


def divide(a, b):
    """a / b with broadcasting"""
    if not isinstance(a, Variable) and not isinstance(b, Variable):
        return _value(a) / _value(b)
    va, vb = _value(a), _value(b)
    return _binary(va / vb, a, b,
                   lambda g: _unbroadcast(g / vb, va.shape),
                   lambda g: _unbroadcast(-g * va / (vb * vb), vb.shape))


def negative(a):
    """-a"""
    if not isinstance(a, Variable):
        return -_value(a)
    return a.tape.record(-a.value, (a,), (lambda g: -g,))


def power(a, exponent):
    """a ** exponent for a constant integer or real exponent"""
    if isinstance(exponent, (Variable, DualJet2)):
        raise UnsupportedPrimitiveError(solver_messages.UNSUPPORTED_PRIMITIVE_ERROR + 'variable exponent')
    if not isinstance(a, Variable):
        return _value(a) ** exponent
    va = a.value
    return a.tape.record(va ** exponent, (a,),
                         (lambda g: g * exponent * va ** (exponent - 1),))


def exp(a):
    """Elementwise exponential"""
    if isinstance(a, DualJet2):
        return a.exp()
    if not isinstance(a, Variable):
        return np.exp(_value(a))
    out = np.exp(a.value)
    return a.tape.record(out, (a,), (lambda g: g * out,))


def tanh(a):
    """Elementwise hyperbolic tangent"""
    if isinstance(a, DualJet2):
        return a.tanh()
    if not isinstance(a, Variable):
        return np.tanh(_value(a))
    out = np.tanh(a.value)
    return a.tape.record(out, (a,), (lambda g: g * (1.0 - out * out),))


def matmul(a, b):
    """Matrix product of two 2-D operands"""
    if not isinstance(a, Variable) and not isinstance(b, Variable):
        return _value(a) @ _value(b)
    va, vb = _value(a), _value(b)
    if va.ndim != 2 or vb.ndim != 2:
        raise UnsupportedPrimitiveError(solver_messages.UNSUPPORTED_PRIMITIVE_ERROR + 'matmul of non 2-D operands')
    return _binary(va @ vb, a, b, lambda g: g @ vb.T, lambda g: va.T @ g)


def caputo_apply(scheme, grid_values):
    """Discrete Caputo derivative along axis 0 of an (N+1, m) block of samples.

    One linear tape node: the output row r-1 is D^alpha at t_r for every column,
    and the adjoint rule spreads each upstream adjoint over the whole history
    t_0..t_r of its column.
    """
    matrix = scheme.get_difference_matrix()
    values = _value(grid_values)
    if values.ndim != 2 or values.shape[0] != matrix.shape[0] + 1:
        raise ValueError(solver_messages.SCHEME_LENGTH_ERROR)
    out = matrix @ (values[1:] - values[0])
    if not isinstance(grid_values, Variable):
        return out

    def vjp(g):
        spread = matrix.T @ g
        adjoint = np.empty_like(values)
        adjoint[1:] = spread
        adjoint[0] = -spread.sum(axis=0)
        return adjoint

    return grid_values.tape.record(out, (grid_values,), (vjp,))


_UFUNC_DISPATCH = {
    np.add: add,
    np.subtract: subtract,
    np.multiply: multiply,
    np.true_divide: divide,
    np.negative: negative,
    np.power: power,
    np.exp: exp,
    np.tanh: tanh,
    np.matmul: matmul,
}


class Variable:
    """Array-valued node of a `Tape`"""

    __slots__ = ('value', 'tape', 'slot', 'parents', 'vjps')

    def __init__(self, value: np.ndarray, tape: Tape, slot: int, parents=(), vjps=()):
        self.value = value
        self.tape = tape
        self.slot = slot
        self.parents = parents
        self.vjps = vjps

    def __array_ufunc__(self, ufunc, method, *inputs, **kwargs):
        handler = _UFUNC_DISPATCH.get(ufunc)
        if method != '__call__' or kwargs or handler is None:
            raise UnsupportedPrimitiveError(solver_messages.UNSUPPORTED_PRIMITIVE_ERROR + ufunc.__name__)
        return handler(*inputs)

    @property
    def shape(self) -> tuple:
        """Shape of the value"""
        return self.value.shape

    @property
    def size(self) -> int:
        """Number of entries of the value"""
        return self.value.size

    @property
    def T(self) -> 'Variable':  # pylint: disable=invalid-name
        """Transpose of a 2-D variable"""
        return self.tape.record(self.value.T, (self,), (lambda g: g.T,))

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __sub__(self, other):
        return subtract(self, other)

    def __rsub__(self, other):
        return subtract(other, self)

    def __mul__(self, other):
        return multiply(self, other)

    def __rmul__(self, other):
        return multiply(other, self)

    def __truediv__(self, other):
        return divide(self, other)

    def __rtruediv__(self, other):
        return divide(other, self)

    def __neg__(self):
        return negative(self)

    def __pow__(self, exponent):
        return power(self, exponent)

    def __rpow__(self, base):
        raise UnsupportedPrimitiveError(solver_messages.UNSUPPORTED_PRIMITIVE_ERROR + 'variable exponent')

    def __matmul__(self, other):
        return matmul(self, other)

    def __rmatmul__(self, other):
        return matmul(other, self)

    def __getitem__(self, index):
        shape = self.value.shape

        def vjp(g):
            adjoint = np.zeros(shape, dtype=np.float64)
            np.add.at(adjoint, index, g)
            return adjoint

        return self.tape.record(self.value[index], (self,), (vjp,))

    def reshape(self, *shape) -> 'Variable':
        """Same entries, new shape"""
        original = self.value.shape
        return self.tape.record(self.value.reshape(*shape), (self,), (lambda g: g.reshape(original),))

    def sum(self, axis=None) -> 'Variable':
        """Sum over one axis or all entries"""
        original = self.value.shape

        def vjp(g):
            if axis is not None:
                g = np.expand_dims(g, axis)
            return np.broadcast_to(g, original).copy()

        return self.tape.record(self.value.sum(axis=axis), (self,), (vjp,))

    def mean(self) -> 'Variable':
        """Mean of all entries"""
        return self.sum() / float(self.value.size)

    def exp(self) -> 'Variable':
        """Elementwise exponential"""
        return exp(self)

    def tanh(self) -> 'Variable':
        """Elementwise hyperbolic tangent"""
        return tanh(self)

    def __repr__(self):
        return 'Variable(shape={0}, slot={1})'.format(self.value.shape, self.slot)


def value_of(operand) -> np.ndarray:
    """Numeric value of a Variable, or the operand itself as an array"""
    return _value(operand)


class DualJet2:
    """Second-order forward jet: value, d/ds and d^2/ds^2 along one tagged input s.

    Components are numpy arrays or tape variables of identical shape. Operands
    that are not jets are constants along s.
    """

    __array_ufunc__ = None

    def __init__(self, value, d1, d2):
        self.value = value
        self.d1 = d1
        self.d2 = d2

    @classmethod
    def seed(cls, points: np.ndarray, axis: int) -> 'DualJet2':
        """Jet of a batch of input points with the derivative seeded on one coordinate"""
        points = np.asarray(points, dtype=np.float64)
        direction = np.zeros_like(points)
        direction[..., axis] = 1.0
        return cls(points, direction, np.zeros_like(points))

    @classmethod
    def constant(cls, value) -> 'DualJet2':
        """Jet of a quantity that does not depend on the tagged input"""
        zero = np.zeros_like(_value(value))
        return cls(value, zero, zero)

    def _chain(self, f, fp, fpp) -> 'DualJet2':
        # (g o self)' = g'(v) v',  (g o self)'' = g''(v) v'^2 + g'(v) v''
        return DualJet2(f, fp * self.d1, fpp * (self.d1 * self.d1) + fp * self.d2)

    def __add__(self, other):
        if isinstance(other, DualJet2):
            return DualJet2(self.value + other.value, self.d1 + other.d1, self.d2 + other.d2)
        return DualJet2(self.value + other, self.d1, self.d2)

    def __radd__(self, other):
        return DualJet2(other + self.value, self.d1, self.d2)

    def __sub__(self, other):
        if isinstance(other, DualJet2):
            return DualJet2(self.value - other.value, self.d1 - other.d1, self.d2 - other.d2)
        return DualJet2(self.value - other, self.d1, self.d2)

    def __rsub__(self, other):
        return DualJet2(other - self.value, -self.d1, -self.d2)

    def __neg__(self):
        return DualJet2(-self.value, -self.d1, -self.d2)

    def __mul__(self, other):
        if isinstance(other, DualJet2):
            return DualJet2(self.value * other.value,
                            self.d1 * other.value + self.value * other.d1,
                            self.d2 * other.value + 2.0 * (self.d1 * other.d1) + self.value * other.d2)
        return DualJet2(self.value * other, self.d1 * other, self.d2 * other)

    def __rmul__(self, other):
        return DualJet2(other * self.value, other * self.d1, other * self.d2)

    def reciprocal(self) -> 'DualJet2':
        """1 / self"""
        inverse = 1.0 / self.value
        return self._chain(inverse, -(inverse * inverse), 2.0 * (inverse * inverse * inverse))

    def __truediv__(self, other):
        if isinstance(other, DualJet2):
            return self * other.reciprocal()
        return DualJet2(self.value / other, self.d1 / other, self.d2 / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, exponent):
        if isinstance(exponent, (DualJet2, Variable)):
            raise UnsupportedPrimitiveError(solver_messages.UNSUPPORTED_PRIMITIVE_ERROR + 'variable exponent')
        return self._chain(self.value ** exponent,
                           exponent * self.value ** (exponent - 1),
                           exponent * (exponent - 1) * self.value ** (exponent - 2))

    def exp(self) -> 'DualJet2':
        """Elementwise exponential"""
        out = exp(self.value)
        return self._chain(out, out, out)

    def tanh(self) -> 'DualJet2':
        """Elementwise hyperbolic tangent"""
        out = tanh(self.value)
        slope = 1.0 - out * out
        return self._chain(out, slope, -2.0 * (out * slope))

    def __matmul__(self, matrix):
        return DualJet2(self.value @ matrix, self.d1 @ matrix, self.d2 @ matrix)

    def reshape(self, *shape) -> 'DualJet2':
        """Reshape every component"""
        return DualJet2(self.value.reshape(*shape), self.d1.reshape(*shape), self.d2.reshape(*shape))

    def __getitem__(self, index):
        return DualJet2(self.value[index], self.d1[index], self.d2[index])

    def __repr__(self):
        return 'DualJet2(value={0!r}, d1={1!r}, d2={2!r})'.format(self.value, self.d1, self.d2)


def grad(loss_builder: Callable, params) -> np.ndarray:
    """Gradient of a scalar loss with respect to a flat parameter vector.

    Args:
        loss_builder: Function of a tape variable holding the parameters, returning a
            single-valued Variable built from supported primitives only.
        params: Parameter values.
    Returns:
        d(loss)/d(params), shaped like params.
    """
    tape = Tape()
    theta = tape.variable(params)
    loss = loss_builder(theta)
    if not isinstance(loss, Variable):
        return np.zeros_like(theta.value)
    return tape.gradient(loss, [theta])[0]


def second_spatial_batch(network, points, axis: int, params=None) -> DualJet2:
    """u_NN with its first and second derivatives along one spatial input, for a batch.

    Args:
        network: Network whose inputs are (spatial..., t).
        points: (P, input_dim) coordinates.
        axis: Index of a spatial coordinate (time, the last input, is excluded).
        params: Optional flat parameters (array or tape Variable) replacing the network's own.
    Returns:
        DualJet2 with (P, 1) components; tape variables when params is a Variable.
    """
    input_dim = network.get_config().get_input_dim()
    if isinstance(axis, bool) or not isinstance(axis, (int, np.integer)) or not 0 <= axis < input_dim - 1:
        raise ValueError(solver_messages.AXIS_RANGE_ERROR + repr(axis))
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2 or points.shape[1] != input_dim:
        raise ValueError(solver_messages.NETWORK_DIMENSION_ERROR)
    return network.forward_any(DualJet2.seed(points, axis), params)


def second_spatial(network, point: Sequence[float], axis: int):
    """(u, du/ds, d2u/ds2) of the network at one point along spatial input ``axis``"""
    jet = second_spatial_batch(network, np.asarray(point, dtype=np.float64).reshape(1, -1), axis)
    return float(jet.value[0, 0]), float(jet.d1[0, 0]), float(jet.d2[0, 0])


def finite_difference_gradient(function: Callable, params,
                               step: float = solver_constants.FD_PARAMETER_STEP) -> np.ndarray:
    """Central-difference gradient of a scalar function of a flat vector"""
    params = np.array(params, dtype=np.float64)
    gradient = np.zeros_like(params)
    for index in range(params.size):
        shifted = params.copy()
        shifted.flat[index] = params.flat[index] + step
        upper = function(shifted)
        shifted.flat[index] = params.flat[index] - step
        lower = function(shifted)
        gradient.flat[index] = (upper - lower) / (2.0 * step)
    return gradient


def five_point_second_derivative(function: Callable, point: Sequence[float], axis: int,
                                 step: float = solver_constants.FD_SPATIAL_STEP) -> float:
    """Five-point central stencil for d^2 f / ds^2 along one coordinate"""
    point = np.array(point, dtype=np.float64)

    def shifted(offset):
        moved = point.copy()
        moved[axis] += offset * step
        return function(moved)

    return (-shifted(2) + 16.0 * shifted(1) - 30.0 * shifted(0)
            + 16.0 * shifted(-1) - shifted(-2)) / (12.0 * step * step)
