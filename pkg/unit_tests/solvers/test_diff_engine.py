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

import unittest

import numpy as np

from fractional_pinn.solvers import caputo, collocation, diff_engine, network, problems, trainer
from fractional_pinn.solvers.diff_engine import DualJet2, Tape, UnsupportedPrimitiveError
from fractional_pinn.solvers.models import NetworkConfig, SchemeKind, TimeGrid


def tiny_network(input_dim, seed=3):
    config = NetworkConfig(input_dim, hidden_layers=2, neurons_per_layer=4, seed=seed)
    initial = network.init(config)
    # nonzero biases so every parameter carries gradient
    rng = np.random.default_rng(seed + 100)
    return initial.with_params(initial.get_params() + 0.1 * rng.standard_normal(initial.get_params().size))


class MyTestCase(unittest.TestCase):

    def test_scalar_gradients(self):
        self.assertAlmostEqual(float(diff_engine.grad(lambda theta: (theta * theta).sum(), [3.0])[0]), 6.0)
        self.assertAlmostEqual(float(diff_engine.grad(lambda theta: np.tanh(theta).sum(), [0.0])[0]), 1.0)
        self.assertAlmostEqual(float(diff_engine.grad(lambda theta: (theta ** 3).sum(), [2.0])[0]), 12.0)
        self.assertAlmostEqual(float(diff_engine.grad(lambda theta: (1.0 / theta).sum(), [2.0])[0]), -0.25)
        self.assertAlmostEqual(float(diff_engine.grad(lambda theta: np.exp(theta).sum(), [1.0])[0]), np.e)

    def test_gradient_of_constant_loss(self):
        np.testing.assert_array_equal(diff_engine.grad(lambda theta: 4.0, [1.0, 2.0]), [0.0, 0.0])

    def test_tape_length(self):
        tape = Tape()
        theta = tape.variable([1.0, 2.0])
        self.assertEqual(len(tape), 0)
        out = (theta * 2.0 + 1.0).sum()
        self.assertEqual(len(tape), 3)
        self.assertEqual(tape.gradient(out, [theta])[0].tolist(), [2.0, 2.0])

    def test_tape_errors(self):
        tape, other = Tape(), Tape()
        a = tape.variable([1.0, 2.0])
        b = other.variable([1.0, 2.0])
        with self.assertRaises(ValueError):
            a + b
        with self.assertRaises(ValueError):
            tape.gradient(a * 2.0, [a])

    def test_unsupported_primitives(self):
        tape = Tape()
        theta = tape.variable([0.5, 0.25])
        with self.assertRaises(UnsupportedPrimitiveError):
            np.sin(theta)
        with self.assertRaises(UnsupportedPrimitiveError):
            np.log(theta)
        with self.assertRaises(UnsupportedPrimitiveError):
            2.0 ** theta
        with self.assertRaises(TypeError):
            np.sqrt(theta)

    def test_linearity_of_gradients(self):
        rng = np.random.default_rng(7)
        point = rng.standard_normal(5)
        matrix = rng.standard_normal((5, 5))

        def first(theta):
            return (np.tanh(theta.reshape(1, 5) @ matrix) ** 2).sum()

        def second(theta):
            return (np.exp(theta * 0.3) / (1.0 + theta * theta)).sum()

        combined = diff_engine.grad(lambda theta: first(theta) + second(theta), point)
        np.testing.assert_allclose(combined, diff_engine.grad(first, point) + diff_engine.grad(second, point),
                                   rtol=1e-12)
        np.testing.assert_allclose(combined, diff_engine.finite_difference_gradient(
            lambda theta: float(first(theta)) + float(second(theta)), point), rtol=1e-6, atol=1e-8)

    def test_broadcasting_and_indexing(self):
        rng = np.random.default_rng(1)
        matrix = rng.standard_normal((3, 4))

        def builder(theta):
            bias = theta[0:4]
            scale = theta[4:5]
            return ((matrix + bias) * scale).sum(axis=0).mean()

        params = rng.standard_normal(5)
        reference = diff_engine.finite_difference_gradient(
            lambda theta: float(((matrix + theta[0:4]) * theta[4]).sum(axis=0).mean()), params)
        np.testing.assert_allclose(diff_engine.grad(builder, params), reference, rtol=1e-7)

    def test_caputo_node_gradient(self):
        grid = TimeGrid(0.1, 6)
        scheme = caputo.build_scheme(SchemeKind.L1, 0.5, grid)
        weights = np.linspace(1.0, 2.0, 6)
        values = np.linspace(0.0, 1.0, 14).reshape(7, 2)

        def builder(theta):
            return (diff_engine.caputo_apply(scheme, theta * theta).sum(axis=1) * weights).sum()

        def plain(theta):
            return float((diff_engine.caputo_apply(scheme, theta * theta).sum(axis=1) * weights).sum())

        np.testing.assert_allclose(diff_engine.grad(builder, values),
                                   diff_engine.finite_difference_gradient(plain, values), rtol=1e-6, atol=1e-9)
        np.testing.assert_allclose(diff_engine.caputo_apply(scheme, values)[:, 0],
                                   scheme.apply_all(values[:, 0]), rtol=1e-12)

    def test_jet_primitives(self):
        x = np.array([[0.3], [-0.8], [1.4]])
        jet = DualJet2.seed(x, 0)
        cases = [
            (jet * jet, x ** 2, 2 * x, 2 + 0 * x),
            (jet.exp(), np.exp(x), np.exp(x), np.exp(x)),
            (jet.tanh(), np.tanh(x), 1 - np.tanh(x) ** 2, -2 * np.tanh(x) * (1 - np.tanh(x) ** 2)),
            (1.0 / (jet + 2.0), 1 / (x + 2), -1 / (x + 2) ** 2, 2 / (x + 2) ** 3),
            (jet ** 3, x ** 3, 3 * x ** 2, 6 * x),
            (3.0 - jet / 2.0, 3 - x / 2, -0.5 + 0 * x, 0 * x),
            (jet * jet.exp(), x * np.exp(x), (1 + x) * np.exp(x), (2 + x) * np.exp(x)),
        ]
        for result, value, d1, d2 in cases:
            np.testing.assert_allclose(result.value, value, rtol=1e-10)
            np.testing.assert_allclose(result.d1, d1, rtol=1e-10, atol=1e-14)
            np.testing.assert_allclose(result.d2, d2, rtol=1e-10, atol=1e-14)

    def test_jet_product_rule(self):
        x = np.array([[0.7]])
        a = DualJet2.seed(x, 0).tanh()
        b = DualJet2.seed(x, 0).exp()
        product = a * b
        expected = a.d2 * b.value + 2 * a.d1 * b.d1 + a.value * b.d2
        np.testing.assert_allclose(product.d2, expected, rtol=1e-12)

    def test_second_spatial_constant_network(self):
        config = NetworkConfig(2, 2, 5)
        params = np.zeros(config.parameter_count())
        params[-1] = 0.7
        constant = network.Network(config, params)
        value, d1, d2 = diff_engine.second_spatial(constant, [0.4, 0.2], 0)
        self.assertAlmostEqual(value, 0.7)
        self.assertEqual(d1, 0.0)
        self.assertEqual(d2, 0.0)

    def test_affine_layer(self):
        layers = [(np.array([[2.5], [0.0]]), np.array([-1.0]))]
        jet = network.forward_layers(layers, DualJet2.seed(np.array([[0.3, 0.9]]), 0))
        self.assertAlmostEqual(float(jet.d1[0, 0]), 2.5)
        self.assertAlmostEqual(float(jet.d2[0, 0]), 0.0)

    def test_second_spatial_matches_stencil(self):
        net = network.init(NetworkConfig(2, 4, 20, seed=11))
        _, _, d2 = diff_engine.second_spatial(net, [1.0, 0.5], 0)
        reference = diff_engine.five_point_second_derivative(net, [1.0, 0.5], 0)
        self.assertLess(abs(d2 - reference), 1e-4 * max(abs(reference), 1.0))

        net3 = network.init(NetworkConfig(3, 2, 8, seed=5))
        for axis in (0, 1):
            _, _, d2 = diff_engine.second_spatial(net3, [0.6, 1.3, 0.2], axis)
            reference = diff_engine.five_point_second_derivative(net3, [0.6, 1.3, 0.2], axis)
            self.assertLess(abs(d2 - reference), 1e-4 * max(abs(reference), 1.0))

    def test_second_spatial_axis_range(self):
        net = network.init(NetworkConfig(2, 1, 3))
        with self.assertRaises(ValueError):
            diff_engine.second_spatial(net, [0.1, 0.2], 1)
        with self.assertRaises(ValueError):
            diff_engine.second_spatial(network.init(NetworkConfig(1, 1, 3)), [0.1], 0)

    def test_loss_gradient_check(self):
        settings = [
            ('fode', (11,), 1, 0),
            ('fpde2d', (4, 5), 4, 4),
            ('fpde3d', (3, 3, 3), 2, 4),
        ]
        for name, counts, n_ic, n_bc in settings:
            problem = problems.get_problem(name)
            colloc = collocation.build_grid(problem, counts, n_ic, n_bc)
            net = tiny_network(problem.get_domain().get_input_dim())
            scheme = caputo.build_scheme(SchemeKind.DIETHELM, problem.get_alpha(), colloc.get_time_grid())

            def builder(theta):
                phi_eq, phi_ic, phi_bc = trainer.loss_terms(net, problem, colloc, scheme, theta)
                return phi_eq + phi_ic + phi_bc

            def plain(theta):
                return trainer.loss(net.with_params(theta), problem, colloc, scheme)[3]

            analytic = diff_engine.grad(builder, net.get_params())
            numeric = diff_engine.finite_difference_gradient(plain, net.get_params())
            np.testing.assert_allclose(analytic, numeric, rtol=1e-5, atol=1e-8, err_msg=name)


if __name__ == '__main__':
    unittest.main()
