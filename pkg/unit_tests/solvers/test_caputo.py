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

import math
import unittest

import numpy as np

from fractional_pinn.solvers import caputo
from fractional_pinn.solvers.models import SchemeKind, TimeGrid

GAMMA_1_5 = math.sqrt(math.pi) / 2.0


class MyTestCase(unittest.TestCase):

    def test_diethelm_coefficient(self):
        self.assertEqual(caputo.diethelm_coefficient(0, 2, 0.5), 1.0)
        self.assertAlmostEqual(caputo.diethelm_coefficient(1, 2, 0.5), -0.5857864376, places=9)
        self.assertAlmostEqual(caputo.diethelm_coefficient(2, 2, 0.5), -0.0606601718, places=9)
        with self.assertRaises(ValueError):
            caputo.diethelm_coefficient(3, 2, 0.5)
        with self.assertRaises(ValueError):
            caputo.diethelm_coefficient(1, 2, 1.0)
        with self.assertRaises(ValueError):
            caputo.diethelm_coefficient(-1, 2, 0.5)

    def test_l1_coefficient(self):
        self.assertAlmostEqual(caputo.l1_coefficient(0, 0.5), 1.1283791671, places=9)
        self.assertAlmostEqual(caputo.l1_coefficient(1, 0.5), 0.4673899545, places=9)
        self.assertAlmostEqual(caputo.l1_coefficient(1, 0.5), (math.sqrt(2.0) - 1.0) / GAMMA_1_5, places=14)
        with self.assertRaises(ValueError):
            caputo.l1_coefficient(0, 0.0)

    def test_l1_coefficients_decrease(self):
        for alpha in np.linspace(0.05, 0.95, 10):
            coefficients = [caputo.l1_coefficient(n, alpha) for n in range(60)]
            self.assertTrue(all(c > 0 for c in coefficients))
            self.assertTrue(all(a > b for a, b in zip(coefficients, coefficients[1:])))

    def test_l1_first_row(self):
        scheme = caputo.CaputoScheme(SchemeKind.L1, 0.5, TimeGrid(1.0, 4))
        np.testing.assert_allclose(scheme.row(1), [-1.0 / GAMMA_1_5, 1.0 / GAMMA_1_5], rtol=1e-12)

    def test_diethelm_row_matches_coefficients(self):
        grid = TimeGrid(1.0, 2)
        scheme = caputo.CaputoScheme(SchemeKind.DIETHELM, 0.5, grid)
        row = scheme.row(2)
        self.assertEqual(row.size, 3)
        self.assertAlmostEqual(row[2], caputo.diethelm_coefficient(0, 2, 0.5) / GAMMA_1_5, places=12)
        self.assertAlmostEqual(row[1], caputo.diethelm_coefficient(1, 2, 0.5) / GAMMA_1_5, places=12)
        self.assertAlmostEqual(row.sum(), 0.0, places=12)

    def test_weight_table_shape(self):
        scheme = caputo.build_scheme('diethelm', 0.3, TimeGrid(0.1, 10))
        weights = scheme.get_weights()
        self.assertEqual(weights.shape, (11, 11))
        self.assertTrue(np.all(weights[0] == 0))
        self.assertTrue(np.all(np.triu(weights, 1) == 0))
        np.testing.assert_allclose(weights.sum(axis=1), 0.0, atol=1e-10)
        self.assertFalse(weights.flags.writeable)

    def test_constant_annihilation(self):
        for kind in SchemeKind:
            scheme = caputo.build_scheme(kind, 0.5, TimeGrid(0.05, 20))
            values = np.full(21, 5.0)
            for r in range(1, 21):
                self.assertEqual(caputo.apply_scheme(scheme, values, r), 0.0)
            self.assertTrue(np.all(caputo.apply_scheme_all(scheme, values) == 0.0))

    def test_linear_function(self):
        grid = TimeGrid(0.01, 100)
        for kind in SchemeKind:
            scheme = caputo.build_scheme(kind, 0.5, grid)
            value = caputo.apply_scheme(scheme, grid.nodes(), 100)
            self.assertAlmostEqual(value, 1.0 / GAMMA_1_5, delta=2e-2)

    def test_quadratic_function(self):
        grid = TimeGrid(0.01, 100)
        for kind in SchemeKind:
            scheme = caputo.build_scheme(kind, 0.5, grid)
            value = caputo.apply_scheme(scheme, grid.nodes() ** 2, 100)
            self.assertAlmostEqual(value, 1.5045055561, delta=1e-3)

    def test_linearity(self):
        grid = TimeGrid(0.02, 50)
        t = grid.nodes()
        scheme = caputo.build_scheme(SchemeKind.DIETHELM, 0.7, grid)
        combined = scheme.apply_all(3.0 * t ** 2 - 2.0 * t)
        separate = 3.0 * scheme.apply_all(t ** 2) - 2.0 * scheme.apply_all(t)
        np.testing.assert_allclose(combined, separate, rtol=1e-12, atol=1e-12)
        self.assertTrue(np.all(scheme.apply_all(np.zeros(51)) == 0))

    def test_apply_all_matches_apply(self):
        grid = TimeGrid(0.1, 10)
        scheme = caputo.build_scheme(SchemeKind.L1, 0.4, grid)
        values = np.sin(grid.nodes())
        every = scheme.apply_all(values)
        for r in range(1, 11):
            self.assertAlmostEqual(every[r - 1], scheme.apply(values, r), places=12)
            self.assertAlmostEqual(every[r - 1], float(scheme.row(r) @ values[:r + 1]), places=12)

    def test_apply_errors(self):
        scheme = caputo.build_scheme(SchemeKind.L1, 0.5, TimeGrid(0.1, 10))
        with self.assertRaises(ValueError):
            scheme.apply(np.zeros(11), 0)
        with self.assertRaises(ValueError):
            scheme.apply(np.zeros(11), 11)
        with self.assertRaises(ValueError):
            scheme.apply(np.zeros(10), 5)

    def test_schemes_are_cached(self):
        grid = TimeGrid(0.1, 10)
        self.assertIs(caputo.build_scheme('l1', 0.5, grid), caputo.build_scheme(SchemeKind.L1, 0.5, TimeGrid(0.1, 10)))
        with self.assertRaises(ValueError):
            caputo.build_scheme('grunwald', 0.5, grid)

    def test_scheme_agreement(self):
        grid = TimeGrid(0.005, 200)
        values = grid.nodes() ** 2
        diethelm = caputo.build_scheme(SchemeKind.DIETHELM, 0.5, grid).apply(values, 200)
        l1 = caputo.build_scheme(SchemeKind.L1, 0.5, grid).apply(values, 200)
        self.assertLessEqual(abs(diethelm - l1), 5e-3)
        self.assertAlmostEqual(diethelm, 1.5045055561, delta=5e-4)

    def test_exact_caputo_monomial(self):
        self.assertAlmostEqual(caputo.exact_caputo_monomial(2, 0.5, 1.0), 1.5045055561, places=9)
        self.assertAlmostEqual(caputo.exact_caputo_monomial(2, 0.5, 0.25), 0.1880631945, places=9)
        self.assertEqual(caputo.exact_caputo_monomial(0, 0.3, 2.0), 0.0)
        with self.assertRaises(ValueError):
            caputo.exact_caputo_monomial(0.5, 0.5, 1.0)
        with self.assertRaises(ValueError):
            caputo.exact_caputo_monomial(2, 0.5, -1.0)
        value = caputo.exact_caputo_monomial(2, 0.5, np.float64(1.0))
        self.assertIs(type(value), float)
        self.assertEqual(repr(value), repr(float(value)))

    def test_observed_order(self):
        h_sequence = [0.02, 0.01, 0.005, 0.0025]
        for kind in SchemeKind:
            for alpha in (0.25, 0.5, 0.75):
                order = caputo.observed_order(kind, alpha, 2, 1.0, h_sequence)
                self.assertLessEqual(abs(order - (2.0 - alpha)), 0.2, msg='{0} {1}'.format(kind, alpha))

    def test_observed_order_levels(self):
        with self.assertRaises(ValueError):
            caputo.observed_order(SchemeKind.L1, 0.5, 2, 1.0, [0.02, 0.01])
        with self.assertRaises(ValueError):
            caputo.observed_order(SchemeKind.L1, 0.5, 2, 1.0, [0.02, 0.01, 0.004])

    def test_observed_order_needs_truncation_error(self):
        h_sequence = [0.02, 0.01, 0.005]
        for kind in SchemeKind:
            rows = caputo.convergence_table(kind, 0.5, 1, 1.0, h_sequence)
            self.assertTrue(all(row.error < 1e-12 for row in rows), msg=str(kind))
            for power in (0, 1):
                with self.assertRaises(ValueError):
                    caputo.observed_order(kind, 0.5, power, 1.0, h_sequence)

    def test_convergence_table(self):
        rows = caputo.convergence_table(SchemeKind.DIETHELM, 0.5, 2, 1.0, [0.1, 0.05, 0.025])
        self.assertEqual([row.n_steps for row in rows], [10, 20, 40])
        self.assertTrue(rows[0].error > rows[1].error > rows[2].error)


if __name__ == '__main__':
    unittest.main()
