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

import os
import tempfile
import unittest

import numpy as np

from fractional_pinn.solvers import network
from fractional_pinn.solvers.models import NetworkConfig


class MyTestCase(unittest.TestCase):

    def test_parameter_count(self):
        self.assertEqual(NetworkConfig(2, 4, 20).parameter_count(), 1341)
        self.assertEqual(NetworkConfig(1, 1, 3).parameter_count(), 10)
        self.assertEqual(network.init(NetworkConfig(3, 2, 5)).get_params().size, 56)

    def test_config_validation(self):
        for kwargs in ({'input_dim': 4, 'hidden_layers': 1, 'neurons_per_layer': 2},
                       {'input_dim': 2, 'hidden_layers': 0, 'neurons_per_layer': 2},
                       {'input_dim': 2, 'hidden_layers': 1, 'neurons_per_layer': 2, 'activation': 'relu'},
                       {'input_dim': 2, 'hidden_layers': 1, 'neurons_per_layer': 2, 'seed': -1}):
            with self.assertRaises(ValueError):
                NetworkConfig(**kwargs)
        with self.assertRaises(ValueError):
            NetworkConfig.from_dict({'input_dim': 2, 'hidden_layers': 1, 'neurons_per_layer': 2, 'depth': 3})

    def test_init_is_deterministic(self):
        config = NetworkConfig(2, 4, 20, seed=42)
        first = network.init(config)
        second = network.init(config)
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))
        self.assertNotEqual(first, network.init(config.with_changes(seed=43)))

    def test_seeded_forward_regression(self):
        model = network.init(NetworkConfig(1, 3, 10, seed=42))
        # first draw of default_rng(42) scaled to the first layer's Glorot bound
        bound = np.sqrt(6.0 / 11.0)
        self.assertAlmostEqual(model.get_params()[0], -bound + 2.0 * bound * 0.7739560485559633, places=15)
        self.assertAlmostEqual(network.forward(model, [0.5]), 0.08128825856396385, places=12)
        self.assertAlmostEqual(network.forward(model, [1.0]), 0.11856441955609023, places=12)
        self.assertEqual(network.forward(model, [0.0]), 0.0)

    def test_glorot_bounds_and_zero_biases(self):
        net = network.init(NetworkConfig(2, 3, 10, seed=1))
        for weights, bias in net.layers():
            fan_in, fan_out = weights.shape
            self.assertLessEqual(np.max(np.abs(weights)), np.sqrt(6.0 / (fan_in + fan_out)))
            self.assertTrue(np.all(bias == 0))

    def test_params_are_read_only(self):
        net = network.init(NetworkConfig(1, 1, 3))
        with self.assertRaises(ValueError):
            net.get_params()[0] = 1.0
        with self.assertRaises(ValueError):
            net.with_params(np.zeros(5))

    def test_forward_modes_agree(self):
        net = network.init(NetworkConfig(3, 2, 6, seed=9))
        points = np.array([[0.1, 0.2, 0.3], [1.5, 0.4, 0.5], [2.0, 2.0, 0.0]])
        batch = net.forward_batch(points)
        self.assertEqual(batch.shape, (3,))
        for point, value in zip(points, batch):
            self.assertAlmostEqual(network.forward(net, point), value, places=12)
            self.assertAlmostEqual(net(point), value, places=12)

    def test_forward_dimension_check(self):
        net = network.init(NetworkConfig(2, 1, 3))
        with self.assertRaises(ValueError):
            network.forward(net, [0.1, 0.2, 0.3])
        with self.assertRaises(ValueError):
            net.forward_batch(np.zeros((4, 3)))

    def test_lipschitz_bound(self):
        net = network.init(NetworkConfig(1, 2, 8, seed=4))
        bound = network.lipschitz_bound(net)
        ts = np.linspace(0.0, 1.0, 201).reshape(-1, 1)
        values = net.forward_batch(ts)
        slopes = np.abs(np.diff(values)) / np.diff(ts[:, 0])
        self.assertGreater(bound, 0.0)
        self.assertLessEqual(np.max(slopes), bound + 1e-12)

    def test_checkpoint_round_trip(self):
        net = network.init(NetworkConfig(2, 2, 7, seed=5))
        with tempfile.TemporaryDirectory() as directory:
            file_path = os.path.join(directory, 'checkpoint.json')
            self.assertTrue(network.save_checkpoint(net, file_path, {'problem': 'fpde2d', 'iterations': 3}))
            loaded, metadata = network.load_checkpoint(file_path)
        self.assertEqual(loaded, net)
        self.assertEqual(metadata, {'problem': 'fpde2d', 'iterations': 3})
        self.assertTrue(np.array_equal(loaded.get_params(), net.get_params()))

    def test_corrupt_checkpoint(self):
        with tempfile.TemporaryDirectory() as directory:
            file_path = os.path.join(directory, 'checkpoint.json')
            with open(file_path, 'w') as handle:
                handle.write('{"format": "fpinn-checkpoint/1", "config": ')
            with self.assertRaises(ValueError):
                network.load_checkpoint(file_path)
            with open(file_path, 'w') as handle:
                handle.write('{"format": "fpinn-checkpoint/1", "params": [1.0],'
                             ' "config": {"input_dim": 1, "hidden_layers": 1, "neurons_per_layer": 3}}')
            with self.assertRaises(ValueError):
                network.load_checkpoint(file_path)
            with self.assertRaises(ValueError):
                network.load_checkpoint(os.path.join(directory, 'missing.json'))


if __name__ == '__main__':
    unittest.main()
