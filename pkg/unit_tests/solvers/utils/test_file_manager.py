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

from fractional_pinn.solvers.internal.utils.file_manager import FileManager


class MyTestCase(unittest.TestCase):
    directory = None

    def setUp(self) -> None:
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        self.directory.cleanup()

    def test_json_store(self):
        data = {
            "problem": "fpde2d",
            "alpha": 0.5,
            "network": {"hidden_layers": 4, "neurons_per_layer": 20},
            "train": {"lr_values": [0.01, 0.001], "lr_change_iters": [200]}
        }
        file_path = os.path.join(self.directory.name, 'nested', 'config.json')
        self.assertTrue(FileManager.ensure_directory(os.path.dirname(file_path)))
        self.assertTrue(FileManager.store_json(data, file_path))
        self.assertEqual(FileManager.read_json(file_path), data)

    def test_json_failures(self):
        self.assertIsNone(FileManager.read_json(os.path.join(self.directory.name, 'missing.json')))
        broken = os.path.join(self.directory.name, 'broken.json')
        with open(broken, 'w') as handle:
            handle.write('{"alpha": ')
        self.assertIsNone(FileManager.read_json(broken))
        self.assertFalse(FileManager.store_json({'value': object()}, os.path.join(self.directory.name, 'x.json')))

    def test_csv(self):
        file_path = os.path.join(self.directory.name, 'trace.csv')
        self.assertTrue(FileManager.store_csv(file_path, ('iter', 'phi_total'), [(1, 0.5), (2, 0.25)]))
        header, rows = FileManager.read_csv(file_path)
        self.assertEqual(header, ['iter', 'phi_total'])
        self.assertEqual(rows, [['1', '0.5'], ['2', '0.25']])

    def test_append_csv_row(self):
        file_path = os.path.join(self.directory.name, 'summary.csv')
        self.assertTrue(FileManager.append_csv_row(file_path, ('index', 'value'), (0, 'a')))
        self.assertTrue(FileManager.append_csv_row(file_path, ('index', 'value'), (1, 'b')))
        header, rows = FileManager.read_csv(file_path)
        self.assertEqual(header, ['index', 'value'])
        self.assertEqual(rows, [['0', 'a'], ['1', 'b']])
        self.assertIsNone(FileManager.read_csv(os.path.join(self.directory.name, 'missing.csv')))


if __name__ == '__main__':
    unittest.main()
