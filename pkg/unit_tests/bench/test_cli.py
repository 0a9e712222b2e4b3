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

import contextlib
import io
import json
import os
import tempfile
import unittest

from fractional_pinn.bench import cli
from fractional_pinn.bench.run_config import RunConfig
from fractional_pinn.solvers.internal.utils.file_manager import FileManager


def run(argv):
    stdout = io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(io.StringIO()):
        code = cli.main(argv)
    return code, stdout.getvalue()


class MyTestCase(unittest.TestCase):
    directory = None

    def setUp(self) -> None:
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        self.directory.cleanup()

    def test_caputo_eval(self):
        code, output = run(['caputo-eval', '--scheme', 'l1', '--alpha', '0.5', '--monomial', '2',
                            '--h', '0.01', '--t-final', '1.0'])
        self.assertEqual(code, 0)
        lines = output.strip().splitlines()
        self.assertEqual(lines[0], 't,derivative,exact')
        self.assertEqual(len(lines), 101)
        self.assertFalse(any('np.' in line for line in lines))
        t, derivative, exact = (float(cell) for cell in lines[-1].split(','))
        self.assertAlmostEqual(t, 1.0)
        self.assertAlmostEqual(exact, 1.5045055561, places=9)
        self.assertAlmostEqual(derivative, exact, delta=1e-3)

    def test_caputo_eval_order(self):
        code, output = run(['caputo-eval', '--alpha', '0.5', '--h', '0.02', '--order', '--levels', '4'])
        self.assertEqual(code, 0)
        last = output.strip().splitlines()[-1]
        name, value = last.split(',')
        self.assertEqual(name, 'observed_order')
        self.assertAlmostEqual(float(value), 1.5, delta=0.2)

        code, output = run(['caputo-eval', '--monomial', '1', '--h', '0.02', '--order'])
        self.assertEqual(code, 2)
        self.assertEqual(output, '')

    def test_caputo_eval_samples(self):
        samples = os.path.join(self.directory.name, 'samples.csv')
        FileManager.store_csv(samples, ('t', 'f'), [(0.1 * n, 5.0) for n in range(11)])
        output_csv = os.path.join(self.directory.name, 'derivative.csv')
        code, _ = run(['caputo-eval', '--samples', samples, '--output', output_csv])
        self.assertEqual(code, 0)
        _, rows = FileManager.read_csv(output_csv)
        self.assertEqual(len(rows), 10)
        self.assertTrue(all(float(row[1]) == 0.0 for row in rows))

        FileManager.store_csv(samples, ('t', 'f'), [(0.0, 1.0), (0.1, 2.0), (0.3, 3.0)])
        self.assertEqual(run(['caputo-eval', '--samples', samples])[0], 2)

    def test_validation_failures(self):
        self.assertEqual(run(['caputo-eval', '--alpha', '1.5'])[0], 2)
        self.assertEqual(run(['caputo-eval', '--monomial', '0.5'])[0], 2)
        self.assertEqual(run(['frobnicate'])[0], 2)
        self.assertEqual(run(['train', '--preset', 'fode', '--alpha', '0'])[0], 2)
        self.assertEqual(run(['train', '--config', os.path.join(self.directory.name, 'missing.json')])[0], 2)
        self.assertEqual(run(['--version'])[0], 0)

    def test_invalid_config_file(self):
        config = os.path.join(self.directory.name, 'config.json')
        FileManager.store_json({'problem': 'fode', 'alpha': 0.5, 'network': {'depth': 2}}, config)
        self.assertEqual(run(['train', '--config', config])[0], 2)

    def test_train_rejects_slice_times_before_training(self):
        config_path = os.path.join(self.directory.name, 'run.json')
        run_dir = os.path.join(self.directory.name, 'short')
        document = RunConfig.preset('fode').with_changes(evaluation={'slice_times': [0.1, 0.5, 1.0]}).to_dict()
        FileManager.store_json(document, config_path)
        code, _ = run(['train', '--config', config_path, '--time-window', '0.5', '--max-iters', '3',
                       '--output-dir', run_dir])
        self.assertEqual(code, 2)
        self.assertFalse(os.path.exists(run_dir))

    def test_train_and_eval(self):
        run_dir = os.path.join(self.directory.name, 'run')
        code, output = run(['train', '--preset', 'fode', '--max-iters', '5', '--output-dir', run_dir])
        self.assertEqual(code, 0)
        printed = json.loads(output)
        self.assertEqual(printed['iterations'], 5)
        self.assertEqual(printed['status'], 'max_iters')
        for name in ('config.json', 'checkpoint.json', 'trace.csv', 'evaluation.csv', 'slices.csv',
                     'summary.json', 'log.txt', 'collocation.csv'):
            self.assertTrue(os.path.exists(os.path.join(run_dir, name)), msg=name)
        stored = FileManager.read_json(os.path.join(run_dir, 'config.json'))
        self.assertEqual(stored['train']['max_iters'], 5)

        eval_dir = os.path.join(self.directory.name, 'eval')
        code, output = run(['eval', '--checkpoint', os.path.join(run_dir, 'checkpoint.json'), '--oracle',
                            '--points', '21', '--output-dir', eval_dir])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)['metrics']['max_abs'], 0.0)
        _, rows = FileManager.read_csv(os.path.join(eval_dir, 'evaluation.csv'))
        self.assertEqual(len(rows), 21)

        code, output = run(['eval', '--checkpoint', os.path.join(run_dir, 'checkpoint.json'),
                            '--times', '0.5', '--output-dir', eval_dir])
        self.assertEqual(code, 0)
        self.assertEqual(list(json.loads(output)['slice_metrics']), ['0.5'])

        self.assertEqual(run(['eval', '--checkpoint', os.path.join(run_dir, 'checkpoint.json'),
                              '--points', '5', '5', '--output-dir', eval_dir])[0], 2)

    def test_corrupt_checkpoint(self):
        checkpoint = os.path.join(self.directory.name, 'checkpoint.json')
        with open(checkpoint, 'w') as handle:
            handle.write('{"format": "fpinn-checkpoint/1", "params": [0.1, ')
        self.assertEqual(run(['eval', '--checkpoint', checkpoint])[0], 1)

    def test_sweep(self):
        spec = os.path.join(self.directory.name, 'spec.json')
        document = {'base': RunConfig.preset('fode').with_changes(train={'max_iters': 2}).to_dict(),
                    'axis': 'scheme', 'values': ['diethelm', 'l1'],
                    'output_dir': os.path.join(self.directory.name, 'sweep')}
        FileManager.store_json(document, spec)
        code, output = run(['sweep', '--spec', spec, '--workers', '2'])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)['failed'], 0)
        header, rows = FileManager.read_csv(os.path.join(self.directory.name, 'sweep', 'summary.csv'))
        self.assertEqual([row[2] for row in rows], ['diethelm', 'l1'])
        self.assertIn('output_dir', header)

        FileManager.store_json({'base': 'fode', 'axis': 'depth', 'values': [1]}, spec)
        self.assertEqual(run(['sweep', '--spec', spec])[0], 2)


if __name__ == '__main__':
    unittest.main()
