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
import filecmp
import os
import tempfile
import unittest
from os.path import join, dirname

from dotenv import load_dotenv

from fractional_pinn.bench.run_config import RunConfig
from fractional_pinn.bench.runner import execute_run
from fractional_pinn.solvers import network, trainer
from fractional_pinn.solvers.internal.common import solver_constants
from fractional_pinn.solvers.internal.utils.file_manager import FileManager

load_dotenv(join(dirname(__file__), '.env'))
SLOW = os.environ.get(solver_constants.ENV_SLOW_TESTS, '') in ('1', 'true', 'yes')


def train_preset(config: RunConfig):
    problem = config.build_problem()
    colloc = config.build_collocation(problem)
    initial = network.init(config.build_network_config())
    return trainer.train(initial, problem, colloc, config.build_train_config(), None,
                         config.get_evaluation_grid()) + (problem,)


def slice_rel_l2(model, problem, t, points_per_axis):
    tables = trainer.evaluate_slices(model, problem, [t], points_per_axis)
    return tables[float(t)].get_metrics().get_rel_l2()


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def test_runs_are_deterministic(self):
        config = RunConfig.preset('fode').with_changes(seed=42, train={'max_iters': 300})
        first, second = join(self.directory.name, 'first'), join(self.directory.name, 'second')
        execute_run(config, first)
        execute_run(config, second)
        for name in (solver_constants.CHECKPOINT_FILE, solver_constants.EVALUATION_FILE,
                     solver_constants.COLLOCATION_FILE):
            self.assertTrue(filecmp.cmp(join(first, name), join(second, name), shallow=False), msg=name)
        # elapsed_s is the only column allowed to differ
        _, left = FileManager.read_csv(join(first, solver_constants.TRACE_FILE))
        _, right = FileManager.read_csv(join(second, solver_constants.TRACE_FILE))
        self.assertEqual([row[:-1] for row in left], [row[:-1] for row in right])

    @unittest.skipUnless(SLOW, 'set FPINN_SLOW_TESTS=1 to run the training benchmarks')
    def test_fode_preset(self):
        _, report, _ = train_preset(RunConfig.preset('fode'))
        self.assertEqual(report.get_iterations(), 5000)
        self.assertLessEqual(report.get_final_metrics().get_rel_l2(), 1e-2)

    @unittest.skipUnless(SLOW, 'set FPINN_SLOW_TESTS=1 to run the training benchmarks')
    def test_fpde2d_preset(self):
        config = RunConfig.preset('fpde2d').with_changes(train={'max_wall_seconds': None, 'loss_tolerance': 1e-5})
        trained, report, problem = train_preset(config)
        self.assertEqual(report.get_status(), 'tolerance')
        late = slice_rel_l2(trained, problem, 1.0, [41])
        early = slice_rel_l2(trained, problem, 0.1, [41])
        self.assertLessEqual(late, 5e-2)
        self.assertGreater(early, late)

    @unittest.skipUnless(SLOW, 'set FPINN_SLOW_TESTS=1 to run the training benchmarks')
    def test_fpde3d_time_points_matter_more(self):
        base = RunConfig.preset('fpde3d').with_changes(train={'max_wall_seconds': None, 'max_iters': 5000})
        errors = {}
        for counts in ([5, 5, 5], [5, 5, 40], [40, 40, 5]):
            config = base.with_changes(collocation={'points_per_axis': counts})
            trained, _, problem = train_preset(config)
            errors[tuple(counts)] = slice_rel_l2(trained, problem, 0.1, [21, 21])
        self.assertLess(errors[(5, 5, 40)], errors[(5, 5, 5)])
        self.assertLess(errors[(5, 5, 40)], errors[(40, 40, 5)])

    @unittest.skipUnless(SLOW, 'set FPINN_SLOW_TESTS=1 to run the training benchmarks')
    def test_fpde3d_schemes(self):
        base = RunConfig.preset('fpde3d').with_changes(train={'max_wall_seconds': None, 'max_iters': 20000})
        totals = {}
        for scheme in ('diethelm', 'l1'):
            _, report, _ = train_preset(base.with_changes(scheme=scheme))
            totals[scheme] = report.final_record().phi_total
            self.assertLessEqual(totals[scheme], 1e-4, msg=scheme)
        self.assertLessEqual(totals['l1'], 3.0 * totals['diethelm'])


if __name__ == '__main__':
    unittest.main()
