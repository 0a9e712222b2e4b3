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
import threading
import unittest

from fractional_pinn.solvers.internal.utils.logger import Logger


class MyTestCase(unittest.TestCase):

    def tearDown(self) -> None:
        Logger.set_debug(False)

    def test_debug_switch(self):
        Logger.set_debug(True)
        self.assertTrue(Logger.is_debug())
        Logger.set_debug(False)
        self.assertFalse(Logger.is_debug())

    def test_file_handler(self):
        with tempfile.TemporaryDirectory() as directory:
            file_path = os.path.join(directory, 'log.txt')
            handler = Logger.add_file_handler(file_path)
            Logger.info('visible info')
            Logger.debug('hidden debug')
            Logger.set_debug(True)
            Logger.debug('visible debug')
            Logger.remove_handler(handler)
            Logger.info('after removal')
            with open(file_path) as handle:
                content = handle.read()
        self.assertIn('visible info', content)
        self.assertIn('visible debug', content)
        self.assertNotIn('hidden debug', content)
        self.assertNotIn('after removal', content)

    def test_current_thread_only(self):
        with tempfile.TemporaryDirectory() as directory:
            file_path = os.path.join(directory, 'log.txt')
            handler = Logger.add_file_handler(file_path, current_thread_only=True)
            worker = threading.Thread(target=Logger.info, args=('from another thread',))
            worker.start()
            worker.join()
            Logger.info('from this thread')
            Logger.remove_handler(handler)
            with open(file_path) as handle:
                content = handle.read()
        self.assertIn('from this thread', content)
        self.assertNotIn('from another thread', content)


if __name__ == '__main__':
    unittest.main()
