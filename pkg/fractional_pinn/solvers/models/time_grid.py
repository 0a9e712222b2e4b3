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
This module defines the uniform time grid t_n = n h, n = 0..N.
"""

import numpy as np

from ..internal.common import solver_messages


class TimeGrid:
    """Uniform grid on [0, N h] starting at the Caputo lower limit t0 = 0"""

    def __init__(self, h: float, n_steps: int):
        if not (isinstance(n_steps, (int, np.integer)) and n_steps >= 1) or not h > 0:
            raise ValueError(solver_messages.TIME_GRID_ERROR)
        self.__h = float(h)
        self.__n_steps = int(n_steps)

    @classmethod
    def over_window(cls, t_final: float, n_steps: int) -> 'TimeGrid':
        """Grid with N steps covering [0, t_final]"""
        if not (isinstance(n_steps, (int, np.integer)) and n_steps >= 1):
            raise ValueError(solver_messages.TIME_GRID_ERROR)
        return cls(t_final / n_steps, n_steps)

    def get_h(self) -> float:
        """Get the spacing"""
        return self.__h

    def get_n_steps(self) -> int:
        """Get N"""
        return self.__n_steps

    def get_t0(self) -> float:
        """Get the first node, always 0"""
        return 0.0

    def get_t_final(self) -> float:
        """Get t_N = N h"""
        return self.__n_steps * self.__h

    def nodes(self) -> np.ndarray:
        """Node times computed as n h (multiplication, never accumulation)"""
        return np.arange(self.__n_steps + 1, dtype=np.float64) * self.__h

    def __eq__(self, other):
        return isinstance(other, TimeGrid) and self.__h == other.get_h() \
            and self.__n_steps == other.get_n_steps()

    def __hash__(self):
        return hash((self.__h, self.__n_steps))

    def __repr__(self):
        return 'TimeGrid(h={0!r}, n_steps={1})'.format(self.__h, self.__n_steps)
