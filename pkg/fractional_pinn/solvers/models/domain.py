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
This module defines the space-time box a benchmark problem is posed on.
"""

from typing import List, Sequence, Tuple

from ..internal.common import solver_messages


class Domain:
    """
        Attributes:
           spatial_box (list): per-axis (lo, hi) intervals, empty for the fODE.
           time_window (float): T, the time interval being [0, T].
    """

    def __init__(self, spatial_box: Sequence[Tuple[float, float]], time_window: float):
        box = [(float(lo), float(hi)) for lo, hi in spatial_box]
        if not time_window > 0 or any(not lo < hi for lo, hi in box):
            raise ValueError(solver_messages.DOMAIN_ERROR)
        self.__spatial_box = box
        self.__time_window = float(time_window)

    def get_spatial_box(self) -> List[Tuple[float, float]]:
        """Get the per-axis spatial intervals"""
        return list(self.__spatial_box)

    def get_time_window(self) -> float:
        """Get T"""
        return self.__time_window

    def get_spatial_dim(self) -> int:
        """Number of spatial axes"""
        return len(self.__spatial_box)

    def get_input_dim(self) -> int:
        """Spatial axes plus time"""
        return len(self.__spatial_box) + 1

    def with_time_window(self, time_window: float) -> 'Domain':
        """Same box over [0, time_window]"""
        return Domain(self.__spatial_box, time_window)

    def __repr__(self):
        return 'Domain(spatial_box={0!r}, time_window={1!r})'.format(self.__spatial_box, self.__time_window)
