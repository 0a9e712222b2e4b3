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
This module defines the error metrics comparing a prediction against a reference solution.
"""


class ErrorMetrics:
    """
        Attributes:
           rel_l2 (float): ||predicted - reference||_2 / ||reference||_2.
           max_abs (float): largest absolute difference.
           rmse (float): root mean square difference.
           n_points (int): number of compared values.
    """

    def __init__(self, rel_l2: float, max_abs: float, n_points: int, rmse: float = 0.0):
        self.__rel_l2 = float(rel_l2)
        self.__max_abs = float(max_abs)
        self.__rmse = float(rmse)
        self.__n_points = int(n_points)

    def get_rel_l2(self) -> float:
        """Get the relative L2 error"""
        return self.__rel_l2

    def get_max_abs(self) -> float:
        """Get the maximum absolute error"""
        return self.__max_abs

    def get_rmse(self) -> float:
        """Get the root mean square error"""
        return self.__rmse

    def get_n_points(self) -> int:
        """Get the number of compared points"""
        return self.__n_points

    def to_dict(self) -> dict:
        """Plain mapping for summaries"""
        return {
            'rel_l2': self.__rel_l2,
            'max_abs': self.__max_abs,
            'rmse': self.__rmse,
            'n_points': self.__n_points
        }

    def __repr__(self):
        return 'ErrorMetrics(rel_l2={0!r}, max_abs={1!r}, n_points={2})'.format(
            self.__rel_l2, self.__max_abs, self.__n_points)
