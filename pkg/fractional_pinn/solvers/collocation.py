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
Tensor-product collocation grids.

Every axis is sampled uniformly with both endpoints included. Equation points form the
full Cartesian product of the spatial nodes with the time nodes t_1..t_N, ordered
time-major (the spatial index varies fastest), so that row r-1 of the reshaped residual
is the time slice t_r. The t = 0 slice belongs to the initial-condition loss.
"""

import math
from typing import List, Sequence

import numpy as np

from .internal.common import solver_messages
from .internal.utils.file_manager import FileManager
from .internal.utils.validators import Validators
from .models import TimeGrid

COORDINATE_NAMES = {1: ('t',), 2: ('x', 't'), 3: ('x', 'y', 't')}
COLLOCATION_HEADER_PREFIX = ('role', 'face')


class CollocationSet:
    """
        Attributes:
           time_grid (TimeGrid): shared by every equation point.
           spatial_nodes (list): one node array per spatial axis.
           eq_points (numpy.ndarray): (N * n_space, input_dim), time-major, t >= t_1.
           ic_points (numpy.ndarray): (N_ic, input_dim), all with t = 0.
           bc_points (numpy.ndarray): (N_bc, input_dim), all on a boundary face.
           bc_faces (list): face name of every row of bc_points.
    """

    def __init__(self, time_grid: TimeGrid, spatial_nodes: Sequence[np.ndarray],
                 ic_points: np.ndarray, bc_points: np.ndarray, bc_faces: Sequence[str]):
        self.__time_grid = time_grid
        self.__spatial_nodes = [np.asarray(nodes, dtype=np.float64) for nodes in spatial_nodes]
        input_dim = len(self.__spatial_nodes) + 1
        if self.__spatial_nodes:
            mesh = np.meshgrid(*self.__spatial_nodes, indexing='ij')
            space = np.stack([axis.ravel() for axis in mesh], axis=1)
        else:
            space = np.zeros((1, 0))
        times = time_grid.nodes()
        history = np.hstack([np.tile(space, (times.size, 1)),
                             np.repeat(times, space.shape[0]).reshape(-1, 1)])
        self.__n_space = space.shape[0]
        self.__history = self.__frozen(history)
        self.__eq_points = self.__frozen(history[self.__n_space:])
        self.__ic_points = self.__frozen(np.asarray(ic_points, dtype=np.float64).reshape(-1, input_dim))
        self.__bc_points = self.__frozen(np.asarray(bc_points, dtype=np.float64).reshape(-1, input_dim))
        self.__bc_faces = list(bc_faces)

    @staticmethod
    def __frozen(array: np.ndarray) -> np.ndarray:
        array = np.array(array, dtype=np.float64)
        array.flags.writeable = False
        return array

    def get_time_grid(self) -> TimeGrid:
        """Get the shared time grid"""
        return self.__time_grid

    def get_spatial_nodes(self) -> List[np.ndarray]:
        """Get the node arrays of the spatial axes"""
        return list(self.__spatial_nodes)

    def get_input_dim(self) -> int:
        """Spatial axes plus time"""
        return len(self.__spatial_nodes) + 1

    def get_n_space(self) -> int:
        """Number of spatial columns (1 for the fODE)"""
        return self.__n_space

    def get_eq_points(self) -> np.ndarray:
        """Get the equation-residual points"""
        return self.__eq_points

    def get_ic_points(self) -> np.ndarray:
        """Get the initial-condition points"""
        return self.__ic_points

    def get_bc_points(self) -> np.ndarray:
        """Get the boundary-condition points"""
        return self.__bc_points

    def get_bc_faces(self) -> List[str]:
        """Get the face name of every boundary point"""
        return list(self.__bc_faces)

    def history_points(self) -> np.ndarray:
        """Full tensor grid including t = 0, time-major: the network evaluations feeding the Caputo history"""
        return self.__history

    def counts(self) -> dict:
        """N_eq, N_ic and N_bc"""
        return {'n_eq': int(self.__eq_points.shape[0]),
                'n_ic': int(self.__ic_points.shape[0]),
                'n_bc': int(self.__bc_points.shape[0])}

    def __repr__(self):
        return 'CollocationSet({0!r}, {1})'.format(self.__time_grid, self.counts())


def _split_evenly(total: int, parts: int) -> List[int]:
    """Even split, remainder to the leading parts"""
    base, remainder = divmod(total, parts)
    return [base + (1 if index < remainder else 0) for index in range(parts)]


def build_grid(problem, points_per_axis: Sequence[int], n_ic: int, n_bc: int) -> CollocationSet:
    """Uniform collocation grids for a problem.

    Args:
        problem: Benchmark problem (its domain and boundary faces are used).
        points_per_axis: Node counts per axis, spatial axes first and time last, each >= 2.
        n_ic: Initial-condition points. fODE: copies of t = 0; 2D: points over x;
            3D: per-axis count of an n_ic x n_ic grid over (x, y).
        n_bc: Boundary points. 2D: total, split over the two faces; 3D: per face, a
            perfect square k^2 laid out k x k over (space x time). Must be 0 for the fODE.
    Returns:
        CollocationSet
    Raises:
        ValueError: counts do not fit the problem.
    """
    domain = problem.get_domain()
    spatial_dim = domain.get_spatial_dim()
    counts = list(points_per_axis)
    if len(counts) != spatial_dim + 1:
        raise ValueError(solver_messages.COLLOCATION_DIM_ERROR)
    if not all(Validators.validate_positive_int(count) and count >= 2 for count in counts):
        raise ValueError(solver_messages.COLLOCATION_COUNT_ERROR + 'every axis needs at least 2 nodes')
    if not (Validators.validate_nonnegative_int(n_ic) and Validators.validate_nonnegative_int(n_bc)):
        raise ValueError(solver_messages.COLLOCATION_COUNT_ERROR + 'n_ic and n_bc must be nonnegative integers')

    t_final = domain.get_time_window()
    time_grid = TimeGrid.over_window(t_final, counts[-1] - 1)
    box = domain.get_spatial_box()
    spatial_nodes = [np.linspace(lo, hi, count) for (lo, hi), count in zip(box, counts[:-1])]

    if spatial_dim == 0:
        ic_points = np.zeros((n_ic, 1))
    elif spatial_dim == 1:
        ic_x = np.linspace(box[0][0], box[0][1], n_ic)
        ic_points = np.stack([ic_x, np.zeros(n_ic)], axis=1)
    else:
        ic_x, ic_y = np.meshgrid(np.linspace(box[0][0], box[0][1], n_ic),
                                 np.linspace(box[1][0], box[1][1], n_ic), indexing='ij')
        ic_points = np.stack([ic_x.ravel(), ic_y.ravel(), np.zeros(n_ic * n_ic)], axis=1)

    faces = [condition.face for condition in problem.get_bcs()]
    bc_blocks, bc_faces = [], []
    if spatial_dim == 0:
        if n_bc:
            raise ValueError(solver_messages.COLLOCATION_COUNT_ERROR + 'the fODE has no boundary')
    elif spatial_dim == 1:
        for face, count in zip(faces, _split_evenly(n_bc, len(faces))):
            block = np.empty((count, 2))
            block[:, face.axis] = face.value
            block[:, 1] = np.linspace(0.0, t_final, count)
            bc_blocks.append(block)
            bc_faces.extend([face.name] * count)
    elif n_bc:
        side = math.isqrt(n_bc)
        if side * side != n_bc:
            raise ValueError(solver_messages.COLLOCATION_COUNT_ERROR + '3D boundary count per face must be a square')
        for face in faces:
            free_axis = 1 - face.axis
            lo, hi = box[free_axis]
            along, times = np.meshgrid(np.linspace(lo, hi, side), np.linspace(0.0, t_final, side), indexing='ij')
            block = np.empty((n_bc, 3))
            block[:, face.axis] = face.value
            block[:, free_axis] = along.ravel()
            block[:, 2] = times.ravel()
            bc_blocks.append(block)
            bc_faces.extend([face.name] * n_bc)
    bc_points = np.vstack(bc_blocks) if bc_blocks else np.zeros((0, spatial_dim + 1))
    return CollocationSet(time_grid, spatial_nodes, ic_points, bc_points, bc_faces)


def dump_csv(colloc: CollocationSet, file_path: str) -> bool:
    """Write every point as a row (role, face, coordinates...) for scatter plots"""
    names = COORDINATE_NAMES[colloc.get_input_dim()]
    rows = [('eq', '') + tuple(point) for point in colloc.get_eq_points()]
    rows.extend(('ic', '') + tuple(point) for point in colloc.get_ic_points())
    rows.extend(('bc', face) + tuple(point) for face, point in zip(colloc.get_bc_faces(), colloc.get_bc_points()))
    return FileManager.store_csv(file_path, COLLOCATION_HEADER_PREFIX + names, rows)
