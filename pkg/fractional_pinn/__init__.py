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
 This package provides physics-informed neural network solvers for time-fractional
 differential equations, with Caputo derivatives discretised by finite differences.
"""
from fractional_pinn.solvers.caputo import CaputoScheme, build_scheme, apply_scheme, exact_caputo_monomial, \
    observed_order
from fractional_pinn.solvers.network import Network, init, forward, save_checkpoint, load_checkpoint
from fractional_pinn.solvers.problems import Problem, AnalyticalField, get_problem, residual
from fractional_pinn.solvers.collocation import CollocationSet, build_grid
from fractional_pinn.solvers.trainer import loss, train, evaluate, evaluate_slices
from fractional_pinn.solvers.models import NetworkConfig, TrainConfig, TrainReport, SchemeKind, ProblemName, \
    TimeGrid, ErrorMetrics
from .version import __version__
