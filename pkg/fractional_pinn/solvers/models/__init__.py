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
This module defines the value types used by the solvers.
"""

from .error_metrics import ErrorMetrics
from .scheme_kind import SchemeKind
from .problem_name import ProblemName
from .time_grid import TimeGrid
from .network_config import NetworkConfig
from .domain import Domain
from .train_config import TrainConfig
from .train_report import TrainReport, LossRecord, TRACE_HEADER
