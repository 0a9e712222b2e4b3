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
This file defines the various messages used by the solvers and the benchmark front end.
"""

GAMMA_DOMAIN_ERROR = "gamma is defined here for positive real arguments only, got "
LENGTH_MISMATCH_ERROR = "Sequences must have equal positive length"
ALPHA_RANGE_ERROR = "alpha must lie strictly inside (0, 1), got "
COEFFICIENT_INDEX_ERROR = "Coefficient index must satisfy 0 <= n <= n_r with n_r >= 1"
NEGATIVE_INDEX_ERROR = "Coefficient index must be a nonnegative integer"
TIME_GRID_ERROR = "A time grid needs h > 0 and at least one step"
SCHEME_KIND_ERROR = "Unknown scheme kind "
SCHEME_NODE_ERROR = "The discrete Caputo derivative is defined at nodes r = 1..N only, got r = "
SCHEME_LENGTH_ERROR = "Sample count must equal N + 1 grid nodes"
MONOMIAL_POWER_ERROR = "Monomial power must be 0 (constant) or >= 1"
NEGATIVE_TIME_ERROR = "Time must be nonnegative"
ORDER_LEVELS_ERROR = "Order estimation needs at least 3 resolutions, each half the previous"
ORDER_ROUNDOFF_ERROR = "The scheme reproduces this test function up to roundoff, so no order can be estimated"

UNSUPPORTED_PRIMITIVE_ERROR = "Unsupported primitive on the tape: "
TAPE_MISMATCH_ERROR = "Variables recorded on different tapes cannot be combined"
NON_SCALAR_OUTPUT_ERROR = "Gradients can only be taken of a scalar output"
AXIS_RANGE_ERROR = "Axis does not name a spatial input of the network: "

NETWORK_INPUT_DIM_ERROR = "input_dim must be 1, 2 or 3"
NETWORK_SIZE_ERROR = "hidden_layers and neurons_per_layer must be positive integers"
NETWORK_ACTIVATION_ERROR = "Only the tanh activation is supported, got "
NETWORK_DIMENSION_ERROR = "Input dimension does not match the network input_dim"
NETWORK_PARAMS_ERROR = "Flat parameter vector has the wrong length"
CHECKPOINT_FORMAT_ERROR = "Not a valid checkpoint document"

PROBLEM_NAME_ERROR = "Unknown problem "
DOMAIN_ERROR = "Domain needs T > 0 and lo < hi on every spatial axis"
HISTORY_ERROR = "Equation points do not cover every spatial column over the full time grid"
UNKNOWN_FACE_ERROR = "The problem has no boundary face named "

COLLOCATION_COUNT_ERROR = "Collocation counts are invalid: "
COLLOCATION_DIM_ERROR = "Collocation set does not match the problem dimensionality"

TRAIN_CONFIG_ERROR = "Invalid train configuration: "
TRAIN_DIVERGED = "Training aborted on a non-finite loss at iteration "
LEARNING_RATE_SWITCH = "Learning rate switched to "

CONFIG_UNKNOWN_KEY = "Unknown configuration key "
CONFIG_MISSING_KEY = "Missing configuration key "
CONFIG_TYPE_ERROR = "Wrong type for configuration key "
CONFIG_VALIDATION_ERROR = "Configuration is invalid"
SLICE_TIME_ERROR = "evaluation.slice_times must lie inside the time window: "
PRESET_ERROR = "Unknown preset "
SWEEP_AXIS_ERROR = "Unknown sweep axis "
SWEEP_VALUE_ERROR = "Invalid sweep value for axis "
SWEEP_CHILD_FAILED = "Sweep child failed: "
CSV_FORMAT_ERROR = "Malformed samples file: "
