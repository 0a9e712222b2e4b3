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
This file defines the constants used by the solvers and the benchmark front end.
"""

SDK_NAME = "fractional-pinn-benchmarks"

# Fractional order used by every published experiment
DEFAULT_ALPHA = 0.5

# Default time windows per problem (seconds)
DEFAULT_TIME_WINDOW_FODE = 1.0
DEFAULT_TIME_WINDOW_2D = 1.0
DEFAULT_TIME_WINDOW_3D = 0.5

# Reporting timestamps for per-slice errors (seconds)
SLICE_TIMES_FODE = (0.1, 0.5, 1.0)
SLICE_TIMES_2D = (0.1, 0.5, 1.0)
SLICE_TIMES_3D = (0.1, 0.3, 0.5)

# Adam constants
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPSILON = 1e-8

# Finite-difference oracle steps
FD_PARAMETER_STEP = 1e-5
FD_SPATIAL_STEP = 1e-3

# Lanczos approximation, g = 7, n = 9
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# CLI exit codes
EXIT_OK = 0
EXIT_RUNTIME_FAILURE = 1
EXIT_VALIDATION_FAILURE = 2

# Environment variables
ENV_OUTPUT_ROOT = "FPINN_OUTPUT_ROOT"
ENV_DEBUG = "FPINN_DEBUG"
ENV_SLOW_TESTS = "FPINN_SLOW_TESTS"

# Run artifacts
CHECKPOINT_FILE = "checkpoint.json"
TRACE_FILE = "trace.csv"
EVALUATION_FILE = "evaluation.csv"
SLICES_FILE = "slices.csv"
SUMMARY_FILE = "summary.json"
CONFIG_FILE = "config.json"
COLLOCATION_FILE = "collocation.csv"
LOG_FILE = "log.txt"
SWEEP_SUMMARY_FILE = "summary.csv"
SWEEP_COMPARISON_FILE = "comparison.csv"

CHECKPOINT_FORMAT = "fpinn-checkpoint/1"
