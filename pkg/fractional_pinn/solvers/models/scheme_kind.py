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
This module defines the kinds of discrete Caputo operators.
"""

import enum

from ..internal.common import solver_messages


class SchemeKind(enum.Enum):
    """Discretisation of the Caputo derivative on a uniform grid"""
    DIETHELM = 'diethelm'
    L1 = 'l1'

    @classmethod
    def parse(cls, value) -> 'SchemeKind':
        """Accept a member or its name/value in any letter case"""
        if isinstance(value, SchemeKind):
            return value
        text = str(value).strip().lower()
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(solver_messages.SCHEME_KIND_ERROR + repr(value))
