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
This module provides methods to perform the input validations.
"""
import math
import numbers
from typing import List, Sequence

from ..common import solver_messages


class ConfigValidationError(ValueError):
    """Raised once with every problem found in a configuration document.

    Attributes:
        errors: One human readable message per problem, in discovery order.
    """

    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__(solver_messages.CONFIG_VALIDATION_ERROR + ":\n  - " + "\n  - ".join(self.errors))


class Validators:
    """Validator class"""
    @classmethod
    def validate_string(cls, value: str) -> bool:
        """Validate the string

        Args:
            value: value to be checked
        """
        return bool(isinstance(value, str) and value and value.strip())

    @classmethod
    def validate_real(cls, value) -> bool:
        """Finite real number, booleans excluded"""
        return isinstance(value, numbers.Real) and not isinstance(value, bool) and math.isfinite(value)

    @classmethod
    def validate_positive_real(cls, value) -> bool:
        """Finite real number > 0"""
        return cls.validate_real(value) and value > 0

    @classmethod
    def validate_alpha(cls, value) -> bool:
        """Fractional order strictly inside (0, 1)"""
        return cls.validate_real(value) and 0.0 < value < 1.0

    @classmethod
    def validate_positive_int(cls, value) -> bool:
        """Integer >= 1, booleans excluded"""
        return isinstance(value, numbers.Integral) and not isinstance(value, bool) and value >= 1

    @classmethod
    def validate_nonnegative_int(cls, value) -> bool:
        """Integer >= 0, booleans excluded"""
        return isinstance(value, numbers.Integral) and not isinstance(value, bool) and value >= 0

    @classmethod
    def validate_strictly_increasing(cls, values: Sequence) -> bool:
        """Every entry a nonnegative integer and larger than its predecessor"""
        if not all(cls.validate_nonnegative_int(value) for value in values):
            return False
        return all(later > earlier for earlier, later in zip(values, values[1:]))

    @classmethod
    def require_alpha(cls, value):
        """Raise the shared argument error for an alpha outside (0, 1)"""
        if not cls.validate_alpha(value):
            raise ValueError(solver_messages.ALPHA_RANGE_ERROR + repr(value))

    @classmethod
    def check_keys(cls, document, allowed: Sequence[str], required: Sequence[str] = (),
                   prefix: str = '') -> List[str]:
        """Collect unknown and missing keys of a configuration mapping

        Args:
            document: Mapping read from a JSON document.
            allowed: Every key the section accepts.
            required: Keys that must be present.
            prefix: Dotted location of the section, used in the messages.
        Returns:
            A list of messages, empty when the keys are acceptable.
        """
        if not isinstance(document, dict):
            return [solver_messages.CONFIG_TYPE_ERROR + repr(prefix.rstrip('.') or '<root>') + ' (expected an object)']
        errors = [solver_messages.CONFIG_UNKNOWN_KEY + repr(prefix + key)
                  for key in document if key not in allowed]
        errors.extend(solver_messages.CONFIG_MISSING_KEY + repr(prefix + key)
                      for key in required if key not in document)
        return errors
