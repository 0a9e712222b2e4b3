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
This module defines the architecture of the multilayer perceptron u_NN.

"Number of layers" in the published hyperparameter table is read as the number of
hidden layers; the output layer (one neuron, linear) is always added on top.
"""

from typing import List, Tuple

from ..internal.common import solver_messages
from ..internal.utils.validators import Validators


class NetworkConfig:
    """
        Attributes:
           input_dim (int): 1 (t), 2 (x, t) or 3 (x, y, t). Time is always the last input.
           hidden_layers (int): number of hidden tanh layers.
           neurons_per_layer (int): width of every hidden layer.
           activation (str): always 'tanh'.
           seed (int): seed of the Glorot-uniform initialiser.
    """

    KEYS = ('input_dim', 'hidden_layers', 'neurons_per_layer', 'activation', 'seed')

    def __init__(self, input_dim: int, hidden_layers: int, neurons_per_layer: int,
                 activation: str = 'tanh', seed: int = 0):
        if input_dim not in (1, 2, 3) or isinstance(input_dim, bool):
            raise ValueError(solver_messages.NETWORK_INPUT_DIM_ERROR)
        if not (Validators.validate_positive_int(hidden_layers)
                and Validators.validate_positive_int(neurons_per_layer)):
            raise ValueError(solver_messages.NETWORK_SIZE_ERROR)
        if activation != 'tanh':
            raise ValueError(solver_messages.NETWORK_ACTIVATION_ERROR + repr(activation))
        if not Validators.validate_nonnegative_int(seed):
            raise ValueError(solver_messages.NETWORK_SIZE_ERROR)
        self.__input_dim = int(input_dim)
        self.__hidden_layers = int(hidden_layers)
        self.__neurons_per_layer = int(neurons_per_layer)
        self.__activation = activation
        self.__seed = int(seed)

    def get_input_dim(self) -> int:
        """Get the input dimension"""
        return self.__input_dim

    def get_hidden_layers(self) -> int:
        """Get the hidden layer count"""
        return self.__hidden_layers

    def get_neurons_per_layer(self) -> int:
        """Get the hidden layer width"""
        return self.__neurons_per_layer

    def get_activation(self) -> str:
        """Get the activation name"""
        return self.__activation

    def get_seed(self) -> int:
        """Get the initialiser seed"""
        return self.__seed

    def layer_shapes(self) -> List[Tuple[int, int]]:
        """(fan_in, fan_out) of every affine layer, input to output"""
        widths = [self.__input_dim] + [self.__neurons_per_layer] * self.__hidden_layers + [1]
        return list(zip(widths[:-1], widths[1:]))

    def parameter_count(self) -> int:
        """Sum over layers of (fan_in + 1) * fan_out"""
        return sum((fan_in + 1) * fan_out for fan_in, fan_out in self.layer_shapes())

    def with_changes(self, **changes) -> 'NetworkConfig':
        """Copy with some fields replaced"""
        values = self.to_dict()
        values.update(changes)
        return NetworkConfig(**values)

    def to_dict(self) -> dict:
        """Plain mapping for JSON documents"""
        return {
            'input_dim': self.__input_dim,
            'hidden_layers': self.__hidden_layers,
            'neurons_per_layer': self.__neurons_per_layer,
            'activation': self.__activation,
            'seed': self.__seed
        }

    @classmethod
    def from_dict(cls, document: dict) -> 'NetworkConfig':
        """Build from a mapping, rejecting unknown keys"""
        errors = Validators.check_keys(document, cls.KEYS,
                                       ('input_dim', 'hidden_layers', 'neurons_per_layer'))
        if errors:
            raise ValueError('; '.join(errors))
        return cls(**document)

    def __eq__(self, other):
        return isinstance(other, NetworkConfig) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(tuple(self.to_dict().items()))

    def __repr__(self):
        return 'NetworkConfig({0})'.format(self.to_dict())
