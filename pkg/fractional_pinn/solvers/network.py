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
The multilayer perceptron u_NN.

Flat parameter layout, layer-major from input to output: for every affine layer the
weight matrix W (fan_in x fan_out, row-major) followed by the bias b (fan_out).
Hidden layers apply tanh; the single output neuron is linear.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .diff_engine import DualJet2, Variable, tanh, value_of
from .internal.common import solver_constants, solver_messages
from .internal.utils.file_manager import FileManager
from .internal.utils.logger import Logger
from .models import NetworkConfig


def forward_layers(layers: Sequence[Tuple], inputs):
    """Apply affine layers with tanh between them.

    Works unchanged for numpy arrays, `DualJet2` jets and tape `Variable` weights, so
    every evaluation mode performs the same floating-point operations in the same order.
    """
    hidden = inputs
    for weights, bias in layers[:-1]:
        hidden = tanh(hidden @ weights + bias)
    weights, bias = layers[-1]
    return hidden @ weights + bias


class Network:
    """
        Attributes:
           config (NetworkConfig): architecture.
           params (numpy.ndarray): flat float64 parameter vector, read-only.
    """

    def __init__(self, config: NetworkConfig, params):
        params = np.array(params, dtype=np.float64).reshape(-1)
        if params.size != config.parameter_count():
            raise ValueError(solver_messages.NETWORK_PARAMS_ERROR)
        params.flags.writeable = False
        self.__config = config
        self.__params = params

    def get_config(self) -> NetworkConfig:
        """Get the architecture"""
        return self.__config

    def get_params(self) -> np.ndarray:
        """Get the flat parameter vector"""
        return self.__params

    def with_params(self, params) -> 'Network':
        """Same architecture, new parameters"""
        return Network(self.__config, params)

    def layers(self, params=None) -> List[Tuple]:
        """Split a flat vector (array or tape Variable) into (W, b) pairs"""
        params = self.__params if params is None else params
        if value_of(params).size != self.__config.parameter_count():
            raise ValueError(solver_messages.NETWORK_PARAMS_ERROR)
        layers = []
        offset = 0
        for fan_in, fan_out in self.__config.layer_shapes():
            weights = params[offset:offset + fan_in * fan_out].reshape(fan_in, fan_out)
            offset += fan_in * fan_out
            bias = params[offset:offset + fan_out]
            offset += fan_out
            layers.append((weights, bias))
        return layers

    def forward_any(self, inputs, params=None):
        """Evaluate on a (P, input_dim) batch given as an array or a `DualJet2`.

        Returns a (P, 1) result of the same kind; tape variables when params is a Variable.
        """
        width = inputs.value.shape[-1] if isinstance(inputs, DualJet2) else np.shape(inputs)[-1]
        if width != self.__config.get_input_dim():
            raise ValueError(solver_messages.NETWORK_DIMENSION_ERROR)
        return forward_layers(self.layers(params), inputs)

    def forward_batch(self, points) -> np.ndarray:
        """u_NN at every row of a (P, input_dim) array, as a (P,) array"""
        points = np.asarray(points, dtype=np.float64)
        if points.ndim != 2:
            raise ValueError(solver_messages.NETWORK_DIMENSION_ERROR)
        return self.forward_any(points).reshape(-1)

    def __call__(self, point: Sequence[float]) -> float:
        return forward(self, point)

    def __eq__(self, other):
        return isinstance(other, Network) and self.__config == other.get_config() \
            and np.array_equal(self.__params, other.get_params())

    def __hash__(self):
        return hash((self.__config, self.__params.tobytes()))

    def __repr__(self):
        return 'Network({0!r}, {1} params)'.format(self.__config, self.__params.size)


def init(config: NetworkConfig) -> Network:
    """Glorot-uniform weights drawn from a PRNG seeded by config.seed, zero biases"""
    rng = np.random.default_rng(config.get_seed())
    chunks = []
    for fan_in, fan_out in config.layer_shapes():
        bound = np.sqrt(6.0 / (fan_in + fan_out))
        chunks.append(rng.uniform(-bound, bound, size=fan_in * fan_out))
        chunks.append(np.zeros(fan_out))
    return Network(config, np.concatenate(chunks))


def forward(network: Network, point: Sequence[float]) -> float:
    """u_NN at a single coordinate vector (spatial..., t)"""
    point = np.asarray(point, dtype=np.float64).reshape(-1)
    if point.size != network.get_config().get_input_dim():
        raise ValueError(solver_messages.NETWORK_DIMENSION_ERROR)
    return float(network.forward_any(point.reshape(1, -1))[0, 0])


def lipschitz_bound(network: Network) -> float:
    """Upper bound on the Lipschitz constant: product of layer spectral norms"""
    bound = 1.0
    for weights, _ in network.layers():
        bound *= float(np.linalg.norm(weights, 2))
    return bound


def save_checkpoint(network: Network, file_path: str, metadata: Optional[dict] = None) -> bool:
    """Write config, flat parameters and free-form metadata as one JSON document.

    Floats are written with their shortest round-tripping repr, so a reload is bit-exact.
    """
    document = {
        'format': solver_constants.CHECKPOINT_FORMAT,
        'config': network.get_config().to_dict(),
        'params': [float(value) for value in network.get_params()],
        'metadata': dict(metadata or {}),
    }
    return FileManager.store_json(document, file_path)


def load_checkpoint(file_path: str) -> Tuple[Network, dict]:
    """Read a checkpoint back.

    Returns:
        (network, metadata)
    Raises:
        ValueError: the file is missing, corrupt or inconsistent with its config.
    """
    document = FileManager.read_json(file_path)
    if not isinstance(document, dict) or document.get('format') != solver_constants.CHECKPOINT_FORMAT:
        raise ValueError(solver_messages.CHECKPOINT_FORMAT_ERROR)
    try:
        config = NetworkConfig.from_dict(document['config'])
        network = Network(config, document['params'])
    except (KeyError, TypeError, ValueError) as err:
        Logger.error(solver_messages.CHECKPOINT_FORMAT_ERROR + ': ' + str(err))
        raise ValueError(solver_messages.CHECKPOINT_FORMAT_ERROR) from err
    metadata = document.get('metadata', {})
    return network, metadata if isinstance(metadata, dict) else {}
