# isort: skip_file

import logging

logger = logging.getLogger(__name__)

from .network_exception import (
    NetworkException,
    TopologyError,
    DisconnectedTopologyError,
    TopologyGenerationError,
)
from .topology import Topology, single, ring, grid, grid_shape, erdos_renyi
from .mixing import MixingMatrix, metropolis_weights

__all__ = [
    "NetworkException",
    "TopologyError",
    "DisconnectedTopologyError",
    "TopologyGenerationError",
    "Topology",
    "single",
    "ring",
    "grid",
    "grid_shape",
    "erdos_renyi",
    "MixingMatrix",
    "metropolis_weights",
]
