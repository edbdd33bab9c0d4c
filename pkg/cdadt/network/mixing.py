import logging
from dataclasses import dataclass

import numpy as np

from ..numerics import spec_norm
from .network_exception import DisconnectedTopologyError
from .topology import Topology

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MixingMatrix:
    """Doubly stochastic weights of a topology.

    Attributes
    ----------
    W : `numpy.ndarray`
        Symmetric ``d x d`` weights with rows summing to one. ``W[i, j]``
        is nonzero only for ``i == j`` or an edge ``(i, j)``.
    lam : `float`
        Connectivity ``||W - 11^T/d||_2``, in ``[0, 1)``. Smaller is
        better connected.
    topology : `~cdadt.network.Topology`
    """

    W: np.ndarray
    lam: float
    topology: Topology

    @property
    def d(self):
        return self.W.shape[0]


def metropolis_weights(topology):
    """Metropolis-Hastings weights ``1 / (1 + max(deg_i, deg_j))`` per edge.

    Diagonal entries take up the remaining row mass.

    Raises
    ------
    `~cdadt.network.DisconnectedTopologyError`
        If the topology is not connected.
    """
    if not topology.is_connected():
        raise DisconnectedTopologyError(
            f"{topology.kind} topology on {topology.d} agents is disconnected"
        )

    d = topology.d
    deg = topology.degrees()
    W = np.zeros((d, d))
    for i, j in topology.edges:
        w = 1.0 / (1 + max(deg[i], deg[j]))
        W[i, j] = w
        W[j, i] = w
    for i in range(d):
        W[i, i] = 1.0 - (np.sum(W[i]) - W[i, i])

    lam = spec_norm(W - np.full((d, d), 1.0 / d))
    logger.debug(f"metropolis_weights: {topology.kind} d={d} lambda={lam:.6f}")
    return MixingMatrix(W=W, lam=lam, topology=topology)
