"""
`cdadt` solves optimization problems over the generalized Stiefel manifold
``{X : X^T M X = I}`` when both the objective and the constraint matrix
are split across agents of a network,

.. math::

    \\min_X \\sum_{i=1}^d f_i(X) \\quad \\text{s.t.} \\quad
    X^T \\Big(\\sum_{i=1}^d M_i\\Big) X = I_p .

Each agent only talks to its neighbors. The method replaces the
constraint with a constraint dissolving penalty and tracks both the
network average of the local gradients and the network average of
``M_i X_i``, so every agent can form a search direction for the global
problem without ever seeing ``M``.

Features
========
* Decentralized double-tracking iteration in `~cdadt.engine.run`
* Ring, grid and Erdos-Renyi topologies with Metropolis weights in
  `~cdadt.network`
* Distributed CCA problems, synthetic data generators and a CSV loader in
  `~cdadt.problem`
* A centralized eigenvalue oracle in `~cdadt.oracle`
* Reproducible experiments from the ``cdadt`` command line: every run
  writes a CSV log and a manifest from which it can be rerun bit for bit
"""

# isort: skip_file

import logging

__version__ = "0.1.0"

from . import utils
from . import numerics
from . import network
from . import problem
from . import engine
from . import oracle
from . import cli

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

__all__ = ["cli", "engine", "network", "numerics", "oracle", "problem", "utils"]
