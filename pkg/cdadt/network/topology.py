import json
import logging
import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .network_exception import TopologyError, TopologyGenerationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Topology:
    """Undirected communication graph over agents ``0 .. d-1``.

    Edges are stored as sorted ``(i, j)`` pairs with ``i < j``. Build
    instances with `Topology.from_edges` or one of the generators
    `ring`, `grid` and `erdos_renyi`.
    """

    d: int
    edges: tuple
    kind: str = "custom"
    params: tuple = ()

    @classmethod
    def from_edges(cls, d, edges, kind="custom", params=()):
        """Validate and normalize an edge list.

        Raises
        ------
        `~cdadt.network.TopologyError`
            On ``d < 1``, endpoints out of range, self-loops or duplicate
            edges.
        """
        if d < 1:
            raise TopologyError(f"a topology needs at least one agent, got d={d}")

        normalized = set()
        for edge in edges:
            i, j = (int(v) for v in edge)
            if not (0 <= i < d and 0 <= j < d):
                raise TopologyError(f"edge ({i}, {j}) out of range for d={d}")
            if i == j:
                raise TopologyError(f"self-loop at agent {i}")
            key = (min(i, j), max(i, j))
            if key in normalized:
                raise TopologyError(f"duplicate edge {key}")
            normalized.add(key)

        return cls(d=d, edges=tuple(sorted(normalized)), kind=kind, params=tuple(params))

    def degrees(self):
        deg = np.zeros(self.d, dtype=int)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbors(self, i):
        """Sorted neighbors of agent ``i``, excluding ``i`` itself."""
        out = [j for a, j in self.edges if a == i] + [a for a, j in self.edges if j == i]
        return sorted(out)

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.d))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self):
        return nx.is_connected(self.to_networkx())

    def to_dict(self):
        return {
            "kind": self.kind,
            "d": self.d,
            "params": dict(self.params),
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        try:
            return cls.from_edges(
                int(data["d"]),
                [tuple(e) for e in data["edges"]],
                kind=data.get("kind", "custom"),
                params=tuple(sorted(data.get("params", {}).items())),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise TopologyError(f"invalid topology description: {e}")

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise TopologyError(f"invalid topology JSON: {e}")
        return cls.from_dict(data)


def single():
    """The one-agent topology, which has no edges."""
    return Topology.from_edges(1, (), kind="single")


def ring(d):
    """Cycle ``0 - 1 - ... - (d-1) - 0``.

    Raises
    ------
    `~cdadt.network.TopologyError`
        If ``d < 3``.
    """
    if d < 3:
        raise TopologyError(f"a ring needs at least 3 agents, got d={d}")
    return Topology.from_edges(d, [(i, (i + 1) % d) for i in range(d)], kind="ring")


def grid(rows, cols):
    """4-neighbor lattice with ``rows * cols`` agents numbered row-major."""
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise TopologyError(f"a grid needs at least 2 agents, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            k = r * cols + c
            if c + 1 < cols:
                edges.append((k, k + 1))
            if r + 1 < rows:
                edges.append((k, k + cols))
    return Topology.from_edges(
        rows * cols, edges, kind="grid", params=(("cols", cols), ("rows", rows))
    )


def grid_shape(d):
    """Most square ``(rows, cols)`` factorization of ``d`` with ``rows <= cols``."""
    rows = max(r for r in range(1, math.isqrt(d) + 1) if d % r == 0)
    return rows, d // rows


def erdos_renyi(d, p_edge, seed, max_retries=1000):
    """Connected Erdos-Renyi graph.

    Draws ``G(d, p_edge)`` with seeds ``seed, seed + 1, ...`` until a
    connected graph appears, so the result is a pure function of the
    arguments.

    Raises
    ------
    `~cdadt.network.TopologyError`
        If ``d < 2`` or ``p_edge`` is outside ``(0, 1]``.
    `~cdadt.network.TopologyGenerationError`
        If ``max_retries`` draws are all disconnected.
    """
    if d < 2:
        raise TopologyError(f"an Erdos-Renyi graph needs at least 2 agents, got d={d}")
    if not 0 < p_edge <= 1:
        raise TopologyError(f"p_edge must lie in (0, 1], got {p_edge}")

    for attempt in range(max_retries):
        graph = nx.gnp_random_graph(d, p_edge, seed=seed + attempt)
        if nx.is_connected(graph):
            logger.debug(f"erdos_renyi: connected draw after {attempt + 1} attempt(s)")
            return Topology.from_edges(
                d,
                graph.edges(),
                kind="er",
                params=(("p_edge", p_edge), ("seed", seed)),
            )

    raise TopologyGenerationError(
        f"no connected G({d}, {p_edge}) graph in {max_retries} draws from seed {seed}"
    )
