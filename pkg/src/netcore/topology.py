"""
Topology

Directed-graph model for a network of agents. An edge `(u, v)` means "v directly reads u's state". Self-access is implicit: the neighborhood of v always contains v, but self-loops are never stored.

Classes:
    Topology: Immutable directed graph over agents `0..n-1`.

Functions:
    neighbors: The closed neighborhood N_v (includes v).
    proper_neighbors: The open neighborhood N_v without v.
    make_complete: Complete digraph on n agents.
    make_random_strongly_connected: Hamiltonian cycle plus Bernoulli extra edges.
    make_circulant: Each agent reads the agents at the given forward offsets.
    make_wheel: Hub agent 0 with a bidirectional ring of rim agents.
    load_topology: Build a Topology from a `{"n": int, "edges": [[u, v], ...]}` document.
    topology_to_dict: Serialize a Topology to the same document shape.
"""

# External Libraries
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

# Local Libraries
from src.utilities.common import derive_rng
from src.utilities.errors import ArgumentError

### --- TYPE ALIASES --- ###
type Edge = tuple[int, int]


### --- CLASSES --- ###
@dataclass(frozen=True)
class Topology:
    """
    Immutable directed graph over agents `0..n-1`.

    Attributes:
        n (int): Number of agents.
        edges (frozenset[Edge]): Ordered pairs `(u, v)`, meaning v reads u.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            msg = f"Topology needs at least one agent, got n={self.n}"
            raise ArgumentError(msg)
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                msg = f"Self-loop ({u}, {v}) is implicit and must not be stored"
                raise ArgumentError(msg)
            if not (0 <= u < self.n and 0 <= v < self.n):
                msg = f"Edge ({u}, {v}) references an agent outside 0..{self.n - 1}"
                raise ArgumentError(msg)
        object.__setattr__(self, "edges", edges)

    @cached_property
    def _in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        readers: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            readers[v].append(u)
        return tuple(tuple(sorted(r)) for r in readers)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Closed neighborhood N_v in ascending order (includes v)."""
        return tuple(sorted((*self.proper_neighbors(v), v)))

    def proper_neighbors(self, v: int) -> tuple[int, ...]:
        """Open neighborhood N_v without v, in ascending order."""
        self._check_agent(v)
        return self._in_neighbors[v]

    def subgraph(self, keep: Iterable[int]) -> "Topology":
        """
        Induced subgraph on `keep`, with agent ids left unchanged. Only edges with both endpoints kept survive.
        """
        kept = frozenset(keep)
        return Topology(
            n=self.n,
            edges=frozenset((u, v) for u, v in self.edges if u in kept and v in kept),
        )

    def with_edges(self, edges: Iterable[Edge]) -> "Topology":
        """Topology on the same agents with a different edge set."""
        return Topology(n=self.n, edges=frozenset(edges))

    def to_networkx(self, nodes: Iterable[int] | None = None) -> nx.DiGraph:
        """
        Convert to a networkx DiGraph, optionally restricted to `nodes`.
        """
        keep = set(range(self.n)) if nodes is None else set(nodes)
        graph = nx.DiGraph()
        graph.add_nodes_from(sorted(keep))
        graph.add_edges_from(
            sorted((u, v) for u, v in self.edges if u in keep and v in keep)
        )
        return graph

    def _check_agent(self, v: int) -> None:
        if not 0 <= v < self.n:
            msg = f"Agent id {v} out of range 0..{self.n - 1}"
            raise ArgumentError(msg)


### --- FUNCTIONS --- ###
def neighbors(topo: Topology, v: int) -> tuple[int, ...]:
    """
    The closed neighborhood N_v = {v} ∪ {u : (u, v) ∈ E}, in ascending order.

    Args:
        topo (Topology): The network.
        v (int): The agent id.

    Returns:
        tuple[int, ...]: N_v, always containing v.

    Raises:
        ArgumentError: If `v` is not an agent of `topo`.
    """
    return topo.neighbors(v)


def proper_neighbors(topo: Topology, v: int) -> tuple[int, ...]:
    """The open neighborhood N_v without v, in ascending order."""
    return topo.proper_neighbors(v)


def make_complete(n: int) -> Topology:
    """
    Complete digraph: every ordered pair `u != v` is an edge.

    Args:
        n (int): Number of agents, at least 2.

    Returns:
        Topology: The complete network with `n * (n - 1)` edges.
    """
    if n < 2:
        msg = f"A complete network needs n >= 2, got {n}"
        raise ArgumentError(msg)
    return Topology(
        n=n, edges=frozenset((u, v) for u in range(n) for v in range(n) if u != v)
    )


def make_random_strongly_connected(
    n: int,
    extra_edge_prob: float,
    seed: int,
) -> Topology:
    """
    Random strongly connected digraph: a directed Hamiltonian cycle over a seeded permutation of the agents, plus every other ordered pair added independently with probability `extra_edge_prob`.

    Args:
        n (int): Number of agents, at least 2.
        extra_edge_prob (float): Probability of each non-cycle edge, in [0, 1].
        seed (int): Seed of the generator; identical arguments give identical graphs.

    Returns:
        Topology: The generated network.
    """
    if n < 2:
        msg = f"A strongly connected network needs n >= 2, got {n}"
        raise ArgumentError(msg)
    if not 0.0 <= extra_edge_prob <= 1.0:
        msg = f"extra_edge_prob must lie in [0, 1], got {extra_edge_prob}"
        raise ArgumentError(msg)

    rng = derive_rng(seed)
    order = [int(v) for v in rng.permutation(n)]
    cycle = {(order[i], order[(i + 1) % n]) for i in range(n)}

    # Draw for every candidate pair in a fixed order so the stream layout never depends on the cycle
    candidates = [(u, v) for u in range(n) for v in range(n) if u != v]
    draws = rng.random(len(candidates))
    extra = {
        pair
        for pair, draw in zip(candidates, draws, strict=True)
        if pair not in cycle and draw < extra_edge_prob
    }
    return Topology(n=n, edges=frozenset(cycle | extra))


def make_circulant(n: int, offsets: Iterable[int]) -> Topology:
    """
    Circulant digraph: agent i reads agent `(i + d) mod n` for every offset d.

    Args:
        n (int): Number of agents, at least 2.
        offsets (Iterable[int]): Forward offsets; multiples of n are ignored.

    Returns:
        Topology: The circulant network.
    """
    if n < 2:
        msg = f"A circulant network needs n >= 2, got {n}"
        raise ArgumentError(msg)
    steps = sorted({int(d) % n for d in offsets} - {0})
    return Topology(
        n=n,
        edges=frozenset(((i + d) % n, i) for i in range(n) for d in steps),
    )


def make_wheel(n: int) -> Topology:
    """
    Wheel digraph: hub agent 0 reads and is read by every rim agent, and the rim agents `1..n-1` form a bidirectional ring.

    Args:
        n (int): Number of agents including the hub, at least 4.

    Returns:
        Topology: The wheel network.
    """
    if n < 4:
        msg = f"A wheel needs at least 4 agents, got {n}"
        raise ArgumentError(msg)
    rim = list(range(1, n))
    edges = {(0, v) for v in rim} | {(v, 0) for v in rim}
    for idx, v in enumerate(rim):
        w = rim[(idx + 1) % len(rim)]
        edges |= {(v, w), (w, v)}
    return Topology(n=n, edges=frozenset(edges))


def load_topology(doc: Mapping) -> Topology:
    """
    Build a Topology from a `{"n": int, "edges": [[u, v], ...]}` document.

    Raises:
        ArgumentError: If the document is missing keys or names invalid edges.
    """
    try:
        n = int(doc["n"])
        edges = frozenset((int(u), int(v)) for u, v in doc.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        msg = f"Malformed graph document: {exc}"
        raise ArgumentError(msg) from exc
    return Topology(n=n, edges=edges)


def topology_to_dict(topo: Topology) -> dict:
    """Serialize a Topology to `{"n": int, "edges": [[u, v], ...]}` with sorted edges."""
    return {"n": topo.n, "edges": [[u, v] for u, v in sorted(topo.edges)]}
