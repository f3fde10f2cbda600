"""
Scheduler

Decides, round by round, who communicates: everyone (synchronous), a random subset of agents (asynchronous), or a random subset of links (stochastic edges).

Classes:
    Scheduler: Scheduling policy and its parameters.

Functions:
    sample_round: Draw the round's topology and active set.
"""

# External Libraries
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

# Local Libraries
from src.netcore.topology import Topology
from src.utilities.errors import ArgumentError

### --- CONSTANTS --- ###
SCHEDULER_STREAM = 1

### --- TYPE ALIASES --- ###
type SchedulerKind = Literal["synchronous", "async_random_subset", "stochastic_edges"]


### --- CLASSES --- ###
@dataclass(frozen=True)
class Scheduler:
    """
    Scheduling policy.

    Attributes:
        kind (SchedulerKind): "synchronous", "async_random_subset" or "stochastic_edges".
        min_active (int): Minimum active agents per asynchronous round.
        edge_prob (float): Probability of keeping each edge in a stochastic round.
    """

    kind: SchedulerKind = "synchronous"
    min_active: int = 1
    edge_prob: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in ("synchronous", "async_random_subset", "stochastic_edges"):
            msg = f"Unknown scheduler kind {self.kind!r}"
            raise ArgumentError(msg)
        if self.min_active < 1:
            msg = f"min_active must be at least 1, got {self.min_active}"
            raise ArgumentError(msg)
        if not 0.0 <= self.edge_prob <= 1.0:
            msg = f"edge_prob must lie in [0, 1], got {self.edge_prob}"
            raise ArgumentError(msg)

    @property
    def randomized(self) -> bool:
        """True for the schedulers that draw from the random stream."""
        return self.kind != "synchronous"


### --- FUNCTIONS --- ###
def _subset_sizes(n: int, min_active: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Admissible subset sizes `min_active..n` and their probabilities, proportional to C(n, s). Drawing a size this way and then a uniform subset of that size is uniform over all admissible subsets.
    """
    sizes = np.arange(min_active, n + 1)
    log_counts = np.array([math.lgamma(n + 1) - math.lgamma(s + 1) - math.lgamma(n - s + 1) for s in sizes])
    weights = np.exp(log_counts - log_counts.max())
    return sizes, weights / weights.sum()


def sample_round(
    scheduler: Scheduler,
    topo: Topology,
    rng: np.random.Generator,
) -> tuple[Topology, frozenset[int] | None]:
    """
    Draw the topology and active set of one round.

    Args:
        scheduler (Scheduler): The scheduling policy.
        topo (Topology): The network in effect this round.
        rng (np.random.Generator): The run's scheduler stream.

    Returns:
        tuple[Topology, frozenset[int] | None]: The round's topology and its active set (None means every agent).
    """
    match scheduler.kind:
        case "synchronous":
            return topo, None
        case "async_random_subset":
            if scheduler.min_active > topo.n:
                msg = f"min_active={scheduler.min_active} exceeds the {topo.n} agents"
                raise ArgumentError(msg)
            sizes, probabilities = _subset_sizes(topo.n, scheduler.min_active)
            size = int(rng.choice(sizes, p=probabilities))
            chosen = rng.choice(topo.n, size=size, replace=False)
            return topo, frozenset(int(a) for a in chosen)
        case "stochastic_edges":
            edges = sorted(topo.edges)
            keep = rng.random(len(edges)) < scheduler.edge_prob
            return topo.with_edges(e for e, kept in zip(edges, keep, strict=True) if kept), None
