"""
Assumption Validation

Checks a (possibly time-varying) network against the structural assumptions the convergence guarantees rely on: enough neighbors per regular agent, attacked agents in the minority of every regular neighborhood, and a connected network of regular agents. Reports only annotate a run; they never block it.

Classes:
    AssumptionReport: Structural checks for one topology and attack set.

Functions:
    check_topology: Build the report for a single topology.
    validate_assumptions: One report per schedule piece, logging a warning for every violation.
"""

# External Libraries
import logging
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

# Local Libraries
from src.utilities.errors import ArgumentError

from .schedule import TopologySchedule
from .topology import Topology

logger = logging.getLogger(__name__)

### --- TYPE ALIASES --- ###
type RoundRange = tuple[int, int | None]


### --- CLASSES --- ###
@dataclass(frozen=True)
class AssumptionReport:
    """
    Structural checks for one topology.

    Attributes:
        min_neighborhood_size (int): Minimum |N_i| (self included) over regular agents.
        min_proper_neighborhood_size (int): Minimum |N_i| without self over regular agents.
        majority_ok (bool): Every regular v has |N_v ∩ A| < |N_v| / 2.
        regular_subgraph_connected (bool): G∖A is weakly connected.
        regular_subgraph_strongly_connected (bool): G∖A is strongly connected.
        rate_bound_applicable (bool): min |N_i| > 3, so the exponential-rate bound holds.
        neighborhood_size_ok (bool): min |N_i| > 2 counting self.
        proper_neighborhood_size_ok (bool): min |N_i| > 2 not counting self.
        violators (tuple[int, ...]): Regular agents breaking the majority condition.
    """

    min_neighborhood_size: int
    min_proper_neighborhood_size: int
    majority_ok: bool
    regular_subgraph_connected: bool
    regular_subgraph_strongly_connected: bool
    rate_bound_applicable: bool
    neighborhood_size_ok: bool
    proper_neighborhood_size_ok: bool
    violators: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        """All assumptions needed by the convergence guarantees hold."""
        return self.majority_ok and self.regular_subgraph_connected and self.neighborhood_size_ok


### --- FUNCTIONS --- ###
def check_topology(topo: Topology, attacked: Iterable[int]) -> AssumptionReport:
    """
    Build the assumption report for a single topology.

    Args:
        topo (Topology): The network.
        attacked (Iterable[int]): Ids of the attacked agents.

    Returns:
        AssumptionReport: The structural checks.
    """
    attacked_set = frozenset(attacked)
    for a in attacked_set:
        if not 0 <= a < topo.n:
            msg = f"Attacked agent {a} out of range 0..{topo.n - 1}"
            raise ArgumentError(msg)

    regular = [v for v in range(topo.n) if v not in attacked_set]
    if not regular:
        return AssumptionReport(0, 0, False, False, False, False, False, False)

    sizes = {v: len(topo.neighbors(v)) for v in regular}
    violators = tuple(
        v
        for v in regular
        if len(attacked_set.intersection(topo.neighbors(v))) >= sizes[v] / 2
    )

    # G∖A keeps only edges with both endpoints regular
    regular_graph = topo.to_networkx(nodes=regular)
    min_size = min(sizes.values())
    return AssumptionReport(
        min_neighborhood_size=min_size,
        min_proper_neighborhood_size=min_size - 1,
        majority_ok=not violators,
        regular_subgraph_connected=nx.is_weakly_connected(regular_graph),
        regular_subgraph_strongly_connected=nx.is_strongly_connected(regular_graph),
        rate_bound_applicable=min_size > 3,
        neighborhood_size_ok=min_size > 2,
        proper_neighborhood_size_ok=min_size - 1 > 2,
        violators=violators,
    )


def validate_assumptions(
    schedule: TopologySchedule | Topology,
    attacked: Iterable[int],
) -> list[tuple[RoundRange, AssumptionReport]]:
    """
    Check every schedule piece against the structural assumptions.

    Args:
        schedule (TopologySchedule | Topology): The network, static or time-varying.
        attacked (Iterable[int]): Ids of the attacked agents.

    Returns:
        list[tuple[RoundRange, AssumptionReport]]: One `((start, end), report)` per piece; `end` is None for the last piece.
    """
    if isinstance(schedule, Topology):
        schedule = TopologySchedule.static(schedule)
    attacked_set = frozenset(attacked)

    reports = []
    for round_range, piece in zip(schedule.ranges(), schedule.pieces, strict=True):
        report = check_topology(piece.topology, attacked_set)
        if not report.majority_ok:
            logger.warning(
                "Rounds %s: attacked agents are not a minority for regular agents %s",
                round_range,
                list(report.violators),
            )
        if not report.regular_subgraph_connected:
            logger.warning("Rounds %s: the regular-agent subgraph is disconnected", round_range)
        if not report.neighborhood_size_ok:
            logger.warning(
                "Rounds %s: minimum neighborhood size %d is too small for convergence",
                round_range,
                report.min_neighborhood_size,
            )
        reports.append((round_range, report))
    return reports
