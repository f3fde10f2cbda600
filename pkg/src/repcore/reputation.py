"""
Reputation

The three reputation stages of a RepC round, computed by agent i for its neighborhood N_i:

1. raw reputation: one minus the mean absolute discrepancy of a neighbor's state against the other states i hears,
2. normalization: affine rescale between the fmin anchor and the maximum over proper neighbors,
3. confidence: non-positive normalized values are replaced by the floor ε^(k+1).

Classes:
    RepcParams: Protocol parameters (ε, f and the variant toggles).
    OperationCounter: Tally of the work done by each stage, for complexity measurements.
    ReputationRow: The raw, normalized and confident reputations of one agent.

Functions:
    fmin: The f-th smallest distinct value, saturated strictly below the maximum.
    raw_reputation: Raw reputation of every neighbor.
    normalize_reputation: fmin-normalized reputation of every neighbor.
    confidence_floor: The floor value ε^(k+1) for round k.
    apply_confidence: Replace non-positive normalized reputations by the floor.
    reputation_row: Run all three stages for one agent.
"""

# External Libraries
import sys
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

# Local Libraries
from src.constants import defaults
from src.utilities.errors import ArgumentError

### --- TYPE ALIASES --- ###
type ReputationMap = dict[int, float]


### --- CLASSES --- ###
@dataclass(frozen=True)
class RepcParams:
    """
    Protocol parameters.

    Attributes:
        epsilon (float): Confidence factor ε in (0, 1).
        f (int): fmin order, doubling as the assumed attacker budget.
        include_self_in_discrepancy (bool): Sum discrepancies over N_i instead of N_i without i.
        fresh_reputation_in_update (bool): Weight the state update with the reputations computed this round; otherwise with last round's.
        include_self_in_update (bool): Give the agent's own state weight 1 in the update.
    """

    epsilon: float = defaults.EPSILON
    f: int = defaults.F
    include_self_in_discrepancy: bool = defaults.INCLUDE_SELF_IN_DISCREPANCY
    fresh_reputation_in_update: bool = defaults.FRESH_REPUTATION_IN_UPDATE
    include_self_in_update: bool = defaults.INCLUDE_SELF_IN_UPDATE

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon < 1.0:
            msg = "epsilon must lie in (0,1)"
            raise ArgumentError(msg)
        if self.f < 1:
            msg = f"f must be a positive integer, got {self.f}"
            raise ArgumentError(msg)


@dataclass
class OperationCounter:
    """
    Counts the elementary operations of reputation and state updates. Each stage adds the number of terms it actually processes.

    Attributes:
        discrepancies (int): Pairwise absolute differences computed.
        linear (int): Other per-neighbor operations (anchor search, rescaling, flooring, weighted sums).
        agent_updates (int): Number of per-agent updates.
    """

    discrepancies: int = 0
    linear: int = 0
    agent_updates: int = 0

    @property
    def total(self) -> int:
        """All counted operations."""
        return self.discrepancies + self.linear

    @property
    def per_agent_update(self) -> float:
        """Mean operations per agent update."""
        return self.total / self.agent_updates if self.agent_updates else 0.0


@dataclass(frozen=True)
class ReputationRow:
    """
    Intermediate and final reputations agent `owner` assigns to its neighborhood in one round.

    Attributes:
        owner (int): The agent computing the reputations.
        raw (ReputationMap): Raw reputation per neighbor (self included).
        normalized (ReputationMap): Normalized reputation per neighbor; the owner gets 1.
        confident (ReputationMap): Final reputation per neighbor, all in (0, 1].
        floored (frozenset[int]): Neighbors whose reputation took the ε^(k+1) floor.
    """

    owner: int
    raw: ReputationMap = field(default_factory=dict)
    normalized: ReputationMap = field(default_factory=dict)
    confident: ReputationMap = field(default_factory=dict)
    floored: frozenset[int] = frozenset()


### --- FUNCTIONS --- ###
def fmin(values: Sequence[float], f: int) -> float:
    """
    The f-th smallest element of `values` after discarding repeats, but never the maximum: the walk up the distinct values stops at the largest value strictly below the maximum. If every value is equal, that value is returned.

    Args:
        values (Sequence[float]): Nonempty list of reals.
        f (int): Order, at least 1.

    Returns:
        float: The fmin anchor.

    Raises:
        ArgumentError: If `values` is empty or `f < 1`.
    """
    if len(values) == 0:
        msg = "fmin needs at least one value"
        raise ArgumentError(msg)
    if f < 1:
        msg = f"fmin order must be at least 1, got {f}"
        raise ArgumentError(msg)

    distinct = sorted(set(float(v) for v in values))
    if len(distinct) == 1:
        return distinct[0]
    return distinct[min(f, len(distinct) - 1) - 1]


def raw_reputation(
    i: int,
    x: np.ndarray,
    neighborhood: Sequence[int],
    params: RepcParams,
    counter: OperationCounter | None = None,
) -> ReputationMap:
    """
    Raw reputation c̃_ij = 1 - Σ_v |x_j - x_v| / |N_i| for every j in N_i. The sum runs over N_i without i, or over all of N_i when `params.include_self_in_discrepancy` is set; the denominator is |N_i| either way.

    Args:
        i (int): The agent computing reputations.
        x (np.ndarray): Broadcast states of all agents.
        neighborhood (Sequence[int]): N_i, containing i.
        params (RepcParams): Protocol parameters.
        counter (OperationCounter, optional): Tally to update.

    Returns:
        ReputationMap: Raw reputation per member of N_i.
    """
    members = np.asarray(neighborhood, dtype=int)
    sources = members if params.include_self_in_discrepancy else members[members != i]
    values = x[members]
    gaps = np.abs(values[:, None] - x[sources][None, :])
    # Sorted before summing so the result does not depend on agent labels
    totals = np.sort(gaps, axis=1).sum(axis=1)
    raw = 1.0 - totals / len(members)
    if counter is not None:
        counter.discrepancies += gaps.size
        counter.linear += len(members)
    return {int(j): float(r) for j, r in zip(members, raw, strict=True)}


def normalize_reputation(
    i: int,
    raw: Mapping[int, float],
    params: RepcParams,
    counter: OperationCounter | None = None,
) -> ReputationMap:
    """
    Rescale raw reputations to `(c̃_ij - fmin) / (max - fmin)`, with fmin and max taken over the proper neighbors of i. The owner always gets 1; if max equals fmin every proper neighbor gets 1.

    Args:
        i (int): The agent computing reputations.
        raw (Mapping[int, float]): Raw reputation per member of N_i.
        params (RepcParams): Protocol parameters (uses `f`).
        counter (OperationCounter, optional): Tally to update.

    Returns:
        ReputationMap: Normalized reputation per member of N_i; values may be negative.
    """
    proper = {j: r for j, r in raw.items() if j != i}
    normalized: ReputationMap = {i: 1.0}
    if not proper:
        return normalized

    low = fmin(list(proper.values()), params.f)
    high = max(proper.values())
    for j, r in proper.items():
        normalized[j] = 1.0 if high == low else (r - low) / (high - low)
    if counter is not None:
        counter.linear += 3 * len(proper)
    return dict(sorted(normalized.items()))


def confidence_floor(k: int, epsilon: float) -> float:
    """
    The floor ε^(k+1) used in round k, kept at or above the smallest positive normal double.
    """
    return max(epsilon ** (k + 1), sys.float_info.min)


def apply_confidence(
    normalized: Mapping[int, float],
    k: int,
    params: RepcParams,
    counter: OperationCounter | None = None,
) -> ReputationMap:
    """
    Keep positive normalized reputations and replace the rest by ε^(k+1), where k is the round index of the states the reputations were computed from.

    Args:
        normalized (Mapping[int, float]): Normalized reputation per neighbor.
        k (int): Round index, nonnegative.
        params (RepcParams): Protocol parameters (uses `epsilon`).
        counter (OperationCounter, optional): Tally to update.

    Returns:
        ReputationMap: Reputations in (0, 1].
    """
    if k < 0:
        msg = f"Round index must be nonnegative, got {k}"
        raise ArgumentError(msg)
    floor = confidence_floor(k, params.epsilon)
    if counter is not None:
        counter.linear += len(normalized)
    return {j: (c if c > 0 else floor) for j, c in normalized.items()}


def reputation_row(
    i: int,
    x: np.ndarray,
    neighborhood: Sequence[int],
    k: int,
    params: RepcParams,
    counter: OperationCounter | None = None,
) -> ReputationRow:
    """
    Run the raw, normalization and confidence stages for agent i at round k.

    Args:
        i (int): The agent computing reputations.
        x (np.ndarray): Broadcast states of all agents.
        neighborhood (Sequence[int]): N_i, containing i.
        k (int): Round index of `x`.
        params (RepcParams): Protocol parameters.
        counter (OperationCounter, optional): Tally each stage adds its work to.

    Returns:
        ReputationRow: All three stages plus the set of floored neighbors.
    """
    raw = raw_reputation(i, x, neighborhood, params, counter)
    normalized = normalize_reputation(i, raw, params, counter)
    confident = apply_confidence(normalized, k, params, counter)
    return ReputationRow(
        owner=i,
        raw=raw,
        normalized=normalized,
        confident=confident,
        floored=frozenset(j for j, c in normalized.items() if c <= 0),
    )
