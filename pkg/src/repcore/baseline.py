"""
Trimmed-Mean Baseline

The comparison algorithm: every agent discards the `f_trim` largest and `f_trim` smallest values it hears (its own included) and averages the rest. No reputations are kept.

Classes:
    TrimParams: Number of extremes discarded at each end.

Functions:
    trimmed_mean: Trimmed mean of one pool with stable tie-breaking by agent id.
    trimmed_step: One round of the baseline for every agent.
"""

# External Libraries
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

# Local Libraries
from src.netcore.topology import Topology
from src.utilities.errors import ArgumentError

from .state import NetworkState


### --- CLASSES --- ###
@dataclass(frozen=True)
class TrimParams:
    """Number of largest and of smallest values discarded, at least 1."""

    f_trim: int = 1

    def __post_init__(self) -> None:
        if self.f_trim < 1:
            msg = f"f_trim must be a positive integer, got {self.f_trim}"
            raise ArgumentError(msg)


### --- FUNCTIONS --- ###
def trimmed_mean(x: np.ndarray, pool: Sequence[int], f_trim: int) -> float:
    """
    Mean of `x[pool]` after removing exactly `f_trim` entries from each end. Equal values are ordered by agent id, so ties drop the lowest ids at the bottom and the highest ids at the top.

    Args:
        x (np.ndarray): States of all agents.
        pool (Sequence[int]): Agent ids whose states are pooled.
        f_trim (int): Entries removed at each end.

    Returns:
        float: The trimmed mean.

    Raises:
        ArgumentError: If the pool has at most `2 * f_trim` members.
    """
    if len(pool) <= 2 * f_trim:
        msg = f"Cannot trim {f_trim} from each end of a pool of {len(pool)}"
        raise ArgumentError(msg)
    ordered = sorted(pool, key=lambda j: (x[j], j))
    kept = ordered[f_trim : len(ordered) - f_trim]
    return float(np.mean(x[kept]))


def trimmed_step(
    state: NetworkState,
    topo: Topology,
    params: TrimParams,
    active: Iterable[int] | None = None,
) -> NetworkState:
    """
    One baseline round. Agents with `|N_i| <= 2 * f_trim` hold their state and are reported in `held`; inactive agents (when `active` is given) hold silently and active agents pool only active neighbors.

    Args:
        state (NetworkState): State at round k.
        topo (Topology): Network for this round.
        params (TrimParams): Trim parameters.
        active (Iterable[int], optional): Communicating agents; all when None.

    Returns:
        NetworkState: State at round k + 1 with reputations untouched.
    """
    active_set = None if active is None else frozenset(active)
    x = state.x
    new_x = x.copy()
    held = set()
    for i in range(state.n):
        if active_set is not None and i not in active_set:
            continue
        pool = [j for j in topo.neighbors(i) if active_set is None or j in active_set]
        if len(pool) <= 2 * params.f_trim:
            held.add(i)
            continue
        new_x[i] = trimmed_mean(x, pool, params.f_trim)
    return NetworkState(
        k=state.k + 1, x=new_x, c=state.c, floored=state.floored, held=held, memory=state.memory
    )
