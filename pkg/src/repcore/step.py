"""
RepC Step

One round of the RepC iterative scheme. Every updating agent computes fresh reputations for its neighborhood from the broadcast states x^(k), then moves to the reputation-weighted average of the states it hears. Synchronous and asynchronous rounds share one code path, so a fully active asynchronous round is bitwise identical to a synchronous one.

Neighbors that leave N_i drop out of every sum, but the reputation i last gave them is kept in `NetworkState.memory` and restored if they return. Only a neighbor i has never been linked to starts at 1.

Functions:
    state_update: Reputation-weighted average of a neighborhood's states.
    sync_step: Every agent updates.
    async_step: Only the active agents update, using only active neighbors.
    step: Dispatch to `sync_step` or `async_step`.
"""

# External Libraries
from collections.abc import Iterable, Mapping, Sequence

import numpy as np

# Local Libraries
from src.netcore.topology import Topology
from src.utilities.errors import ArgumentError

from .reputation import OperationCounter, RepcParams, reputation_row
from .state import NetworkState


### --- FUNCTIONS --- ###
def state_update(
    i: int,
    x: np.ndarray,
    c_row: Mapping[int, float],
    neighborhood: Sequence[int],
    include_self: bool = True,
    counter: OperationCounter | None = None,
) -> float:
    """
    Weighted average `Σ c_ij x_j / Σ c_ij` over N_i. With `include_self` the agent's own state enters with its weight (1); without it the sum runs over the proper neighbors only, and an agent with none keeps its state.

    Args:
        i (int): The updating agent.
        x (np.ndarray): Broadcast states of all agents.
        c_row (Mapping[int, float]): Weight per member of N_i.
        neighborhood (Sequence[int]): N_i, containing i.
        include_self (bool): Whether i's own state is part of the average.
        counter (OperationCounter, optional): Tally to update.

    Returns:
        float: The new state, within the min and max of the averaged states.
    """
    members = [j for j in neighborhood if include_self or j != i]
    if not members:
        return float(x[i])

    weights = np.array([c_row[j] for j in members], dtype=float)
    values = x[members]
    total = np.sort(weights).sum()
    if not total > 0:
        msg = f"Agent {i} has zero total reputation weight"
        raise ArgumentError(msg)
    average = np.sort(weights * values).sum() / total
    if counter is not None:
        counter.linear += 2 * len(members)
    return float(np.clip(average, values.min(), values.max()))


def _membership(memory: np.ndarray, topo: Topology) -> np.ndarray:
    """
    Reputation matrix restricted to the current neighborhoods: entries outside N_i become 0, returning neighbors get their remembered value and first-seen neighbors start at 1.
    """
    mask = np.zeros_like(memory, dtype=bool)
    for i in range(topo.n):
        mask[i, list(topo.neighbors(i))] = True
    return np.where(mask, np.where(memory > 0, memory, 1.0), 0.0)


def _step(
    state: NetworkState,
    topo: Topology,
    params: RepcParams,
    active: frozenset[int] | None,
    counter: OperationCounter | None,
) -> NetworkState:
    if topo.n != state.n:
        msg = f"Topology has {topo.n} agents but the state has {state.n}"
        raise ArgumentError(msg)

    k, x = state.k, state.x
    c = _membership(state.memory, topo)
    memory = state.memory.copy()
    floored = state.floored.copy()
    new_x = x.copy()

    for i in range(state.n):
        if active is not None and i not in active:
            continue
        proper = [j for j in topo.proper_neighbors(i) if active is None or j in active]
        if not proper:
            continue
        neighborhood = sorted((*proper, i))
        row = reputation_row(i, x, neighborhood, k, params, counter)

        if params.fresh_reputation_in_update:
            weights = row.confident
        else:
            weights = {j: float(c[i, j]) for j in neighborhood}
        new_x[i] = state_update(
            i, x, weights, neighborhood, include_self=params.include_self_in_update, counter=counter
        )

        for j in neighborhood:
            c[i, j] = memory[i, j] = row.confident[j]
            floored[i, j] = j in row.floored
        if counter is not None:
            counter.agent_updates += 1

    return NetworkState(k=k + 1, x=new_x, c=c, floored=floored, memory=memory)


def sync_step(
    state: NetworkState,
    topo: Topology,
    params: RepcParams,
    counter: OperationCounter | None = None,
) -> NetworkState:
    """
    Synchronous round: every agent computes c^(k+1) from x^(k) and updates its state. The input state is not modified.

    Args:
        state (NetworkState): State at round k.
        topo (Topology): Network for this round.
        params (RepcParams): Protocol parameters.
        counter (OperationCounter, optional): Tally to update.

    Returns:
        NetworkState: State at round k + 1.
    """
    return _step(state, topo, params, None, counter)


def async_step(
    state: NetworkState,
    topo: Topology,
    active: Iterable[int],
    params: RepcParams,
    counter: OperationCounter | None = None,
) -> NetworkState:
    """
    Asynchronous round: only agents in `active` update, and each uses only its active proper neighbors. Inactive agents, and active agents with no active neighbor, keep their state and reputation row.

    Args:
        state (NetworkState): State at round k.
        topo (Topology): Network for this round.
        active (Iterable[int]): The agents communicating this round, nonempty.
        params (RepcParams): Protocol parameters.
        counter (OperationCounter, optional): Tally to update.

    Returns:
        NetworkState: State at round k + 1.

    Raises:
        ArgumentError: If `active` is empty or names an unknown agent.
    """
    active_set = frozenset(int(a) for a in active)
    if not active_set:
        msg = "The active set of an asynchronous round must be nonempty"
        raise ArgumentError(msg)
    if unknown := sorted(a for a in active_set if not 0 <= a < state.n):
        msg = f"Active agents {unknown} out of range 0..{state.n - 1}"
        raise ArgumentError(msg)
    return _step(state, topo, params, active_set, counter)


def step(
    state: NetworkState,
    topo: Topology,
    params: RepcParams,
    active: Iterable[int] | None = None,
    counter: OperationCounter | None = None,
) -> NetworkState:
    """Synchronous round when `active` is None, asynchronous otherwise."""
    if active is None:
        return sync_step(state, topo, params, counter)
    return async_step(state, topo, active, params, counter)
