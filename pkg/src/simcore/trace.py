"""
Trace

Per-round records of a simulation and the result of a whole run.

Classes:
    StopReason: Why a run ended.
    RoundTrace: What was broadcast in round k and what it produced.
    RunResult: Everything a run returns.
"""

# External Libraries
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np

# Local Libraries
from src.repcore.state import AffineMap, NetworkState

if TYPE_CHECKING:
    from .config import SimConfig


### --- CLASSES --- ###
class StopReason(StrEnum):
    """Why a run ended."""

    DELTA_CONVERGED = "delta_converged"
    ROUND_CAP = "round_cap"


@dataclass(frozen=True)
class RoundTrace:
    """
    Snapshot of round k.

    Attributes:
        k (int): Round index.
        x (np.ndarray): States broadcast in round k (after attack injection), normalized.
        c (np.ndarray): Reputation matrix computed in round k, i.e. c^(k+1).
        floored (np.ndarray): Which entries of `c` took the ε^(k+1) floor.
        active (frozenset[int] | None): Agents that communicated; None means all.
        held (frozenset[int]): Agents that could not update.
    """

    k: int
    x: np.ndarray
    c: np.ndarray
    floored: np.ndarray
    active: frozenset[int] | None = None
    held: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def from_states(
        cls,
        broadcast: NetworkState,
        produced: NetworkState,
        active: frozenset[int] | None = None,
    ) -> "RoundTrace":
        """Record the state broadcast in a round together with the state it produced."""
        return cls(
            k=broadcast.k,
            x=broadcast.x,
            c=produced.c,
            floored=produced.floored,
            active=active,
            held=produced.held,
        )


@dataclass
class RunResult:
    """
    Outcome of one run.

    Attributes:
        config (SimConfig): The experiment that was run.
        trace (list[RoundTrace]): One entry per executed round.
        final_state (NetworkState): State after the last round, normalized.
        rounds_executed (int): Number of rounds run.
        stop_reason (StopReason): Why the run ended.
        detected (dict[int, set[int]]): Neighbors each agent flags as attacked.
        detection_low_confidence (bool): The trace was shorter than the detection horizon.
        affine (AffineMap): The normalization of the initial states.
        final_x_denormalized (np.ndarray): Final states in raw units.
    """

    config: "SimConfig"
    trace: list[RoundTrace]
    final_state: NetworkState
    rounds_executed: int
    stop_reason: StopReason
    affine: AffineMap
    detected: dict[int, set[int]] = field(default_factory=dict)
    detection_low_confidence: bool = False
    final_x_denormalized: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def converged(self) -> bool:
        """True when the run stopped on the δ rule."""
        return self.stop_reason is StopReason.DELTA_CONVERGED

    @property
    def regular(self) -> list[int]:
        """Ids of the regular agents."""
        attacked = self.config.attack.attacked
        return [v for v in range(self.final_state.n) if v not in attacked]

    @property
    def consensus(self) -> float:
        """Mean final state of the regular agents, normalized."""
        return float(np.mean(self.final_state.x[self.regular]))

    @property
    def consensus_raw(self) -> float:
        """Mean final state of the regular agents, raw units."""
        return float(np.mean(self.final_x_denormalized[self.regular]))

    @property
    def agreement_spread(self) -> float:
        """Max minus min of the regular agents' final states, normalized."""
        final = self.final_state.x[self.regular]
        return float(final.max() - final.min())
