"""
RepC Core Package

This package contains the RepC protocol itself (reputation stages, state update and the synchronous and asynchronous steps), the attacker strategies that act on it, and the trimmed-mean baseline it is compared against.
"""

from .adversary import (
    AttackSpec,
    Constant,
    Converging,
    GaussianNoise,
    Replay,
    Strategy,
    UniformNoise,
    inject,
)
from .baseline import TrimParams, trimmed_mean, trimmed_step
from .reputation import (
    OperationCounter,
    RepcParams,
    ReputationRow,
    apply_confidence,
    confidence_floor,
    fmin,
    normalize_reputation,
    raw_reputation,
    reputation_row,
)
from .state import AffineMap, NetworkState, denormalize, initial_state, normalize_initial
from .step import async_step, state_update, step, sync_step

__all__ = [
    "AffineMap",
    "AttackSpec",
    "Constant",
    "Converging",
    "GaussianNoise",
    "NetworkState",
    "OperationCounter",
    "RepcParams",
    "Replay",
    "ReputationRow",
    "Strategy",
    "TrimParams",
    "UniformNoise",
    "apply_confidence",
    "async_step",
    "confidence_floor",
    "denormalize",
    "fmin",
    "initial_state",
    "inject",
    "normalize_initial",
    "normalize_reputation",
    "raw_reputation",
    "reputation_row",
    "state_update",
    "step",
    "sync_step",
    "trimmed_mean",
    "trimmed_step",
]
