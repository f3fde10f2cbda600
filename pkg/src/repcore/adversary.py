"""
Adversary

Attacker strategies that overwrite the broadcast state of compromised agents. An attacker shares one value per round with all of its readers, cannot touch the topology and cannot act on round 0.

Classes:
    Constant: Shares a fixed value.
    Converging: Shares a geometric sequence converging to a target.
    GaussianNoise: Shares normal samples with mean mu and deviation sigma.
    UniformNoise: Shares uniform samples around a fixed mean.
    Replay: Shares a recorded sequence, holding its last value afterwards.
    AttackSpec: Which agents are attacked, how, and from which round.

Functions:
    inject: Overwrite the attacked agents' states for round k.
"""

# External Libraries
from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

# Local Libraries
from src.utilities.common import derive_rng
from src.utilities.errors import ArgumentError, ConfigError

from .state import AffineMap, NetworkState

### --- CONSTANTS --- ###
ATTACK_STREAM = 2

### --- TYPE ALIASES --- ###
type Units = Literal["normalized", "raw"]


### --- CLASSES --- ###
@dataclass(frozen=True)
class Constant:
    """Shares `value` every round."""

    value: float
    kind: Literal["constant"] = "constant"

    def value_at(self, k: int, origin: float, rng: np.random.Generator) -> float:
        return self.value

    def to_normalized(self, affine: AffineMap) -> "Constant":
        return replace(self, value=float(affine.forward(self.value)))


@dataclass(frozen=True)
class Converging:
    """
    Shares `target + (origin - target) * rate**k`. A missing origin is bound to the agent's initial state before the run.
    """

    target: float
    rate: float
    origin: float | None = None
    kind: Literal["converging"] = "converging"

    def __post_init__(self) -> None:
        if not 0.0 <= self.rate < 1.0:
            msg = f"Converging rate must lie in [0, 1), got {self.rate}"
            raise ArgumentError(msg)

    def value_at(self, k: int, origin: float, rng: np.random.Generator) -> float:
        start = origin if self.origin is None else self.origin
        return self.target + (start - self.target) * self.rate**k

    def to_normalized(self, affine: AffineMap) -> "Converging":
        origin = None if self.origin is None else float(affine.forward(self.origin))
        return replace(self, target=float(affine.forward(self.target)), origin=origin)


@dataclass(frozen=True)
class GaussianNoise:
    """Shares a fresh normal sample with mean `mu` and standard deviation `sigma` every round."""

    mu: float
    sigma: float
    kind: Literal["gaussian"] = "gaussian"

    def __post_init__(self) -> None:
        if self.sigma < 0:
            msg = f"sigma must be nonnegative, got {self.sigma}"
            raise ArgumentError(msg)

    def value_at(self, k: int, origin: float, rng: np.random.Generator) -> float:
        return float(rng.normal(self.mu, self.sigma))

    def to_normalized(self, affine: AffineMap) -> "GaussianNoise":
        return replace(self, mu=float(affine.forward(self.mu)), sigma=affine.scale(self.sigma))


@dataclass(frozen=True)
class UniformNoise:
    """Shares a fresh uniform sample from `[mean - half_width, mean + half_width]` every round."""

    mean: float
    half_width: float
    kind: Literal["uniform"] = "uniform"

    def __post_init__(self) -> None:
        if self.half_width < 0:
            msg = f"half_width must be nonnegative, got {self.half_width}"
            raise ArgumentError(msg)

    def value_at(self, k: int, origin: float, rng: np.random.Generator) -> float:
        return float(rng.uniform(self.mean - self.half_width, self.mean + self.half_width))

    def to_normalized(self, affine: AffineMap) -> "UniformNoise":
        return replace(
            self,
            mean=float(affine.forward(self.mean)),
            half_width=affine.scale(self.half_width),
        )


@dataclass(frozen=True)
class Replay:
    """Shares `values[k - start_round]`, counted from the attack's start round and holding the last value once the recording runs out."""

    values: tuple[float, ...]
    kind: Literal["replay"] = "replay"

    def __post_init__(self) -> None:
        if not self.values:
            msg = "A replay strategy needs at least one value"
            raise ArgumentError(msg)
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def value_at(self, elapsed: int, origin: float, rng: np.random.Generator) -> float:
        """The value `elapsed` rounds after the attack started."""
        return self.values[min(max(elapsed, 0), len(self.values) - 1)]

    def to_normalized(self, affine: AffineMap) -> "Replay":
        return replace(self, values=tuple(float(affine.forward(v)) for v in self.values))


type Strategy = Constant | Converging | GaussianNoise | UniformNoise | Replay


@dataclass(frozen=True)
class AttackSpec:
    """
    The attacked set A and the strategy of every attacked agent.

    Attributes:
        strategies (Mapping[int, Strategy]): Strategy per attacked agent id.
        start_round (int): First round an attack may act; at least 1.
        units (Units): Whether strategy parameters are in normalized or raw units.
        clamp (bool): Clamp injected values to [0, 1].
        origins (Mapping[int, float]): Normalized initial state per attacked agent, bound by `bind`.
    """

    strategies: Mapping[int, Strategy] = field(default_factory=dict)
    start_round: int = 1
    units: Units = "normalized"
    clamp: bool = True
    origins: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.start_round < 1:
            msg = f"start_round must be at least 1 (round 0 cannot be attacked), got {self.start_round}"
            raise ConfigError(msg)
        if self.units not in ("normalized", "raw"):
            msg = f"units must be 'normalized' or 'raw', got {self.units!r}"
            raise ConfigError(msg)
        object.__setattr__(
            self, "strategies", dict(sorted((int(a), s) for a, s in self.strategies.items()))
        )

    @classmethod
    def none(cls) -> "AttackSpec":
        """An attack specification with no attacked agents."""
        return cls()

    @property
    def attacked(self) -> frozenset[int]:
        """Ids of the attacked agents."""
        return frozenset(self.strategies)

    def check_agents(self, n: int) -> list[str]:
        """Messages for every attacked id outside `0..n-1`."""
        return [
            f"attacked agent {a} out of range 0..{n - 1}"
            for a in self.strategies
            if not 0 <= a < n
        ]

    def bind(self, affine: AffineMap, x_initial: np.ndarray) -> "AttackSpec":
        """
        Convert raw-unit strategies to normalized units and record each attacked agent's initial state as its origin.

        Args:
            affine (AffineMap): The run's normalization.
            x_initial (np.ndarray): Normalized initial states.

        Returns:
            AttackSpec: A normalized-unit copy with origins bound.
        """
        if errors := self.check_agents(len(x_initial)):
            raise ConfigError(errors)
        strategies = self.strategies
        if self.units == "raw":
            strategies = {a: s.to_normalized(affine) for a, s in strategies.items()}
        return replace(
            self,
            strategies=strategies,
            units="normalized",
            origins={a: float(x_initial[a]) for a in strategies},
        )


### --- FUNCTIONS --- ###
def inject(
    spec: AttackSpec,
    state: NetworkState,
    k: int,
    seed: int,
    affine: AffineMap | None = None,
) -> NetworkState:
    """
    Overwrite each attacked agent's broadcast state with its strategy's value for round `k`. Nothing happens before `spec.start_round`. Randomness for agent a at round k comes from its own stream `(seed, 2, a, k)`, so injection is idempotent per round and independent of agent order.

    Args:
        spec (AttackSpec): The attack; raw-unit specs need `affine` (or `bind` first).
        state (NetworkState): State broadcast at round k before the attack.
        k (int): Round index, nonnegative.
        seed (int): Root seed of the run.
        affine (AffineMap, optional): Normalization for raw-unit specs.

    Returns:
        NetworkState: The state actually broadcast at round k.

    Raises:
        ConfigError: If an attacked id is out of range.
        ArgumentError: If `k` is negative or a raw-unit spec comes without `affine`.
    """
    if k < 0:
        msg = f"Round index must be nonnegative, got {k}"
        raise ArgumentError(msg)
    if errors := spec.check_agents(state.n):
        raise ConfigError(errors)
    if spec.units == "raw":
        if affine is None:
            msg = "Raw-unit attacks need the run's affine map"
            raise ArgumentError(msg)
        spec = replace(
            spec,
            strategies={a: s.to_normalized(affine) for a, s in spec.strategies.items()},
            units="normalized",
        )
    if k < spec.start_round or not spec.strategies:
        return state

    x = state.x.copy()
    for agent, strategy in spec.strategies.items():
        origin = spec.origins.get(agent, float(state.x[agent]))
        rng = derive_rng(seed, ATTACK_STREAM, agent, k)
        match strategy:
            case Replay():
                value = strategy.value_at(k - spec.start_round, origin, rng)
            case _:
                value = strategy.value_at(k, origin, rng)
        x[agent] = min(max(value, 0.0), 1.0) if spec.clamp else value
    return state.with_x(x)
