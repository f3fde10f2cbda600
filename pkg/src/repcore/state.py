"""
Network State

Snapshot of every agent's state and reputation row, plus the affine bijection that maps raw initial states into [0, 1].

Classes:
    AffineMap: The (min, max) record used to normalize and denormalize states.
    NetworkState: Immutable snapshot at round k.

Functions:
    normalize_initial: Map raw initial states into [0, 1].
    denormalize: Map normalized states back to raw units.
    initial_state: Round-0 state with every neighbor at reputation 1.
"""

# External Libraries
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

# Local Libraries
from src.netcore.topology import Topology
from src.utilities.errors import ArgumentError


### --- CLASSES --- ###
@dataclass(frozen=True)
class AffineMap:
    """
    Affine bijection `x -> (x - low) / (high - low)` between raw and normalized units. A degenerate map (all initial states equal) sends everything to 0 and back to `low`.
    """

    low: float = 0.0
    high: float = 1.0

    @property
    def spread(self) -> float:
        """Width of the raw interval."""
        return self.high - self.low

    @property
    def degenerate(self) -> bool:
        """True when every initial state was equal."""
        return self.spread <= 0.0

    def forward(self, values: np.ndarray | float) -> np.ndarray | float:
        """Raw to normalized units."""
        if self.degenerate:
            return np.zeros_like(values, dtype=float) if np.ndim(values) else 0.0
        return (values - self.low) / self.spread

    def inverse(self, values: np.ndarray | float) -> np.ndarray | float:
        """Normalized to raw units."""
        if self.degenerate:
            return np.full_like(values, self.low, dtype=float) if np.ndim(values) else self.low
        return self.low + values * self.spread

    def scale(self, width: float) -> float:
        """Convert a raw-unit width (e.g. a standard deviation) to normalized units."""
        return 0.0 if self.degenerate else width / self.spread


@dataclass(frozen=True)
class NetworkState:
    """
    Immutable snapshot of the network at round k. Arrays are read-only; steps build new ones.

    Attributes:
        k (int): Round counter.
        x (np.ndarray): Agent states, shape `(n,)`.
        c (np.ndarray): Reputation matrix, `c[i, j]` is the reputation i assigns to j; shape `(n, n)`.
        floored (np.ndarray): Boolean mask of reputations that took the ε^(k+1) floor when last computed.
        held (frozenset[int]): Agents that could not update in the step producing this state.
        memory (np.ndarray, optional): Last reputation i assigned to j, kept after j leaves N_i; 0 for pairs never linked. Defaults to `c`.
    """

    k: int
    x: np.ndarray
    c: np.ndarray
    floored: np.ndarray
    held: frozenset[int] = field(default_factory=frozenset)
    memory: np.ndarray | None = None

    def __post_init__(self) -> None:
        x = np.array(self.x, dtype=float)
        c = np.array(self.c, dtype=float)
        floored = np.array(self.floored, dtype=bool)
        memory = c.copy() if self.memory is None else np.array(self.memory, dtype=float)
        n = x.shape[0]
        if c.shape != (n, n) or floored.shape != (n, n) or memory.shape != (n, n):
            msg = f"Reputation arrays must have shape ({n}, {n}), got {c.shape}, {floored.shape} and {memory.shape}"
            raise ArgumentError(msg)
        for arr in (x, c, floored, memory):
            arr.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "floored", floored)
        object.__setattr__(self, "memory", memory)
        object.__setattr__(self, "held", frozenset(self.held))

    @property
    def n(self) -> int:
        """Number of agents."""
        return self.x.shape[0]

    def with_x(self, x: np.ndarray) -> "NetworkState":
        """Same round, reputations and flags with different states."""
        return NetworkState(
            k=self.k, x=x, c=self.c, floored=self.floored, held=self.held, memory=self.memory
        )


### --- FUNCTIONS --- ###
def normalize_initial(x0: Sequence[float] | np.ndarray) -> tuple[np.ndarray, AffineMap]:
    """
    Map raw initial states into [0, 1] with `(x - min) / (max - min)`.

    Args:
        x0 (Sequence[float] | np.ndarray): Raw initial states, nonempty.

    Returns:
        tuple[np.ndarray, AffineMap]: Normalized states and the map to undo them. If every state is equal the output is all zeros and the map is flagged degenerate.
    """
    values = np.asarray(x0, dtype=float)
    if values.ndim != 1 or values.size == 0:
        msg = "Initial states must be a nonempty vector"
        raise ArgumentError(msg)
    if not np.all(np.isfinite(values)):
        msg = "Initial states must be finite"
        raise ArgumentError(msg)
    affine = AffineMap(low=float(values.min()), high=float(values.max()))
    return np.asarray(affine.forward(values), dtype=float), affine


def denormalize(x: np.ndarray | Iterable[float], affine: AffineMap) -> np.ndarray:
    """Map normalized states back to raw units."""
    return np.asarray(affine.inverse(np.asarray(x, dtype=float)), dtype=float)


def initial_state(topo: Topology, x: np.ndarray | Sequence[float]) -> NetworkState:
    """
    Round-0 state: `c[i, i] = 1`, `c[i, j] = 1` for every proper neighbor j, and 0 elsewhere.

    Args:
        topo (Topology): The network at round 0.
        x (np.ndarray | Sequence[float]): Normalized initial states.

    Returns:
        NetworkState: The state at k = 0.
    """
    values = np.asarray(x, dtype=float)
    if values.shape != (topo.n,):
        msg = f"Expected {topo.n} initial states, got {values.shape[0] if values.ndim else 0}"
        raise ArgumentError(msg)
    c = np.zeros((topo.n, topo.n))
    for i in range(topo.n):
        c[i, list(topo.neighbors(i))] = 1.0
    return NetworkState(k=0, x=values, c=c, floored=np.zeros((topo.n, topo.n), dtype=bool))
