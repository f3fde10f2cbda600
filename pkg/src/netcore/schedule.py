"""
Topology Schedule

Piecewise-constant, time-varying networks. Each piece is valid from its starting round until the next piece begins.

Classes:
    SchedulePiece: One (valid-from round, Topology) pair.
    TopologySchedule: Ordered pieces sharing the same agent count.

Functions:
    load_schedule: Build a schedule from a `{"pieces": [{"from": k, "graph": {...}}]}` document.
    schedule_to_dict: Serialize a schedule to the same document shape.
"""

# External Libraries
from bisect import bisect_right
from collections.abc import Mapping
from dataclasses import dataclass

# Local Libraries
from src.utilities.errors import ArgumentError

from .topology import Topology, load_topology, topology_to_dict


### --- CLASSES --- ###
@dataclass(frozen=True)
class SchedulePiece:
    """A topology together with the first round it is valid for."""

    start: int
    topology: Topology


@dataclass(frozen=True)
class TopologySchedule:
    """
    Ordered list of schedule pieces. Starting rounds strictly increase from 0, and every piece has the same number of agents.
    """

    pieces: tuple[SchedulePiece, ...]

    def __post_init__(self) -> None:
        pieces = tuple(self.pieces)
        if not pieces:
            msg = "A topology schedule needs at least one piece"
            raise ArgumentError(msg)
        if pieces[0].start != 0:
            msg = f"The first schedule piece must start at round 0, got {pieces[0].start}"
            raise ArgumentError(msg)
        for prev, cur in zip(pieces, pieces[1:], strict=False):
            if cur.start <= prev.start:
                msg = f"Schedule starts must strictly increase, got {prev.start} then {cur.start}"
                raise ArgumentError(msg)
        sizes = {piece.topology.n for piece in pieces}
        if len(sizes) != 1:
            msg = f"All schedule pieces must share the same agent count, got {sorted(sizes)}"
            raise ArgumentError(msg)
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def static(cls, topology: Topology) -> "TopologySchedule":
        """A schedule with a single piece valid for every round."""
        return cls(pieces=(SchedulePiece(0, topology),))

    @property
    def n(self) -> int:
        """Number of agents shared by all pieces."""
        return self.pieces[0].topology.n

    @property
    def starts(self) -> tuple[int, ...]:
        """Starting round of every piece."""
        return tuple(piece.start for piece in self.pieces)

    def lookup(self, k: int) -> Topology:
        """
        Topology of the last piece whose starting round is at most `k`.

        Args:
            k (int): Round index, nonnegative.

        Returns:
            Topology: The network in effect at round `k`.
        """
        if k < 0:
            msg = f"Round index must be nonnegative, got {k}"
            raise ArgumentError(msg)
        return self.pieces[bisect_right(self.starts, k) - 1].topology

    def ranges(self) -> list[tuple[int, int | None]]:
        """Half-open round range `[start, end)` of each piece; the last end is None."""
        ends: list[int | None] = [*self.starts[1:], None]
        return list(zip(self.starts, ends, strict=True))


### --- FUNCTIONS --- ###
def load_schedule(doc: Mapping) -> TopologySchedule:
    """
    Build a schedule from a `{"pieces": [{"from": k, "graph": {...}}]}` document.

    Raises:
        ArgumentError: If the document is malformed or the pieces are inconsistent.
    """
    try:
        raw_pieces = list(doc["pieces"])
        pieces = tuple(
            SchedulePiece(int(piece["from"]), load_topology(piece["graph"]))
            for piece in raw_pieces
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ArgumentError):
            raise
        msg = f"Malformed schedule document: {exc}"
        raise ArgumentError(msg) from exc
    return TopologySchedule(pieces=pieces)


def schedule_to_dict(schedule: TopologySchedule) -> dict:
    """Serialize a schedule to the `{"pieces": [...]}` document shape."""
    return {
        "pieces": [
            {"from": piece.start, "graph": topology_to_dict(piece.topology)}
            for piece in schedule.pieces
        ]
    }
