"""
Detection

Flags attacked neighbors from reputation traces alone. Agent i flags neighbor j when the reputation it assigns j took the ε^(k+1) floor in each of the last M attackable rounds (round 0 excluded) and j still disagrees with i in the final round. Regular neighbors that are merely slow sit on the floor only while they disagree; once the regular agents agree they stop being flagged.

Classes:
    Detection: Flags per agent plus a low-confidence marker.

Functions:
    detect_attacked: Compute the flags from a trace.
"""

# External Libraries
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

# Local Libraries
from src.utilities.errors import ArgumentError

from .config import DetectionParams
from .trace import RoundTrace


### --- CLASSES --- ###
@dataclass(frozen=True)
class Detection:
    """
    Attacker flags.

    Attributes:
        flags (dict[int, set[int]]): Neighbors each agent flags as attacked.
        low_confidence (bool): Fewer rounds than the horizon were available.
    """

    flags: dict[int, set[int]] = field(default_factory=dict)
    low_confidence: bool = False


### --- FUNCTIONS --- ###
def detect_attacked(
    trace: Sequence[RoundTrace],
    params: DetectionParams | None = None,
) -> Detection:
    """
    Flag every neighbor whose reputation sat on the floor for the final `params.horizon` rounds and whose final broadcast state differs from the reader's by more than `params.state_tol`.

    Args:
        trace (Sequence[RoundTrace]): Round records of a run, nonempty.
        params (DetectionParams, optional): Horizon and tolerance.

    Returns:
        Detection: Flags for every agent (possibly empty sets).

    Raises:
        ArgumentError: If the trace is empty.
    """
    if not trace:
        msg = "Cannot detect attackers from an empty trace"
        raise ArgumentError(msg)
    params = params or DetectionParams()

    # Round 0 cannot be attacked, so it only counts when nothing else is available
    evidence = [entry for entry in trace if entry.k > 0] or list(trace)
    window = evidence[-params.horizon :]
    sustained = np.logical_and.reduce([entry.floored for entry in window])
    final_x = trace[-1].x
    disagree = np.abs(final_x[None, :] - final_x[:, None]) > params.state_tol
    flagged = sustained & disagree

    n = final_x.shape[0]
    flags = {i: {int(j) for j in np.flatnonzero(flagged[i]) if j != i} for i in range(n)}
    return Detection(flags=flags, low_confidence=len(window) < params.horizon)
