"""
Metrics

Scores an attacked run against its no-attack reference: how far the regular agents' consensus moved, how well they agree, and how accurately the attackers were flagged.

Classes:
    Metrics: Scores of one attacked run.

Functions:
    compute_metrics: Score a run against its reference and the ground-truth attack.
"""

# External Libraries
import logging
from dataclasses import asdict, dataclass

# Local Libraries
from src.repcore.adversary import AttackSpec

from .trace import RunResult

logger = logging.getLogger(__name__)


### --- CLASSES --- ###
@dataclass(frozen=True)
class Metrics:
    """
    Scores of one run.

    Attributes:
        consensus (float): Mean final state of the regular agents, normalized.
        reference_consensus (float): Same quantity for the no-attack reference.
        consensus_error (float): Absolute difference of the two, normalized units.
        consensus_error_raw (float): The same difference in raw units.
        false_positives (int): (reader, regular neighbor) pairs wrongly flagged.
        false_negatives (int): (reader, attacked neighbor) pairs not flagged.
        agreement_spread (float): Max minus min of regular final states, normalized.
        converged (bool): The attacked run stopped on the δ rule.
        valid (bool): The reference run converged.
    """

    consensus: float
    reference_consensus: float
    consensus_error: float
    consensus_error_raw: float
    false_positives: int
    false_negatives: int
    agreement_spread: float
    converged: bool
    valid: bool

    def to_dict(self) -> dict:
        """Plain dictionary, e.g. for JSON summaries and DataFrame rows."""
        return asdict(self)


### --- FUNCTIONS --- ###
def compute_metrics(
    result: RunResult,
    reference: RunResult,
    ground_truth: AttackSpec,
) -> Metrics:
    """
    Score an attacked run. Consensus is the mean of the regular agents' final states in both runs, attackers excluded.

    Args:
        result (RunResult): The attacked run.
        reference (RunResult): The same config without attack.
        ground_truth (AttackSpec): The attack actually applied.

    Returns:
        Metrics: The scores; `valid` is False when the reference did not converge.
    """
    attacked = ground_truth.attacked
    regular = [v for v in range(result.final_state.n) if v not in attacked]
    final = result.final_state.x[regular]
    consensus = float(final.mean())
    reference_consensus = float(reference.final_state.x[regular].mean())
    error = abs(consensus - reference_consensus)

    # Detection is scored against the network the run ended on
    topo = result.config.schedule.lookup(max(result.rounds_executed - 1, 0))
    false_positives = 0
    false_negatives = 0
    for i in regular:
        flagged = result.detected.get(i, set())
        false_positives += len(flagged - attacked)
        false_negatives += len(attacked.intersection(topo.proper_neighbors(i)) - flagged)

    if not reference.converged:
        logger.warning("Reference run %s did not converge; metrics marked invalid", reference.config.name)
    return Metrics(
        consensus=consensus,
        reference_consensus=reference_consensus,
        consensus_error=error,
        consensus_error_raw=error * result.affine.spread,
        false_positives=false_positives,
        false_negatives=false_negatives,
        agreement_spread=float(final.max() - final.min()),
        converged=result.converged,
        valid=reference.converged,
    )
