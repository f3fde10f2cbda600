"""
Emitters

Writes run artifacts: the state and reputation traces as CSV, a static SVG plot of the states, and JSON summaries. CSV floats carry 17 significant digits so reading a trace back reproduces it exactly, and reruns with the same seed produce byte-identical files.

Functions:
    trace_frames: The state and reputation traces as DataFrames.
    emit_trace: Write `states.csv` and `reputations.csv`.
    read_trace: Read an emitted trace back into RoundTrace records.
    plot_series: Raw-unit state series per agent, as plotted.
    emit_plot: Write the SVG convergence plot.
    emit_metrics: Write a JSON summary.
"""

# External Libraries
import json
from pathlib import Path

import numpy as np
import pandas as pd

# Local Libraries
from src.constants.sources import PLOT_FILE, REPUTATIONS_FILE, STATES_FILE
from src.simcore.trace import RoundTrace, RunResult
from src.utilities.errors import ArgumentError

### --- CONSTANTS --- ###
FLOAT_FORMAT = "%.17g"
SVG_HASH_SALT = "repc"


### --- FUNCTIONS --- ###
def trace_frames(trace: list[RoundTrace]) -> tuple[pd.DataFrame, pd.DataFrame]:
    """
    The trace as two long-format DataFrames: states `k,agent,x` and nonzero reputations `k,agent,neighbor,c`.
    """
    state_rows = [
        (entry.k, agent, value) for entry in trace for agent, value in enumerate(entry.x.tolist())
    ]
    reputation_rows = [
        (entry.k, int(i), int(j), float(entry.c[i, j]))
        for entry in trace
        for i, j in zip(*np.nonzero(entry.c), strict=True)
    ]
    states = pd.DataFrame(state_rows, columns=["k", "agent", "x"])
    reputations = pd.DataFrame(reputation_rows, columns=["k", "agent", "neighbor", "c"])
    return states, reputations


def emit_trace(result: RunResult, out_dir: str | Path) -> tuple[Path, Path]:
    """
    Write the state and reputation traces of a run.

    Args:
        result (RunResult): A completed run.
        out_dir (str | Path): Directory to write into; created if missing.

    Returns:
        tuple[Path, Path]: Paths of `states.csv` and `reputations.csv`.

    Raises:
        OSError: If the directory cannot be written.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    states, reputations = trace_frames(result.trace)
    states_path = out_dir / STATES_FILE
    reputations_path = out_dir / REPUTATIONS_FILE
    states.to_csv(states_path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    reputations.to_csv(reputations_path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return states_path, reputations_path


def read_trace(out_dir: str | Path) -> list[RoundTrace]:
    """
    Read `states.csv` and `reputations.csv` back into RoundTrace records. Floor flags and active sets are not part of the CSV format and come back empty.
    """
    out_dir = Path(out_dir)
    states = pd.read_csv(out_dir / STATES_FILE, float_precision="round_trip")
    reputations = pd.read_csv(out_dir / REPUTATIONS_FILE, float_precision="round_trip")
    if states.empty:
        return []

    n = int(states["agent"].max()) + 1
    by_round = dict(tuple(reputations.groupby("k")))
    trace = []
    for k, rows in states.groupby("k", sort=True):
        x = np.zeros(n)
        x[rows["agent"].to_numpy()] = rows["x"].to_numpy()
        c = np.zeros((n, n))
        if (reps := by_round.get(k)) is not None:
            c[reps["agent"].to_numpy(), reps["neighbor"].to_numpy()] = reps["c"].to_numpy()
        trace.append(RoundTrace(k=int(k), x=x, c=c, floored=np.zeros((n, n), dtype=bool)))
    return trace


def plot_series(result: RunResult) -> dict[int, np.ndarray]:
    """
    Raw-unit state of every agent per round: the broadcast states of each traced round followed by the final state.
    """
    if not result.trace:
        msg = "Cannot plot an empty trace"
        raise ArgumentError(msg)
    normalized = np.vstack([entry.x for entry in result.trace] + [result.final_state.x])
    raw = result.affine.inverse(normalized)
    return {agent: np.asarray(raw[:, agent]) for agent in range(raw.shape[1])}


def emit_plot(
    result: RunResult,
    path: str | Path,
    reference: float | None = None,
    title: str | None = None,
) -> Path:
    """
    Write a static SVG line chart of agent states against rounds. Attacked agents are drawn dashed in red; `reference` (raw units) adds a horizontal line at the no-attack consensus.

    Args:
        result (RunResult): A completed run with a nonempty trace.
        path (str | Path): Target file, or a directory to write `states.svg` into.
        reference (float, optional): No-attack consensus in raw units.
        title (str, optional): Plot title; defaults to the run name.

    Returns:
        Path: The written file.

    Raises:
        ArgumentError: If the trace is empty; no file is written.
    """
    series = plot_series(result)

    import matplotlib

    matplotlib.use("Agg")
    matplotlib.rcParams.update({"svg.hashsalt": SVG_HASH_SALT, "axes.unicode_minus": False})
    import matplotlib.pyplot as plt

    path = Path(path)
    if path.suffix != ".svg":
        path = path / PLOT_FILE
    path.parent.mkdir(parents=True, exist_ok=True)

    attacked = result.config.attack.attacked
    fig, ax = plt.subplots(figsize=(7, 4), constrained_layout=True)
    rounds = np.arange(len(result.trace) + 1)
    for agent, values in series.items():
        if agent in attacked:
            ax.plot(rounds, values, color="tab:red", linestyle="--", label=f"agent {agent} (attacked)")
        else:
            ax.plot(rounds, values, label=f"agent {agent}")
    if reference is not None:
        ax.axhline(reference, color="black", linewidth=1.0, label="no-attack consensus")
    ax.set_xlabel("round k")
    ax.set_ylabel("state x")
    ax.set_title(title or result.config.name)
    ax.grid(True, alpha=0.3)
    if len(series) <= 12:
        ax.legend(loc="best", fontsize=7)

    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def emit_metrics(summary: dict, path: str | Path) -> Path:
    """
    Write a JSON summary with sorted keys. Numpy scalars and arrays are converted to plain numbers.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    def _plain(value: object) -> object:
        if isinstance(value, np.generic):
            return value.item()
        if isinstance(value, np.ndarray):
            return value.tolist()
        if isinstance(value, set | frozenset):
            return sorted(value)
        msg = f"Cannot serialize {type(value).__name__}"
        raise TypeError(msg)

    path.write_text(json.dumps(summary, indent=2, sort_keys=True, default=_plain) + "\n", encoding="utf-8")
    return path
