"""
Sources

Constants for the file locations (e.g. output directories, bundled configs) used in this project.

Functions:
    resolve_out_dir: Resolve the output directory from an explicit path, the environment, or the project default.
"""

# External Libraries
import os
from pathlib import Path

# Local Libraries
from src.utilities.common import find_project_root

### --- CONSTANTS --- ###
OUT_DIR_ENV = "REPC_OUT"
DEFAULT_OUT_DIR = find_project_root() / "outputs"
CONFIGS_DIR = find_project_root() / "configs"

STATES_FILE = "states.csv"
REPUTATIONS_FILE = "reputations.csv"
PLOT_FILE = "states.svg"
SUMMARY_FILE = "summary.json"
SWEEP_FILE = "sweep.csv"
SWEEP_RUNS_FILE = "sweep_runs.csv"


### --- FUNCTIONS --- ###
def resolve_out_dir(out_dir: str | Path | None = None) -> Path:
    """
    Resolve the output directory. An explicit path wins, then the `REPC_OUT` environment variable, then `outputs/` under the project root.
    """
    if out_dir is not None:
        return Path(out_dir)
    if env_dir := os.getenv(OUT_DIR_ENV):
        return Path(env_dir)
    return DEFAULT_OUT_DIR
