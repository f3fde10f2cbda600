"""
Common Utilities

Utility functions that do not fit into any other specific category or else are the sole function of what could be understood as their categorical kind (e.g. path utilities, type casting, seeded randomness, etc.).

Functions:
    can_cast_to_int: Check if a string can be cast to an integer.
    find_project_root: Find the project root directory.
    derive_seed: Derive a child seed from a root seed and a tuple of integer keys.
    derive_rng: Create a numpy Generator from a root seed and a tuple of integer keys.
"""

# External Libraries
from pathlib import Path

import numpy as np

### --- CONSTANTS --- ###
SEED_MASK = (1 << 64) - 1


### --- FUNCTIONS --- ###
def can_cast_to_int(s: str) -> bool:
    """
    Check if the given string can be cast to an integer.

    Args:
        s (str): The string to check.

    Returns:
        bool: True if the string can be cast to an int, False otherwise.
    """
    try:
        int(s)
        return True
    except ValueError:
        return False


def find_project_root(start_path: Path | None = None) -> Path:
    """
    Programmatically find the project root by searching for a known directory or file (e.g., '.git' or 'pyproject.toml').

    Args:
        start_path (Path): The starting directory to begin the search. Defaults to the current file's directory.

    Returns:
        Path: The absolute path to the project root.
    """
    if start_path is None:
        start_path = Path(__file__).resolve()

    # Traverse up the directory tree until we find a known project root indicator
    for parent in start_path.parents:
        if (parent / ".git").exists() or (parent / "pyproject.toml").exists():
            return parent
    # If no project root is found, assume the start_path is the project root
    return start_path.parent


def derive_seed(seed: int, *keys: int) -> int:
    """
    Derive a 64-bit child seed from a root seed and a tuple of integer keys (e.g. sweep cell and repeat index). The same inputs always give the same child seed, independent of call order.
    """
    sequence = np.random.SeedSequence([seed & SEED_MASK, *keys])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def derive_rng(seed: int, *keys: int) -> np.random.Generator:
    """
    Create an independent numpy Generator for the stream identified by `keys` under the root `seed`.

    Args:
        seed (int): The root seed of the run.
        keys (int): Stream identifiers, e.g. `(1,)` for the scheduler or `(2, agent, k)` for one attacker draw.

    Returns:
        np.random.Generator: A freshly seeded generator.
    """
    return np.random.default_rng([seed & SEED_MASK, *keys])
