"""
Utilities

Utility functions and error types that are used across the project and are not specific to any one package (e.g. netcore, repcore, simcore, etc.).
"""

from .common import (
    can_cast_to_int,
    derive_rng,
    derive_seed,
    find_project_root,
)
from .errors import ArgumentError, ConfigError, RepcError
from .logs import configure_logging

__all__ = [
    "ArgumentError",
    "ConfigError",
    "RepcError",
    "can_cast_to_int",
    "configure_logging",
    "derive_rng",
    "derive_seed",
    "find_project_root",
]
