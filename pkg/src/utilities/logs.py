"""
Logging Utilities

Helpers for configuring the standard library logger. Library modules only call `logging.getLogger(__name__)`; the command-line entry point is the one place that installs a handler.

Functions:
    configure_logging: Install a single stream handler on the root project logger.
"""

# External Libraries
import logging
import os

### --- CONSTANTS --- ###
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVEL_ENV = "REPC_LOG_LEVEL"


### --- FUNCTIONS --- ###
def configure_logging(level: str | int | None = None) -> logging.Logger:
    """
    Install a single stream handler on the `src` logger. Calling it again replaces the handler rather than stacking a second one.

    Args:
        level (str | int, optional): Log level. Defaults to the `REPC_LOG_LEVEL` environment variable, else "INFO".

    Returns:
        logging.Logger: The configured project logger.
    """
    if level is None:
        level = os.getenv(LOG_LEVEL_ENV, "INFO")
    if isinstance(level, str):
        level = level.upper()

    logger = logging.getLogger("src")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    return logger
