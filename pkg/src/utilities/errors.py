"""
Errors

Exception types raised across the project. Both concrete errors subclass ValueError so callers that only care about "bad input" can catch that.

Classes:
    RepcError: Base class for all project errors.
    ArgumentError: Invalid argument passed to a library operation.
    ConfigError: Inconsistent experiment configuration, carrying every problem found.
"""


### --- CLASSES --- ###
class RepcError(Exception):
    """Base class for all project errors."""


class ArgumentError(RepcError, ValueError):
    """
    Invalid argument passed to a library operation (e.g. out-of-range agent id, empty input, empty active set).
    """


class ConfigError(RepcError, ValueError):
    """
    Inconsistent experiment configuration. Holds the full list of problems rather than just the first one.
    """

    def __init__(self, errors: list[str] | str) -> None:
        """
        Initialize the error with one or more messages.

        Args:
            errors (list[str] | str): The validation messages.
        """
        self.errors = [errors] if isinstance(errors, str) else list(errors)
        super().__init__("; ".join(self.errors))
