"""Exception hierarchy shared by the library and the command-line front end."""


class ComatherError(Exception):
    """Base class for every error raised on purpose by comather."""


class InvalidInputError(ComatherError, ValueError):
    """The caller handed us something outside the supported domain."""


class NotPolynomialError(ComatherError):
    """An exact division left a non-zero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ResourceLimitError(ComatherError):
    """A computation would touch more of the Weyl group than allowed."""


class PipelineError(ComatherError):
    """An internal consistency check failed; this is a bug, not bad input."""
