"""Exception hierarchy shared by all netosc modules.

Two top-level categories, matching the CLI exit codes: bad input
(`ValidationError`, exit 1) and a computation that cannot be trusted
(`NumericalError`, exit 2).
"""


class ValidationError(ValueError):
    """Input violates a documented contract (bad edge list, bad config, ...)."""


class NumericalError(RuntimeError):
    """A numerical guarantee failed (non-real spectrum, reconstruction, ...)."""
