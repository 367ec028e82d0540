"""Error taxonomy shared by the library and the CLI.

Two failure classes are kept distinct so callers (and CI) can tell user
error apart from a defect: bad arguments raise InvalidInputError, while a
failed internal self-check (inexact division, oracle mismatch) raises
CrossCheckError.  The CLI maps them to exit codes 1 and 2 respectively.
"""


class InvalidInputError(ValueError):
    """A precondition on user-supplied arguments was violated."""


class NotInvertibleError(InvalidInputError):
    """Modular inverse requested for a non-coprime pair."""


class CrossCheckError(RuntimeError):
    """An internal invariant failed; this always indicates a bug."""


class ResourceLimitError(RuntimeError):
    """An oracle was asked to exceed its documented iteration budget."""
