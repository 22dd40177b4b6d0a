"""Error classes shared across the package.

FormatError covers malformed input documents and values; PreconditionError
covers structurally valid inputs that an operation cannot accept (the CLI
maps them to distinct exit codes).
"""


class FormatError(ValueError):
    """Malformed document, field, or value."""


class PreconditionError(ValueError):
    """Valid input outside an operation's domain."""


class SingularMatrixError(PreconditionError):
    """A matrix required to be invertible is singular."""
