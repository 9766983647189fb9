"""Exception types shared across the package.

Arithmetic overflow is reported with the builtin OverflowError; everything
else uses one of the classes below so callers (and the CLI) can map
failures to exit codes without string matching.
"""


class PracnumError(Exception):
    """Base class for all package-specific errors."""


class DomainError(PracnumError):
    """An input is outside the documented range of an operation."""


class CapacityError(PracnumError):
    """A resource guard tripped (table size, bit-vector length, ...)."""


class TheoremViolationError(PracnumError):
    """A computation contradicted a proved statement.

    This signals an implementation bug, not mathematics; it gets its own
    type (and CLI exit code) so sweeps can tell it apart from bad input.
    """
