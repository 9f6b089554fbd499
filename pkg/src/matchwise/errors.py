"""Error hierarchy shared by all matchwise modules.

The three classes map to distinct CLI exit codes (see SCHEMA.md):
parameter 2, capacity 3, integrity 4.
"""


class MatchwiseError(Exception):
    """Base class for all matchwise errors."""


class ParameterError(MatchwiseError):
    """An argument violates a documented precondition."""


class CapacityError(MatchwiseError):
    """The instance exceeds the supported desk scale."""


class IntegrityError(MatchwiseError):
    """An internal consistency check failed.

    Raised when a procedure detects that its inputs could not have
    satisfied the stated preconditions (e.g. a family claimed to be
    k-wise intersecting produces a covering certificate), or when an
    implementation invariant is violated.
    """
