"""Shared exception types.

The CLI maps these onto exit codes: ParameterError -> 2,
VerificationError -> 3, BudgetExceededError -> 4.
"""


class ConstakitError(Exception):
    """Base class for all library errors."""


class ParameterError(ConstakitError, ValueError):
    """Invalid or out-of-range input parameters."""


class FieldMismatchError(ParameterError):
    """Operands belong to different fields."""


class SubfieldError(ConstakitError):
    """A value expected to lie in an embedded subfield does not.

    Raised as a hard internal error: it indicates a bug in coset or
    tower computations, never a user mistake.
    """


class VerificationError(ConstakitError):
    """An independent cross-check (oracle, invariant) failed."""


class BudgetExceededError(ConstakitError):
    """A configured enumeration or search budget was exceeded."""
