"""Exception types shared across the package."""

from __future__ import annotations


class KohnspecError(Exception):
    """Base class for all package-specific errors."""


class ConstraintError(KohnspecError):
    """A family constructor was called with parameters outside its family
    constraints (e.g. an even twist order where an odd one is required)."""


class NonFreeAction(KohnspecError):
    """The requested group does not act freely on the sphere: some
    non-identity element has eigenvalue 1."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonIntegralDimension(KohnspecError):
    """Character averaging failed to land on an integer.  Signals a bug in
    the group catalog or in character evaluation, never a user error."""


class UnsupportedFamily(KohnspecError):
    """No closed-form dimension formula is available for this family."""


class TraceLookupError(KohnspecError):
    """An exact quaternion trace fell outside the finite trace table.
    Impossible for catalog groups; indicates corrupted generator data."""


class SizeLimit(KohnspecError):
    """A brute-force computation was requested beyond its size budget."""


class ClosureMismatch(KohnspecError):
    """Matrix closure of the stored generators produced a group whose order
    differs from the catalog order."""


class TruncationError(KohnspecError):
    """A generating-function polynomial had nonzero coefficients beyond its
    proven degree bound."""


class ParseError(KohnspecError):
    """A group spec string could not be parsed."""
