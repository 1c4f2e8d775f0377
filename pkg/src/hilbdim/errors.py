"""Exception types shared across the package."""


class HilbdimError(Exception):
    """Base class for all package-specific errors."""


class RingMismatchError(HilbdimError):
    """Operands belong to rings with different ambient data."""


class DegreeOverflowError(HilbdimError):
    """A product would exceed the top degree of the ring."""


class NotTopDegreeError(HilbdimError):
    """Evaluation requested on a class that is not of top degree."""


class NonIntegralError(HilbdimError):
    """A quantity that must be an integer failed to be one."""


class NonIntegralChiNError(NonIntegralError):
    """chi(N) evaluated to a non-integer: the invariant set is inconsistent."""


class NonIntegralDimError(NonIntegralError):
    """A closed-form dimension evaluated to a non-integer."""


class InvalidFamilyError(HilbdimError):
    """A family descriptor violates one of its defining identities."""
