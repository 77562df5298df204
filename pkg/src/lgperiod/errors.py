"""Exception types shared across the package."""


class LgPeriodError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(LgPeriodError):
    """Operands live in lattices of different rank."""


class NotUnimodular(LgPeriodError):
    """A lattice substitution matrix has determinant other than +-1."""


class EmptySupport(LgPeriodError):
    """An operation that needs a nonzero polynomial received zero."""


class MonoidMismatch(LgPeriodError):
    """Curve classes or monoid-algebra elements from different monoids were mixed."""


class ConventionViolation(LgPeriodError):
    """Supplied series data contradicts the p_0 = 1 / degree-one-vanishing conventions."""


class PartitionMismatch(LgPeriodError):
    """A composition does not sum to the stated total."""


class ProfileDegreeMismatch(LgPeriodError):
    """A boundary intersection profile does not sum to the class degree."""


class MissingClassTag(LgPeriodError):
    """A grading check needs a curve-class tag on every potential component."""


class TruncationExceeded(LgPeriodError):
    """A comparison or query asked for degrees beyond a stored truncation."""


class UnknownSpace(LgPeriodError):
    """Identifier does not name one of the built-in reference spaces."""


class ParseError(LgPeriodError):
    """Expression text could not be parsed or evaluated.

    Carries the byte offset of the offending token in ``offset``.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class CorruptRecord(LgPeriodError):
    """A stored period record disagrees with re-derivation from its potential."""


class KernelCapacityError(LgPeriodError):
    """The compiled kernel cannot represent this input; callers fall back."""
