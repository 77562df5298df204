"""Coefficient-ring contract for the polynomial layer.

One polynomial engine serves two rings: exact rationals and the
monoid algebra of curve classes (see :mod:`lgperiod.mori`).  A ring object
supplies zero, one, coercion and an exact zero test; the elements themselves
carry ``+``, unary ``-`` and ``*``.  Rationals are stored as ``int`` whenever
the denominator is 1 and as ``fractions.Fraction`` otherwise, which keeps the
common integer case on fast native arithmetic.
"""

from fractions import Fraction


def normalize_rational(value):
    """Coerce to an exact rational, collapsing integral Fractions to int."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return normalize_rational(Fraction(value))
    raise TypeError(f"not an exact rational: {value!r}")


def rational_string(value):
    """Render an exact rational as 'p' or 'p/q' (lossless, float-free)."""
    return str(value)


class CoefficientRing:
    """Abstract contract: zero, one, coercion, exact zero test and equality."""

    zero = None
    one = None

    def coerce(self, value):
        raise NotImplementedError

    def is_zero(self, value):
        return not value

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b


class RationalField(CoefficientRing):
    """The exact rationals; elements are int or Fraction."""

    zero = 0
    one = 1

    def coerce(self, value):
        return normalize_rational(value)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)


QQ = RationalField()
