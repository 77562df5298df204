"""Algebraic mutations of Laurent potentials.

A mutation datum is a primitive grading direction w together with a factor h
supported on the hyperplane w = 0.  Writing f as the sum of its graded
pieces C_k (k the pairing of a monomial with w), the mutation replaces f by
sum_k h^k * C_k; this is a Laurent polynomial exactly when h^|k| divides C_k
for every negative level k, and otherwise the attempt reports the first
failing level.  Successful mutations preserve the classical period, which is
the invariant the checker verifies.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch
from .laurent import LaurentPoly, grlex_key
from .period import classical_period, period_match
from .rings import QQ


@dataclass(frozen=True)
class NotMutable:
    """Outcome (not an exception): divisibility failed at this graded level."""

    level: int


@dataclass(frozen=True)
class PeriodComparison:
    equal: bool
    mismatch_index: int
    left: object
    right: object

    def __bool__(self):
        return self.equal


class MutationData:
    """A primitive direction w and a factor supported on w = 0."""

    __slots__ = ("direction", "factor")

    def __init__(self, direction, factor):
        direction = tuple(direction)
        if len(direction) != factor.rank:
            raise DimensionMismatch(
                f"direction has length {len(direction)}, factor has rank {factor.rank}"
            )
        if not any(direction):
            raise ValueError("the grading direction must be nonzero")
        g = 0
        for v in direction:
            g = gcd(g, abs(v))
        if g != 1:
            raise ValueError(f"the grading direction must be primitive, got {direction}")
        if factor.ring != QQ:
            raise TypeError("mutation factors are rational-coefficient Laurent polynomials")
        if factor.is_zero():
            raise ValueError("the mutation factor must be nonzero")
        for exponents in factor.support():
            level = sum(a * b for a, b in zip(direction, exponents))
            if level != 0:
                raise ValueError(
                    f"factor monomial {exponents} pairs to {level} with w, expected 0"
                )
        self.direction = direction
        self.factor = factor


def w_decompose(poly, direction):
    """Split a polynomial into graded pieces keyed by the pairing with w."""
    direction = tuple(direction)
    if len(direction) != poly.rank:
        raise DimensionMismatch(
            f"direction has length {len(direction)}, polynomial has rank {poly.rank}"
        )
    pieces = {}
    for exponents, coefficient in poly.terms():
        level = sum(a * b for a, b in zip(direction, exponents))
        pieces.setdefault(level, []).append((exponents, coefficient))
    return {
        level: LaurentPoly(poly.rank, terms, poly.ring)
        for level, terms in sorted(pieces.items())
    }


def divide_exact(numerator, divisor):
    """Exact quotient in the Laurent ring, or None when it does not divide.

    Both operands are shifted so that no variable divides them (kill the
    per-variable minimum exponents); in that form Laurent divisibility
    coincides with polynomial divisibility, decided by leading-term division
    under graded-lex order.  Over a field a stuck leading term proves
    indivisibility, so the loop never needs a remainder pass.
    """
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if numerator.is_zero():
        return numerator
    if numerator.rank != divisor.rank or numerator.ring != QQ or divisor.ring != QQ:
        raise DimensionMismatch("division needs rational operands of equal rank")
    rank = numerator.rank

    def lowered(poly):
        shift = tuple(min(e[i] for e in poly.support()) for i in range(rank))
        terms = {tuple(a - b for a, b in zip(e, shift)): c for e, c in poly.terms()}
        return shift, terms

    num_shift, remainder = lowered(numerator)
    div_shift, divisor_terms = lowered(divisor)
    lead = max(divisor_terms, key=grlex_key)
    lead_coeff = divisor_terms[lead]

    quotient = {}
    while remainder:
        top = max(remainder, key=grlex_key)
        step = tuple(a - b for a, b in zip(top, lead))
        if any(v < 0 for v in step):
            return None
        coefficient = Fraction(remainder[top]) / Fraction(lead_coeff)
        quotient[step] = quotient.get(step, 0) + coefficient
        for e, c in divisor_terms.items():
            key = tuple(a + b for a, b in zip(step, e))
            value = remainder.get(key, 0) - coefficient * c
            if value:
                remainder[key] = value
            elif key in remainder:
                del remainder[key]
    offset = tuple(a - b for a, b in zip(num_shift, div_shift))
    return LaurentPoly(
        rank, [(tuple(a + b for a, b in zip(e, offset)), c) for e, c in quotient.items()], QQ
    )


def mutate(poly, data):
    """Apply a mutation; returns the new potential or a NotMutable outcome.

    Levels are processed in increasing order, so the reported failure is the
    most negative level at which the factor does not divide.
    """
    if poly.rank != len(data.direction):
        raise DimensionMismatch(
            f"polynomial rank {poly.rank} does not match direction length "
            f"{len(data.direction)}"
        )
    if poly.ring != QQ:
        raise TypeError("mutation applies to rational-coefficient potentials")
    pieces = w_decompose(poly, data.direction)
    result = LaurentPoly.zero(poly.rank, QQ)
    for level in sorted(pieces):
        piece = pieces[level]
        if level >= 0:
            result = result + piece * data.factor**level
            continue
        for _ in range(-level):
            piece = divide_exact(piece, data.factor)
            if piece is None:
                return NotMutable(level=level)
        result = result + piece
    return result


def check_period_invariance(left, right, degree):
    """Compare the classical periods of two potentials up to a degree."""
    if left.rank != right.rank:
        raise DimensionMismatch(
            f"cannot compare periods across ranks {left.rank} and {right.rank}"
        )
    left_seq = classical_period(left, degree)
    right_seq = classical_period(right, degree)
    index = period_match(left_seq, right_seq, degree)
    return PeriodComparison(
        equal=index is None, mismatch_index=index, left=left_seq, right=right_seq
    )
