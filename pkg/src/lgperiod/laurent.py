"""Sparse Laurent polynomials in up to eight variables with exact coefficients.

Terms are stored as a dict mapping exponent tuples (entries may be negative)
to nonzero coefficients.  The canonical term order is graded lexicographic,
largest first, which fixes iteration order, printing and serialization.

Coefficients live in an abstract ring (see :mod:`lgperiod.rings`): exact
rationals or monoid-algebra elements.  Values are immutable after
construction and all operations are pure.
"""

from .errors import DimensionMismatch, NotUnimodular
from .rings import QQ

MAX_RANK = 8

#: variable names accepted by the parser and used for printing
SHORT_NAMES = ("x", "y", "z", "w")


def variable_names(rank):
    """Printing names for a given rank: x,y,z,w when rank <= 4, else x1..xn."""
    if rank <= len(SHORT_NAMES):
        return SHORT_NAMES[:rank]
    return tuple(f"x{i + 1}" for i in range(rank))


def grlex_key(exponents):
    """Sort key for graded lexicographic order."""
    return (sum(exponents), exponents)


class LaurentPoly:
    """An immutable sparse Laurent polynomial."""

    __slots__ = ("_ring", "_rank", "_terms", "_sorted")

    def __init__(self, rank, terms=(), ring=QQ):
        """Build from an iterable of (exponent sequence, coefficient) pairs.

        Duplicate monomials are merged by addition and zero coefficients are
        dropped, so the result is always in canonical sparse form.
        """
        if not 1 <= rank <= MAX_RANK:
            raise DimensionMismatch(f"rank must be between 1 and {MAX_RANK}, got {rank}")
        merged = {}
        for exponents, coefficient in (terms.items() if isinstance(terms, dict) else terms):
            key = tuple(exponents)
            if len(key) != rank:
                raise DimensionMismatch(
                    f"exponent vector {key} has length {len(key)}, expected {rank}"
                )
            if not all(isinstance(e, int) for e in key):
                raise TypeError(f"exponents must be integers: {key}")
            value = ring.coerce(coefficient)
            if key in merged:
                value = merged[key] + value
            merged[key] = value
        self._ring = ring
        self._rank = rank
        self._terms = {e: c for e, c in merged.items() if not ring.is_zero(c)}
        self._sorted = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, rank, ring=QQ):
        return cls(rank, (), ring)

    @classmethod
    def constant(cls, rank, value, ring=QQ):
        return cls(rank, [((0,) * rank, value)], ring)

    @classmethod
    def one(cls, rank, ring=QQ):
        return cls.constant(rank, ring.one, ring)

    @classmethod
    def variable(cls, rank, index, ring=QQ):
        """The polynomial x_index (0-based)."""
        if not 0 <= index < rank:
            raise DimensionMismatch(f"variable index {index} out of range for rank {rank}")
        exponents = tuple(1 if i == index else 0 for i in range(rank))
        return cls(rank, [(exponents, ring.one)], ring)

    @classmethod
    def monomial(cls, exponents, coefficient=1, ring=QQ):
        exponents = tuple(exponents)
        return cls(len(exponents), [(exponents, coefficient)], ring)

    # -- basic queries -------------------------------------------------

    @property
    def rank(self):
        return self._rank

    @property
    def ring(self):
        return self._ring

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def terms(self):
        """Terms as (exponents, coefficient) pairs in canonical order."""
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)
            )
        return self._sorted

    def support(self):
        """Exponent vectors with nonzero coefficient, canonical order."""
        return tuple(e for e, _ in self.terms())

    def coefficient(self, exponents):
        """Coefficient of the given monomial (ring zero if absent)."""
        key = tuple(exponents)
        if len(key) != self._rank:
            raise DimensionMismatch(
                f"monomial of length {len(key)} queried in rank-{self._rank} polynomial"
            )
        return self._terms.get(key, self._ring.zero)

    def constant_term(self):
        return self._terms.get((0,) * self._rank, self._ring.zero)

    # -- ring structure -------------------------------------------------

    def _coerce_operand(self, other):
        """Lift scalars (and rational polynomials, into a monoid algebra) to self's ring."""
        if isinstance(other, LaurentPoly):
            if other._rank != self._rank:
                raise DimensionMismatch(
                    f"rank {other._rank} operand combined with rank {self._rank}"
                )
            if other._ring == self._ring:
                return other
            if other._ring == QQ:
                return other.map_coefficients(self._ring.coerce, self._ring)
            return NotImplemented
        try:
            value = self._ring.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return LaurentPoly.constant(self._rank, value, self._ring)

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return LaurentPoly(self._rank, terms, self._ring)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self._rank, [(e, -c) for e, c in self._terms.items()], self._ring)

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                value = c1 * c2
                if key in out:
                    out[key] = out[key] + value
                else:
                    out[key] = value
        return LaurentPoly(self._rank, out, self._ring)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = LaurentPoly.one(self._rank, self._ring)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self._rank == other._rank
            and self._ring == other._ring
            and self._terms == other._terms
        )

    # -- structural maps -------------------------------------------------

    def map_coefficients(self, func, ring=None):
        """Apply func to every coefficient, optionally landing in a new ring."""
        ring = ring if ring is not None else self._ring
        return LaurentPoly(self._rank, [(e, func(c)) for e, c in self._terms.items()], ring)

    def substitute_unimodular(self, matrix):
        """Change lattice basis: each exponent vector m becomes A @ m.

        A must be an integer rank x rank matrix of determinant +-1, so the
        substitution is invertible and the constant term is preserved.
        """
        rows = [tuple(row) for row in matrix]
        if len(rows) != self._rank or any(len(r) != self._rank for r in rows):
            raise DimensionMismatch(f"substitution matrix must be {self._rank}x{self._rank}")
        if any(not isinstance(v, int) for r in rows for v in r):
            raise NotUnimodular("substitution matrix must have integer entries")
        det = integer_determinant(rows)
        if det not in (1, -1):
            raise NotUnimodular(f"matrix determinant is {det}, expected +-1")
        terms = [
            (tuple(sum(r[j] * e[j] for j in range(self._rank)) for r in rows), c)
            for e, c in self._terms.items()
        ]
        return LaurentPoly(self._rank, terms, self._ring)

    def embed(self, rank):
        """Pad exponent vectors with zeros up to a larger rank."""
        if rank < self._rank:
            raise DimensionMismatch(f"cannot shrink rank {self._rank} to {rank}")
        pad = (0,) * (rank - self._rank)
        return LaurentPoly(rank, [(e + pad, c) for e, c in self._terms.items()], self._ring)

    def newton_polytope(self):
        from .polytope import newton_polytope

        return newton_polytope(self)

    # -- printing -------------------------------------------------

    def __str__(self):
        return poly_string(self)

    def __repr__(self):
        return f"LaurentPoly({self!s})"


def integer_determinant(rows):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _power_string(name, exponent):
    return name if exponent == 1 else f"{name}^{exponent}"


def poly_string(poly, names=None):
    """Canonical text form, parseable by :func:`lgperiod.expressions.parse_expression`.

    Terms appear in graded-lex order, largest first; coefficients render as
    exact rationals ("p/q"), never floats.  Only rational-coefficient
    polynomials have a flat text form.
    """
    if poly.ring != QQ:
        raise TypeError("only rational-coefficient polynomials have a text form")
    if poly.is_zero():
        return "0"
    names = names if names is not None else variable_names(poly.rank)
    pieces = []
    for exponents, coefficient in poly.terms():
        factors = [_power_string(names[i], e) for i, e in enumerate(exponents) if e != 0]
        magnitude = coefficient if coefficient > 0 else -coefficient
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not pieces:
            pieces.append(body if coefficient > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
    return " ".join(pieces)
