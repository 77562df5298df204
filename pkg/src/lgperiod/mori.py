"""Curve classes and their monoid algebra.

The effective-curve cone is modeled as a free commutative monoid on r
generators, each carrying a positive anticanonical degree; elements of the
monoid algebra are finite rational combinations of classes z^beta.  The
degree functional grades everything, and sending z^beta to t^degree(beta)
specializes an element to a one-variable polynomial.
"""

from fractions import Fraction

from .errors import ConventionViolation, MonoidMismatch
from .laurent import LaurentPoly
from .rings import QQ, CoefficientRing, normalize_rational


class CurveClassMonoid:
    """Free commutative monoid on r generators with positive degree weights."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        weights = tuple(weights)
        if not weights:
            raise ValueError("a curve-class monoid needs at least one generator")
        for w in weights:
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"generator weights must be positive integers, got {w!r}")
        self.weights = weights

    @property
    def rank(self):
        return len(self.weights)

    def degree(self, multiplicities):
        return sum(m * w for m, w in zip(multiplicities, self.weights))

    def curve_class(self, multiplicities):
        return CurveClass(self, multiplicities)

    def zero_class(self):
        return CurveClass(self, (0,) * self.rank)

    def generator(self, index):
        return CurveClass(self, tuple(1 if i == index else 0 for i in range(self.rank)))

    def z(self, curve_class, coefficient=1):
        """The monoid-algebra monomial coefficient * z^class."""
        if isinstance(curve_class, CurveClass):
            if curve_class.monoid != self:
                raise MonoidMismatch("curve class belongs to a different monoid")
            key = curve_class.multiplicities
        else:
            key = self.curve_class(curve_class).multiplicities
        return MoriElement(self, [(key, coefficient)])

    def classes_of_degree(self, degree):
        """All classes of exact degree (finite: every weight is >= 1)."""
        out = []

        def fill(prefix, left):
            i = len(prefix)
            if i == self.rank - 1:
                if left % self.weights[i] == 0:
                    out.append(self.curve_class(prefix + (left // self.weights[i],)))
                return
            for k in range(left // self.weights[i] + 1):
                fill(prefix + (k,), left - k * self.weights[i])

        if degree >= 0:
            fill((), degree)
        return out

    def to_json_dict(self):
        return {"rank": self.rank, "weights": list(self.weights)}

    @classmethod
    def from_json_dict(cls, data):
        weights = data["weights"]
        if data.get("rank", len(weights)) != len(weights):
            raise ValueError("monoid rank disagrees with its weight list")
        return cls(weights)

    def __eq__(self, other):
        if not isinstance(other, CurveClassMonoid):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self):
        return hash(("CurveClassMonoid", self.weights))

    def __repr__(self):
        return f"CurveClassMonoid(weights={list(self.weights)})"


class CurveClass:
    """An element of the monoid: non-negative multiplicities of the generators."""

    __slots__ = ("monoid", "multiplicities")

    def __init__(self, monoid, multiplicities):
        multiplicities = tuple(multiplicities)
        if len(multiplicities) != monoid.rank:
            raise MonoidMismatch(
                f"expected {monoid.rank} multiplicities, got {len(multiplicities)}"
            )
        for m in multiplicities:
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"multiplicities must be non-negative integers, got {m!r}")
        self.monoid = monoid
        self.multiplicities = multiplicities

    @property
    def degree(self):
        return self.monoid.degree(self.multiplicities)

    def is_zero(self):
        return not any(self.multiplicities)

    def __add__(self, other):
        if not isinstance(other, CurveClass):
            return NotImplemented
        if other.monoid != self.monoid:
            raise MonoidMismatch("cannot add classes from different monoids")
        return CurveClass(
            self.monoid, tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities))
        )

    def __mul__(self, scalar):
        if not isinstance(scalar, int) or scalar < 0:
            return NotImplemented
        return CurveClass(self.monoid, tuple(scalar * m for m in self.multiplicities))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CurveClass):
            return NotImplemented
        return self.monoid == other.monoid and self.multiplicities == other.multiplicities

    def __hash__(self):
        return hash((self.monoid, self.multiplicities))

    def __repr__(self):
        return f"CurveClass{self.multiplicities}"


class MoriElement:
    """A finite rational combination of classes z^beta (monoid-algebra element)."""

    __slots__ = ("monoid", "_terms")

    def __init__(self, monoid, terms=()):
        merged = {}
        for key, value in (terms.items() if isinstance(terms, dict) else terms):
            if isinstance(key, CurveClass):
                if key.monoid != monoid:
                    raise MonoidMismatch("curve class belongs to a different monoid")
                key = key.multiplicities
            else:
                key = monoid.curve_class(key).multiplicities
            value = normalize_rational(value)
            if key in merged:
                value = merged[key] + value
            merged[key] = value
        self.monoid = monoid
        self._terms = {k: normalize_rational(v) for k, v in merged.items() if v != 0}

    # -- queries -------------------------------------------------

    def terms(self):
        """(CurveClass, coefficient) pairs sorted by (degree, multiplicities)."""
        items = sorted(self._terms.items(), key=lambda kv: (self.monoid.degree(kv[0]), kv[0]))
        return tuple((CurveClass(self.monoid, k), v) for k, v in items)

    def coefficient(self, curve_class):
        key = (
            curve_class.multiplicities
            if isinstance(curve_class, CurveClass)
            else tuple(curve_class)
        )
        return self._terms.get(key, 0)

    def support(self):
        return tuple(cls for cls, _ in self.terms())

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MoriElement):
            if other.monoid != self.monoid:
                raise MonoidMismatch("elements belong to different monoids")
            return other
        try:
            value = normalize_rational(other)
        except TypeError:
            return NotImplemented
        return MoriElement(self.monoid, [((0,) * self.monoid.rank, value)])

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms[k] + v if k in terms else v
        return MoriElement(self.monoid, terms)

    __radd__ = __add__

    def __neg__(self):
        return MoriElement(self.monoid, [(k, -v) for k, v in self._terms.items()])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                value = v1 * v2
                if key in out:
                    out[key] = out[key] + value
                else:
                    out[key] = value
        return MoriElement(self.monoid, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, MoriElement):
            return NotImplemented
        return self.monoid == other.monoid and self._terms == other._terms

    # -- grading -------------------------------------------------

    def specialize(self):
        """Apply z^beta -> t^degree(beta); a one-variable polynomial over QQ."""
        return LaurentPoly(
            1, [((self.monoid.degree(k),), v) for k, v in self._terms.items()], QQ
        )

    def degree_truncate(self, cutoff):
        """Drop every term whose class degree exceeds the cutoff."""
        if cutoff < 0:
            raise ValueError("truncation order must be non-negative")
        return MoriElement(
            self.monoid,
            [(k, v) for k, v in self._terms.items() if self.monoid.degree(k) <= cutoff],
        )

    def __repr__(self):
        if not self._terms:
            return "MoriElement(0)"
        bits = [f"{v}*z{list(k)}" for k, v in sorted(self._terms.items())]
        return "MoriElement(" + " + ".join(bits) + ")"


class MoriAlgebra(CoefficientRing):
    """The monoid algebra as a coefficient ring for Laurent polynomials."""

    def __init__(self, monoid):
        self.monoid = monoid
        self.zero = MoriElement(monoid)
        self.one = MoriElement(monoid, [((0,) * monoid.rank, 1)])

    def coerce(self, value):
        if isinstance(value, MoriElement):
            if value.monoid != self.monoid:
                raise MonoidMismatch("element belongs to a different monoid")
            return value
        return MoriElement(self.monoid, [((0,) * self.monoid.rank, value)])

    def __eq__(self, other):
        if not isinstance(other, MoriAlgebra):
            return NotImplemented
        return self.monoid == other.monoid

    def __hash__(self):
        return hash(("MoriAlgebra", self.monoid))

    def __repr__(self):
        return f"MoriAlgebra({self.monoid!r})"


def validate_quantum_coefficients(values, monoid, cutoff):
    """Check series conventions for user-supplied quantum coefficients.

    The degree-zero coefficient must be 1 if supplied, degree-one
    coefficients must vanish, and no supplied class may exceed the
    truncation order.
    """
    from .errors import TruncationExceeded

    for cls, value in values.items():
        if not isinstance(cls, CurveClass) or cls.monoid != monoid:
            raise MonoidMismatch(f"{cls!r} does not belong to {monoid!r}")
        d = cls.degree
        if d == 0 and value != 1:
            raise ConventionViolation("the degree-zero coefficient is fixed to 1")
        if d == 1 and value != 0:
            raise ConventionViolation(
                f"degree-one coefficients vanish by convention, got {value!r} at {cls!r}"
            )
        if d > cutoff:
            raise TruncationExceeded(f"class {cls!r} has degree {d} > truncation {cutoff}")
