"""Classical period sequences and Landau-Ginzburg potential bookkeeping.

The classical period of a Laurent polynomial f is the sequence whose entry d
is the constant term of f^d.  Entries are exact: rationals for plain
potentials, monoid-algebra elements when the coefficients carry curve
classes.  The optimized path runs on the selected kernel backend with
Newton-polytope pruning; the brute-force path expands every power through
the generic polynomial product and exists as an independent oracle, so the
two must never share code.
"""

from dataclasses import dataclass

from . import backends
from .errors import (
    DimensionMismatch,
    EmptySupport,
    MissingClassTag,
    MonoidMismatch,
    TruncationExceeded,
)
from .laurent import LaurentPoly
from .mori import (
    CurveClass,
    CurveClassMonoid,
    MoriAlgebra,
    MoriElement,
    validate_quantum_coefficients,
)
from .rings import QQ, normalize_rational, rational_string

GRADING_RATIONAL = "rational"
GRADING_MORI = "mori"


class PeriodSequence:
    """Entries c_0..c_D of a classical period, truncated at degree D.

    The degree-0 entry is always 1 (the constant term of f^0); construction
    enforces this exactly.
    """

    __slots__ = ("entries", "monoid")

    def __init__(self, entries, monoid=None):
        entries = tuple(entries)
        if not entries:
            raise ValueError("a period sequence has at least its degree-0 entry")
        if monoid is None:
            entries = tuple(normalize_rational(e) for e in entries)
            if entries[0] != 1:
                raise ValueError(f"degree-0 entry must be 1, got {entries[0]!r}")
        else:
            algebra = MoriAlgebra(monoid)
            entries = tuple(algebra.coerce(e) for e in entries)
            if entries[0] != algebra.one:
                raise ValueError(f"degree-0 entry must be 1, got {entries[0]!r}")
        self.entries = entries
        self.monoid = monoid

    @property
    def degree(self):
        return len(self.entries) - 1

    @property
    def grading(self):
        return GRADING_RATIONAL if self.monoid is None else GRADING_MORI

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if not isinstance(other, PeriodSequence):
            return NotImplemented
        return self.monoid == other.monoid and self.entries == other.entries

    def __repr__(self):
        if self.grading == GRADING_RATIONAL:
            return f"PeriodSequence({list(self.entries)})"
        return f"PeriodSequence(mori, degree={self.degree})"

    def truncate(self, degree):
        if degree > self.degree:
            raise TruncationExceeded(f"sequence stops at {self.degree}, asked for {degree}")
        return PeriodSequence(self.entries[: degree + 1], self.monoid)

    def specialize(self):
        """Collapse curve classes via z^beta -> t^degree(beta).

        The result's entry m collects every class of degree m across all
        stored entries; contributions beyond the truncation degree are
        outside the window and dropped.  Faithful for potentials that pass
        the grading check (class degree >= power degree).
        """
        if self.grading == GRADING_RATIONAL:
            return self
        acc = [0] * (self.degree + 1)
        for entry in self.entries:
            for cls, coefficient in entry.terms():
                d = cls.degree
                if d <= self.degree:
                    acc[d] += coefficient
        return PeriodSequence(acc)

    # -- serialization -------------------------------------------------

    def to_json_dict(self):
        if self.grading == GRADING_RATIONAL:
            return {
                "degree": self.degree,
                "coefficients": [rational_string(e) for e in self.entries],
            }
        coefficients = [
            [
                {"class": list(cls.multiplicities), "coeff": rational_string(v)}
                for cls, v in entry.terms()
            ]
            for entry in self.entries
        ]
        return {
            "degree": self.degree,
            "monoid": self.monoid.to_json_dict(),
            "coefficients": coefficients,
        }

    @classmethod
    def from_json_dict(cls, data):
        degree = data["degree"]
        coefficients = data["coefficients"]
        if len(coefficients) != degree + 1:
            raise ValueError("coefficient list does not match the stated degree")
        if "monoid" not in data:
            return cls([normalize_rational(c) for c in coefficients])
        monoid = CurveClassMonoid.from_json_dict(data["monoid"])
        entries = [
            MoriElement(monoid, [(tuple(t["class"]), t["coeff"]) for t in entry])
            for entry in coefficients
        ]
        return cls(entries, monoid)


def _wrap_entries(entries, ring):
    if isinstance(ring, MoriAlgebra):
        return PeriodSequence(entries, ring.monoid)
    return PeriodSequence(entries)


def classical_period(f, degree, strict=False):
    """Constant terms of f^0..f^degree, computed with polytope pruning.

    After k of the incremental multiplications, a monomial survives only if
    its negation lies in j copies of Newton(f) for some integer j between 0
    and degree-k; such monomials are exactly the ones that can still cancel
    to the zero exponent, so pruning never changes any entry.
    """
    if degree < 0:
        raise ValueError("truncation degree must be non-negative")
    ring = f.ring
    if f.is_zero():
        if strict and degree > 0:
            raise EmptySupport("cannot compute positive powers of the zero potential")
        entries = [ring.one] + [ring.zero] * degree
        return _wrap_entries(entries, ring)
    polytope = f.newton_polytope()
    exps = []
    coefs = []
    for e, c in f.terms():
        exps.append(e)
        coefs.append(c)
    entries = backends.power_constant_terms(
        exps, coefs, f.rank, degree, polytope.facets, ring.one, ring.zero
    )
    return _wrap_entries(entries, ring)


def classical_period_bruteforce(f, degree, strict=False):
    """Same contract as :func:`classical_period` via full unpruned expansion.

    Independent oracle: every power is expanded with the generic polynomial
    product, never touching the kernel backends or the polytope code.
    """
    if degree < 0:
        raise ValueError("truncation degree must be non-negative")
    ring = f.ring
    if strict and degree > 0 and f.is_zero():
        raise EmptySupport("cannot compute positive powers of the zero potential")
    entries = [ring.one]
    power = LaurentPoly.one(f.rank, ring)
    for _ in range(degree):
        power = power * f
        entries.append(power.constant_term())
    return _wrap_entries(entries, ring)


def period_match(left, right, degree):
    """Exact comparison of two sequences up to a degree.

    Returns None on agreement, else the first index where they differ.
    Sequences with mixed gradings (or different monoids) are compared after
    specializing curve classes away.
    """
    if degree < 0:
        raise ValueError("comparison degree must be non-negative")
    if left.degree < degree or right.degree < degree:
        raise TruncationExceeded(
            f"sequences stop at {left.degree} and {right.degree}, asked for {degree}"
        )
    if left.grading != right.grading or (
        left.grading == GRADING_MORI and left.monoid != right.monoid
    ):
        left = left.specialize()
        right = right.specialize()
    for d in range(degree + 1):
        if left.entries[d] != right.entries[d]:
            return d
    return None


# -- potentials built from boundary components ------------------------------


@dataclass(frozen=True)
class PotentialComponent:
    """One boundary theta function: a label, its chart image and bookkeeping.

    ``weight`` is the divisor multiplicity of the component (1 for reduced
    boundary components); ``class_tag`` attaches the curve class whose
    degree grades everything the component contributes.
    """

    label: str
    chart: LaurentPoly
    weight: int = 1
    class_tag: CurveClass = None

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError(f"component weight must be positive, got {self.weight}")
        if self.chart.ring != QQ:
            raise TypeError("component charts are rational-coefficient Laurent polynomials")


class PotentialSpec:
    """A potential W as a sum of labeled boundary components."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("a potential needs at least one component")
        rank = components[0].chart.rank
        for comp in components:
            if comp.chart.rank != rank:
                raise DimensionMismatch("all component charts must share one rank")
        labels = [comp.label for comp in components]
        if len(set(labels)) != len(labels):
            raise ValueError(f"component labels must be unique, got {labels}")
        self.components = components

    @property
    def rank(self):
        return self.components[0].chart.rank

    def labels(self):
        return tuple(comp.label for comp in self.components)

    def total_chart(self):
        """The plain potential: the sum of all chart images over QQ."""
        total = LaurentPoly.zero(self.rank, QQ)
        for comp in self.components:
            total = total + comp.chart
        return total

    def mori_potential(self):
        """The graded potential: each component's chart times z^(its tag)."""
        monoid = self._tagged_monoid()
        algebra = MoriAlgebra(monoid)
        total = LaurentPoly.zero(self.rank, algebra)
        for comp in self.components:
            lifted = comp.chart.map_coefficients(
                lambda c, tag=comp.class_tag: MoriElement(monoid, [(tag, c)]), algebra
            )
            total = total + lifted
        return total

    def _tagged_monoid(self):
        monoid = None
        for comp in self.components:
            if comp.class_tag is None:
                raise MissingClassTag(f"component {comp.label!r} has no curve-class tag")
            if monoid is None:
                monoid = comp.class_tag.monoid
            elif comp.class_tag.monoid != monoid:
                raise MonoidMismatch("component tags belong to different monoids")
        return monoid


@dataclass(frozen=True)
class GradingViolation:
    label: str
    message: str


@dataclass(frozen=True)
class GradingReport:
    ok: bool
    violations: tuple

    def __bool__(self):
        return self.ok


def check_grading(spec):
    """Certify that period entries of the potential live in degrees >= d.

    Requires a curve-class tag on every component and reports components
    whose tag has degree zero.  When the check passes, every term of the
    graded potential carries a class of degree >= 1; degrees add under
    multiplication, so the degree-d entry of the period is supported on
    classes of degree >= d, which makes the full period series well-defined.
    """
    spec._tagged_monoid()
    violations = []
    for comp in spec.components:
        if comp.class_tag.degree < 1:
            violations.append(
                GradingViolation(
                    comp.label,
                    f"component {comp.label!r} is tagged with the degree-zero class",
                )
            )
    return GradingReport(ok=not violations, violations=tuple(violations))


def quantum_period_series(values, monoid, degree):
    """Assemble user- or oracle-supplied quantum coefficients into a sequence.

    ``values`` maps curve classes to their coefficients.  The degree-zero
    coefficient is fixed to 1 and degree-one coefficients must vanish;
    supplying anything else raises ConventionViolation.
    """
    if degree < 0:
        raise ValueError("truncation degree must be non-negative")
    validate_quantum_coefficients(values, monoid, degree)
    buckets = [[] for _ in range(degree + 1)]
    for cls, value in values.items():
        d = cls.degree
        if d >= 2 and value != 0:
            buckets[d].append((cls.multiplicities, value))
    algebra = MoriAlgebra(monoid)
    entries = [algebra.one]
    entries += [MoriElement(monoid, buckets[d]) for d in range(1, degree + 1)]
    return PeriodSequence(entries, monoid)
