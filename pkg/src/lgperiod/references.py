"""Built-in reference spaces: potentials and closed-form period oracles.

The reference sequences are computed from monomial-cancellation counting,
entirely independent of the polynomial engine: the degree-d constant term of
each reference potential counts the ways to pick d factors whose exponents
cancel, which is a multinomial count.  For the one-dimensional space there
is additionally a from-first-principles curve count (choosing which of 2d
generic boundary points map to 0 fixes a degree-d map up to the point
condition), giving C(2d, d); the test suite checks all of these against
brute-force expansion.
"""

import enum
from math import comb, factorial

from .errors import UnknownSpace
from .laurent import LaurentPoly
from .period import PeriodSequence


class ReferenceSpace(enum.Enum):
    P1 = "P1"
    P2 = "P2"
    P1XP1 = "P1xP1"
    P3 = "P3"

    @classmethod
    def from_name(cls, name):
        for space in cls:
            if space.value.lower() == str(name).lower():
                return space
        known = ", ".join(space.value for space in cls)
        raise UnknownSpace(f"unknown reference space {name!r} (known: {known})")

    @property
    def dimension(self):
        return {"P1": 1, "P2": 2, "P1xP1": 2, "P3": 3}[self.value]

    @property
    def generator_degrees(self):
        """Anticanonical degrees of the generating curve class(es)."""
        return {"P1": (2,), "P2": (3,), "P1xP1": (2, 2), "P3": (4,)}[self.value]


def reference_potential(space):
    """The standard Laurent mirror potential of a reference space."""
    space = _as_space(space)
    if space is ReferenceSpace.P1:
        return LaurentPoly(1, [((1,), 1), ((-1,), 1)])
    if space is ReferenceSpace.P2:
        return LaurentPoly(2, [((1, 0), 1), ((0, 1), 1), ((-1, -1), 1)])
    if space is ReferenceSpace.P1XP1:
        return LaurentPoly(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])
    if space is ReferenceSpace.P3:
        return LaurentPoly(
            3, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1), ((-1, -1, -1), 1)]
        )
    raise UnknownSpace(f"unknown reference space {space!r}")


def naive_count_p1(count_degree):
    """Degree-d rational curves on the line through fixed boundary data.

    A degree-d self-map of the line with prescribed 2d generic preimages of
    {0, infinity} is pinned down by choosing which d of them map to 0, the
    remaining freedom being eaten by the generic point condition: C(2d, d)
    choices.  Degree 0 returns the series convention 1.
    """
    if count_degree < 0:
        raise ValueError("count degree must be non-negative")
    return comb(2 * count_degree, count_degree)


def _entry(space, d):
    """Degree-d period entry by counting cancelling factor choices."""
    if space is ReferenceSpace.P1:
        # pick which d/2 of the d factors are x, the rest 1/x
        return comb(d, d // 2) if d % 2 == 0 else 0
    if space is ReferenceSpace.P2:
        # k factors each of x, y and 1/(xy)
        if d % 3 != 0:
            return 0
        k = d // 3
        return factorial(d) // factorial(k) ** 3
    if space is ReferenceSpace.P1XP1:
        # a pairs cancelling in the first factor, (d/2 - a) in the second
        if d % 2 != 0:
            return 0
        k = d // 2
        total = 0
        for a in range(k + 1):
            b = k - a
            total += factorial(d) // (factorial(a) ** 2 * factorial(b) ** 2)
        return total
    if space is ReferenceSpace.P3:
        # k factors each of x, y, z and 1/(xyz)
        if d % 4 != 0:
            return 0
        k = d // 4
        return factorial(d) // factorial(k) ** 4
    raise UnknownSpace(f"unknown reference space {space!r}")


def reference_quantum_period(space, degree):
    """The quantum period of a reference space, truncated at ``degree``."""
    space = _as_space(space)
    if degree < 0:
        raise ValueError("truncation degree must be non-negative")
    return PeriodSequence([_entry(space, d) for d in range(degree + 1)])


def _as_space(space):
    return space if isinstance(space, ReferenceSpace) else ReferenceSpace.from_name(space)
