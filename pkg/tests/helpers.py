"""Shared random generators for the test suite (seeded, reproducible)."""

from fractions import Fraction

from lgperiod import CurveClassMonoid, LaurentPoly, MoriElement


def random_laurent(rng, rank, max_terms=4, exp_bound=3, fractions=False, nonzero=False):
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            exponents = tuple(rng.randint(-exp_bound, exp_bound) for _ in range(rank))
            if fractions and rng.random() < 0.4:
                coefficient = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            else:
                coefficient = rng.randint(-5, 5)
            terms.append((exponents, coefficient))
        poly = LaurentPoly(rank, terms)
        if not nonzero or not poly.is_zero():
            return poly


def random_unimodular(rng, rank, steps=12):
    """Random GL_n(Z) matrix as a product of elementary operations."""
    rows = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(rank)
        j = rng.randrange(rank)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            rows[i] = [-a for a in rows[i]]
    return [tuple(r) for r in rows]


def random_monoid(rng, max_rank=3, max_weight=4):
    rank = rng.randint(1, max_rank)
    return CurveClassMonoid(tuple(rng.randint(1, max_weight) for _ in range(rank)))


def random_mori(rng, monoid, max_terms=4, max_mult=3, fractions=False):
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        mults = tuple(rng.randint(0, max_mult) for _ in range(monoid.rank))
        if fractions and rng.random() < 0.4:
            coefficient = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        else:
            coefficient = rng.randint(-4, 4)
        terms.append((mults, coefficient))
    return MoriElement(monoid, terms)
