"""Pure-Python powering kernel.

Reference implementation of the hot loop: constant terms of f^0..f^D by
incremental products over a sparse exponent->coefficient dict, pruning
monomials that can no longer cancel to the zero exponent.  The compiled
kernel in ``_kernels.pyx`` implements the identical algorithm on packed
integer keys; both must produce identical output on every input.

Coefficients are opaque ring elements supporting ``+``, ``*`` and a falsy
zero (int, Fraction and MoriElement all qualify).
"""


def reachable(exponents, remaining, facets):
    """Can this monomial still cancel to zero within ``remaining`` steps?

    True iff there is an integer j in [0, remaining] with -m inside the
    j-fold dilation of the Newton polytope described by ``facets``
    (inequalities <a, x> >= b).  j = 0 admits only the zero exponent; for
    j >= 1 each facet bounds j from one side, so the test reduces to an
    integer interval intersection.
    """
    if not any(exponents):
        return True
    if remaining < 1:
        return False
    lo, hi = 1, remaining
    for normal, offset in facets:
        dot = -sum(a * e for a, e in zip(normal, exponents))
        if offset > 0:
            q = dot // offset
            if q < hi:
                if lo > q:
                    return False
                hi = q
        elif offset < 0:
            q = -(dot // -offset)
            if q > lo:
                if q > hi:
                    return False
                lo = q
        elif dot < 0:
            return False
    return True


def power_constant_terms(exps, coefs, rank, degree, facets, one, zero):
    """Constant terms of f^0..f^degree for f given by parallel term lists."""
    out = [one]
    if degree == 0:
        return out
    zero_exp = (0,) * rank
    fterms = [(tuple(e), c) for e, c in zip(exps, coefs)]
    current = {zero_exp: one}
    for step in range(1, degree + 1):
        acc = {}
        for e, c in current.items():
            for fe, fc in fterms:
                ne = tuple(a + b for a, b in zip(e, fe))
                value = c * fc
                if ne in acc:
                    acc[ne] = acc[ne] + value
                else:
                    acc[ne] = value
        remaining = degree - step
        current = {}
        for e, c in acc.items():
            if not c:
                continue
            if facets is None or reachable(e, remaining, facets):
                current[e] = c
        out.append(current.get(zero_exp, zero))
    return out
