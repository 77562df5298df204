# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled powering kernel.

Same algorithm as ``_kernels_py``: incremental products with reachability
pruning.  Exponent vectors are packed into int64 linear indices over the
bounding box of everything reachable in ``degree`` steps, so the inner loop
is integer key arithmetic plus dict accumulation of ring elements.  Inputs
whose box or facet products would overflow 62 bits raise
KernelCapacityError and the dispatcher reruns the call on the pure kernel.
"""

from array import array

from .errors import KernelCapacityError

DEF BITCAP = 62


cdef inline long long floor_div(long long p, long long q):
    # q > 0; C division truncates toward zero
    cdef long long d = p / q
    if p % q != 0 and p < 0:
        d -= 1
    return d


cdef inline bint reachable_c(long long key, long long remaining, int n,
                             long long[::1] strides, long long[::1] lows,
                             int nfacets, long long[::1] fnormals,
                             long long[::1] foffsets, long long[::1] ebuf):
    cdef long long tmp = key
    cdef long long d, dot, q, lo, hi, b
    cdef int i, f
    cdef bint allzero = 1
    for i in range(n):
        d = tmp / strides[i]
        tmp -= d * strides[i]
        ebuf[i] = d + lows[i]
        if ebuf[i] != 0:
            allzero = 0
    if allzero:
        return 1
    if remaining < 1:
        return 0
    lo = 1
    hi = remaining
    for f in range(nfacets):
        dot = 0
        for i in range(n):
            dot -= fnormals[f * n + i] * ebuf[i]
        b = foffsets[f]
        if b > 0:
            q = floor_div(dot, b)
            if q < hi:
                if lo > q:
                    return 0
                hi = q
        elif b < 0:
            q = -floor_div(dot, -b)
            if q > lo:
                if q > hi:
                    return 0
                lo = q
        elif dot < 0:
            return 0
    return 1


def power_constant_terms(exps, coefs, int rank, int degree, facets, one, zero):
    """Constant terms of f^0..f^degree (see _kernels_py for the contract)."""
    out = [one]
    if degree == 0:
        return out
    if not exps:
        return out + [zero] * degree

    cdef int n = rank
    cdef int m = len(exps)
    cdef int i, j

    points = [tuple(e) for e in exps]
    lows_py = [min(0, degree * min(p[i] for p in points)) for i in range(n)]
    highs_py = [max(0, degree * max(p[i] for p in points)) for i in range(n)]
    widths_py = [hi - lo + 1 for lo, hi in zip(lows_py, highs_py)]

    total = 1
    for w in widths_py:
        total *= w
    if total >= (1 << BITCAP):
        raise KernelCapacityError("reachable exponent box exceeds packed-key capacity")

    strides_py = [0] * n
    acc = 1
    for i in range(n - 1, -1, -1):
        strides_py[i] = acc
        acc *= widths_py[i]

    facet_list = list(facets) if facets is not None else []
    cdef int nfacets = len(facet_list)
    bound = 0
    for a, b in facet_list:
        s = sum(abs(ai) * max(abs(lo), abs(hi)) for ai, lo, hi in zip(a, lows_py, highs_py))
        raw = max(abs(b), max(abs(ai) for ai in a))
        bound = max(bound, n * max(s, 1), abs(b) * max(degree, 1), raw)
    if bound >= (1 << BITCAP):
        raise KernelCapacityError("facet products exceed 64-bit range")

    cdef long long[::1] strides = array("q", strides_py)
    cdef long long[::1] lows = array("q", lows_py)
    cdef long long[::1] deltas = array(
        "q", [sum(p[i] * strides_py[i] for i in range(n)) for p in points]
    )
    cdef long long[::1] fnormals = array(
        "q", [v for a, _ in facet_list for v in a] or [0]
    )
    cdef long long[::1] foffsets = array("q", [b for _, b in facet_list] or [0])
    cdef long long[::1] ebuf = array("q", [0] * n)

    cdef long long key0 = sum((0 - lo) * s for lo, s in zip(lows_py, strides_py))
    cdef long long kk, nk, remaining
    cdef bint prune = facets is not None

    fcoefs = tuple(coefs)
    current = {key0: one}
    for step in range(1, degree + 1):
        staged = {}
        for key_obj, c in current.items():
            kk = key_obj
            for j in range(m):
                nk = kk + deltas[j]
                value = c * fcoefs[j]
                prev = staged.get(nk)
                if prev is None:
                    staged[nk] = value
                else:
                    staged[nk] = prev + value
        remaining = degree - step
        current = {}
        for key_obj, c in staged.items():
            if not c:
                continue
            kk = key_obj
            if not prune or reachable_c(kk, remaining, n, strides, lows,
                                        nfacets, fnormals, foffsets, ebuf):
                current[key_obj] = c
        out.append(current.get(key0, zero))
    return out
