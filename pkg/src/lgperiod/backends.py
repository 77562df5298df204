"""Kernel backend selection.

The compiled extension is preferred when built; the pure-Python kernel is
the fallback and the arbiter for inputs the packed-key representation cannot
hold.  Set LGPERIOD_BACKEND=python (or =c) to force a choice, or call
:func:`set_backend` at runtime (used by the tests and the benchmark).
"""

import os

from . import _kernels_py as _pure
from .errors import KernelCapacityError

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None


def available_backends():
    return ("c", "python") if _compiled is not None else ("python",)


def _initial_backend():
    requested = os.environ.get("LGPERIOD_BACKEND", "").strip().lower()
    if requested in ("python", "pure"):
        return "python"
    if requested in ("c", "compiled"):
        if _compiled is None:
            raise ImportError("LGPERIOD_BACKEND=c requested but the compiled kernel is not built")
        return "c"
    return "c" if _compiled is not None else "python"


_active = _initial_backend()


def active_backend():
    return _active


def set_backend(name):
    """Select 'c' or 'python'; returns the previous choice."""
    global _active
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available (have {available_backends()})")
    previous = _active
    _active = name
    return previous


def power_constant_terms(exps, coefs, rank, degree, facets, one, zero):
    if _active == "c":
        try:
            return _compiled.power_constant_terms(exps, coefs, rank, degree, facets, one, zero)
        except KernelCapacityError:
            pass
    return _pure.power_constant_terms(exps, coefs, rank, degree, facets, one, zero)
