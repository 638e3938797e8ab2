"""Bitmask kernels with a compiled backend and a pure-Python fallback.

The compiled module ``_ckernels`` is used when it imports and the input fits
in 64-bit words; otherwise calls go to ``_pykernels``. Set the environment
variable ``RELMATROID_PURE_PYTHON=1`` to force the fallback.

``BACKEND`` names the active backend (``"cython"`` or ``"python"``).
"""
import os

from . import _pykernels

#: Largest universe handled by the fixed-width (uint64) compiled path.
FIXED_WIDTH_LIMIT = 64
# A set family over n elements needs 2**n bits.
_FAMILY_WIDTH_LIMIT = 6
_ENUMERATION_WIDTH_LIMIT = 5

UNION = _pykernels.UNION
INTERSECTION = _pykernels.INTERSECTION
MONOTONE = _pykernels.MONOTONE

_c = None
if not os.environ.get("RELMATROID_PURE_PYTHON"):
    try:
        from . import _ckernels as _c
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"


def backends():
    """Return the available backend modules keyed by name."""
    out = {"python": _pykernels}
    if _c is not None:
        out["cython"] = _c
    return out


def _pick(n, limit=FIXED_WIDTH_LIMIT):
    return _c if _c is not None and n <= limit else _pykernels


def popcount(x):
    return x.bit_count()


def transpose(rows, n):
    return _pick(n).transpose(rows, n)


def is_reflexive(rows):
    return _pick(len(rows)).is_reflexive(rows)


def is_symmetric(rows):
    return _pick(len(rows)).is_symmetric(rows)


def is_transitive(rows):
    return _pick(len(rows)).is_transitive(rows)


def upper_approx(rows, x):
    return _pick(len(rows)).upper_approx(rows, x)


def lower_approx(rows, x):
    return _pick(len(rows)).lower_approx(rows, x)


def upper_table(rows, n):
    return _pick(n).upper_table(rows, n)


def lower_table(rows, n):
    return _pick(n).lower_table(rows, n)


def binary_law_failures(table, n, kind, cap):
    return _pick(n).binary_law_failures(table, n, kind, cap)


def family_is_matroid(fam, n):
    return _pick(n, _FAMILY_WIDTH_LIMIT).family_is_matroid(fam, n)


def matroid_families(n):
    return _pick(n, _ENUMERATION_WIDTH_LIMIT).matroid_families(n)


def family_rank_table(fam, n):
    return _pick(n, _FAMILY_WIDTH_LIMIT).family_rank_table(fam, n)


def closure_table(rank, n):
    return _pick(n).closure_table(rank, n)


def closure_axiom_failures(cl, n, cap):
    return _pick(n).closure_axiom_failures(cl, n, cap)
