"""Run-wide knobs: the subset-enumeration cap and the violation tolerance.

Both can be overridden from the environment with ``BROUWER_EXCESS_CAP`` and
``BROUWER_EXCESS_TOL``.
"""
from __future__ import annotations

import os
from math import comb

from .errors import CapExceededError

DEFAULT_CAP = 2_000_000
DEFAULT_VIOLATION_TOL = 1e-6

CAP_ENV = "BROUWER_EXCESS_CAP"
TOL_ENV = "BROUWER_EXCESS_TOL"


def enumeration_cap(cap: int | None = None) -> int:
    if cap is not None:
        return int(cap)
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


def violation_tol(tol: float | None = None) -> float:
    if tol is not None:
        return float(tol)
    return float(os.environ.get(TOL_ENV, DEFAULT_VIOLATION_TOL))


def within_cap(n: int, k: int, cap: int | None = None) -> bool:
    return comb(n, k) <= enumeration_cap(cap)


def check_cap(n: int, k: int, cap: int | None = None) -> int:
    """Return C(n, k), raising :class:`CapExceededError` if it is over the cap."""
    size = comb(n, k)
    limit = enumeration_cap(cap)
    if size > limit:
        raise CapExceededError(f"C({n},{k}) = {size} exceeds enumeration cap {limit}")
    return size
