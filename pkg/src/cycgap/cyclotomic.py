"""Reference construction of cyclotomic and inverse cyclotomic polynomials.

phi_poly_oracle computes Phi_n by dividing x^n - 1 by Phi_d for every proper
divisor d, recursively.  This is the ground truth the block engine is checked
against, so it deliberately never touches the block construction.
"""

from __future__ import annotations

import threading

from cycgap.errors import CapExceeded
from cycgap.intpoly import IntPoly
from cycgap.numtheory import divisors, radical

DEFAULT_CAP = 200_000

# Polynomials with n above this are cheap to lose: they are used once, while
# small n are revisited constantly by the divisor recursion.
_MEMO_LIMIT = 5_000

_cache: dict[int, IntPoly] = {}
_psi_cache: dict[int, IntPoly] = {}
_lock = threading.Lock()


def clear_cache() -> None:
    with _lock:
        _cache.clear()
        _psi_cache.clear()


def phi_poly_oracle(n: int, cap: int = DEFAULT_CAP) -> IntPoly:
    """The n-th cyclotomic polynomial, by recursive divisor-product division."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the cap {cap}")
    cached = _cache.get(n)
    if cached is not None:
        return cached
    poly = IntPoly.x_pow_minus_one(n)
    for d in divisors(n)[:-1]:
        poly = poly.exact_div(phi_poly_oracle(d, cap))
    if n <= _MEMO_LIMIT:
        with _lock:
            _cache[n] = poly
    return poly


def phi_poly_radical(n: int, cap: int = DEFAULT_CAP) -> IntPoly:
    """Phi_n via Phi_radical(n) with x -> x^(n/radical(n))."""
    rad = radical(n)
    return phi_poly_oracle(rad, cap).compose_power(n // rad)


def psi_poly(n: int, cap: int = DEFAULT_CAP) -> IntPoly:
    """The n-th inverse cyclotomic polynomial (x^n - 1) / Phi_n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cached = _psi_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        poly = IntPoly([1])
    else:
        poly = IntPoly.x_pow_minus_one(n).exact_div(phi_poly_oracle(n, cap))
    if n <= _MEMO_LIMIT:
        with _lock:
            _psi_cache[n] = poly
    return poly


def gap_phi(n: int, cap: int = DEFAULT_CAP) -> int:
    """Maximum gap of Phi_n by direct scan of the oracle polynomial."""
    return phi_poly_oracle(n, cap).max_gap()
