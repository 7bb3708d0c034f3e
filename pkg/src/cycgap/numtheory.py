"""Integer-side helpers: factorization, totient, Moebius, radical, primality.

Trial division only; inputs are capped at FACTOR_CAP (desk scale).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from cycgap.errors import CapExceeded

FACTOR_CAP = 10**8


@dataclass(frozen=True)
class Factorization:
    """n together with its sorted prime factorization."""

    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    def __post_init__(self):
        prod = 1
        for prime, exp in self.factors:
            prod *= prime**exp
        assert prod == self.n, "factors do not multiply back to n"


def _check_range(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > FACTOR_CAP:
        raise CapExceeded(f"n = {n} exceeds the factorization cap {FACTOR_CAP}")


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    _check_range(n)
    factors = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    result = n
    for prime, _ in factorize(n).factors:
        result = result // prime * (prime - 1)
    return result


def radical(n: int) -> int:
    result = 1
    for prime, _ in factorize(n).factors:
        result *= prime
    return result


def mobius(n: int) -> int:
    factors = factorize(n).factors
    if any(exp > 1 for _, exp in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def is_squarefree(n: int) -> bool:
    return all(exp == 1 for _, exp in factorize(n).factors)


def is_prime(n: int) -> bool:
    if n < 2:
        _check_range(max(n, 1))
        return False
    factors = factorize(n).factors
    return len(factors) == 1 and factors[0][1] == 1


def psi_degree(m: int) -> int:
    """Degree of the m-th inverse cyclotomic polynomial: m - phi(m), and 0 at m=1."""
    if m == 1:
        return 0
    return m - euler_phi(m)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for prime, exp in factorize(n).factors:
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)
