"""Exact dense integer polynomials.

An IntPoly holds a canonical tuple of signed 64-bit coefficients, index k
being the coefficient of x^k; the zero polynomial is the empty tuple.  All
operations are exact and return canonical values; a coefficient leaving the
64-bit range raises CoefficientOverflow rather than wrapping.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from cycgap import _kernels
from cycgap.errors import (
    CoefficientOverflow,
    DegreeTooLarge,
    ZeroPolynomial,
)

INT64_MIN = _kernels.INT64_MIN
INT64_MAX = _kernels.INT64_MAX


class IntPoly:
    """Immutable dense polynomial over checked 64-bit integers."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an int")
            if c < INT64_MIN or c > INT64_MAX:
                raise CoefficientOverflow(f"coefficient {c} exceeds 64-bit range")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _from_kernel(cls, coeffs: list[int]) -> IntPoly:
        # Kernel outputs are already canonical and range-checked.
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        return p

    @classmethod
    def zero(cls) -> IntPoly:
        return cls()

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPoly:
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def x_pow_minus_one(cls, n: int) -> IntPoly:
        """x^n - 1."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls([-1] + [0] * (n - 1) + [1])

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; undefined (raises) for zero."""
        if not self.coeffs:
            raise ZeroPolynomial("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def trailing_degree(self) -> int:
        """Least exponent with a nonzero coefficient."""
        if not self.coeffs:
            raise ZeroPolynomial("trailing degree of the zero polynomial is undefined")
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise AssertionError("non-canonical coefficients")

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def exponents(self) -> list[int]:
        """Exponents of the nonzero terms, ascending."""
        return [k for k, c in enumerate(self.coeffs) if c]

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPoly(res)

    def __neg__(self) -> IntPoly:
        # Constructor re-checks: negating INT64_MIN leaves the range.
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        return IntPoly._from_kernel(_kernels.mul(list(self.coeffs), list(other.coeffs)))

    def scale(self, c: int) -> IntPoly:
        return IntPoly([c * a for a in self.coeffs])

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Quotient q with self = q * other exactly."""
        return IntPoly._from_kernel(
            _kernels.exact_div(list(self.coeffs), list(other.coeffs))
        )

    def rem_monic(self, other: IntPoly) -> IntPoly:
        """Remainder of self modulo a monic divisor of degree >= 1."""
        return IntPoly._from_kernel(
            _kernels.rem_monic(list(self.coeffs), list(other.coeffs))
        )

    def truncate(self, s: int) -> IntPoly:
        """Keep only the terms of exponent < s (remainder modulo x^s)."""
        if s < 0:
            raise ValueError("s must be >= 0")
        return IntPoly(self.coeffs[:s])

    def rotate(self, m: int, s: int) -> IntPoly:
        """Cyclic left rotation of the length-m coefficient window by s.

        Equals the remainder of x^(m-s) * self modulo x^m - 1; entry k of the
        result is entry (k+s) mod m of self.
        """
        if not 0 <= s < m:
            raise ValueError("need 0 <= s < m")
        if len(self.coeffs) > m:
            raise DegreeTooLarge(f"degree {len(self.coeffs) - 1} not below window {m}")
        window = list(self.coeffs) + [0] * (m - len(self.coeffs))
        return IntPoly(window[s:] + window[:s])

    def compose_power(self, k: int) -> IntPoly:
        """Substitute x <- x^k."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if k == 1 or not self.coeffs:
            return self
        res = [0] * ((len(self.coeffs) - 1) * k + 1)
        for j, c in enumerate(self.coeffs):
            res[j * k] = c
        return IntPoly._from_kernel(res)

    def substitute_neg(self) -> IntPoly:
        """Return p(-x)."""
        return IntPoly([-c if k % 2 else c for k, c in enumerate(self.coeffs)])

    def max_gap(self) -> int:
        """Largest difference between consecutive exponents of nonzero terms.

        A single-term polynomial has gap 0; the zero polynomial is an error.
        """
        exps = self.exponents()
        if not exps:
            raise ZeroPolynomial("max gap of the zero polynomial is undefined")
        return max(
            (b - a for a, b in zip(exps, exps[1:])),
            default=0,
        )

    def gap_witness(self) -> tuple[int, int]:
        """An exponent pair (e_{k-1}, e_k) achieving the maximum gap.

        For a single-term polynomial returns the term twice (gap 0).
        """
        exps = self.exponents()
        if not exps:
            raise ZeroPolynomial("max gap of the zero polynomial is undefined")
        if len(exps) == 1:
            return (exps[0], exps[0])
        return max(zip(exps, exps[1:]), key=lambda pair: pair[1] - pair[0])

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)


def format_poly(p: IntPoly) -> str:
    """Render with ascending exponents: '1 - x^1 + x^3', '-1 + 2*x^4', '0'."""
    if p.is_zero():
        return "0"
    parts = []
    for k in p.exponents():
        c = p.coeffs[k]
        if k == 0:
            term = str(abs(c))
        elif abs(c) == 1:
            term = f"x^{k}"
        else:
            term = f"{abs(c)}*x^{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)
