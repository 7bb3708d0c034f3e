"""Pure-Python polynomial kernels.

Coefficient lists are dense, index k = coefficient of x^k, with no trailing
zeros.  All three kernels share the 64-bit checked-arithmetic contract with
the compiled backend: any output coefficient outside the signed 64-bit range
raises CoefficientOverflow instead of wrapping.
"""

from cycgap.errors import CoefficientOverflow, InexactDivision, NonMonicDivisor

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

BACKEND = "pure"


def _canonical(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    del coeffs[n:]
    return coeffs


def _checked(coeffs):
    for c in coeffs:
        if c < INT64_MIN or c > INT64_MAX:
            raise CoefficientOverflow(f"coefficient {c} exceeds 64-bit range")
    return coeffs


def mul(a, b):
    """Exact product of two canonical coefficient lists."""
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            res[i + j] += ai * bj
    return _checked(_canonical(res))


def _geometric_sign(b):
    """1 if b = 1 + x + ... + x^d, -1 if b = 1 - x + x^2 - ... + x^d, else 0.

    Both shapes satisfy (x - s) * b = x^(d+1) - s for s = +-1, which turns
    division by b into two linear passes instead of a quadratic loop.
    """
    if len(b) < 2 or b[0] != 1:
        return 0
    if all(c == 1 for c in b):
        return 1
    if len(b) % 2 and all(c == (-1) ** j for j, c in enumerate(b)):
        return -1
    return 0


def _exact_div_geometric(a, b, s):
    m = len(b)  # modulus exponent: (x - s) * b = x^m - s
    # a * (x - s)
    work = [0] * (len(a) + 1)
    for k, c in enumerate(a):
        work[k + 1] += c
        work[k] -= s * c
    quot = [0] * (len(work) - m)
    for k in range(len(work) - 1, m - 1, -1):
        c = work[k]
        if c:
            quot[k - m] = c
            work[k - m] += s * c
    if any(work[:m]):
        raise InexactDivision("nonzero remainder")
    return _checked(_canonical(quot))


def exact_div(a, b):
    """Quotient q with a = q*b exactly; raises InexactDivision otherwise."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    if len(a) < len(b):
        raise InexactDivision("dividend degree below divisor degree")
    sign = _geometric_sign(b)
    if sign:
        return _exact_div_geometric(a, b, sign)
    lc = b[-1]
    db = len(b) - 1
    work = list(a)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        head = work[k]
        if head == 0:
            continue
        qc, rem = divmod(head, lc)
        if rem:
            raise InexactDivision("quotient is not an integer polynomial")
        quot[k - db] = qc
        for j in range(db + 1):
            work[k - db + j] -= qc * b[j]
    if any(work[:db]):
        raise InexactDivision("nonzero remainder")
    return _checked(_canonical(quot))


def rem_monic(a, b):
    """Remainder of a modulo a monic b with deg(b) >= 1."""
    if len(b) < 2:
        raise NonMonicDivisor("divisor must have degree >= 1")
    if b[-1] != 1:
        raise NonMonicDivisor("divisor must be monic")
    db = len(b) - 1
    if len(a) <= db:
        return list(a)
    work = list(a)
    for k in range(len(a) - 1, db - 1, -1):
        qc = work[k]
        if qc == 0:
            continue
        for j in range(db + 1):
            work[k - db + j] -= qc * b[j]
    del work[db:]
    return _checked(_canonical(work))
