# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels.

Same contract as the pure backend: dense canonical coefficient lists, exact
arithmetic, CoefficientOverflow for anything outside signed 64-bit.  Products
and division intermediates are carried in 128-bit integers with explicit
overflow checks, so no silent wrap is possible.
"""

from libc.stdlib cimport calloc, malloc, free

from cycgap.errors import CoefficientOverflow, InexactDivision, NonMonicDivisor

cdef extern from *:
    ctypedef long long i128 "__int128"
    bint _add_ov "__builtin_add_overflow"(i128, i128, i128*)
    bint _sub_ov "__builtin_sub_overflow"(i128, i128, i128*)
    bint _mul_ov "__builtin_mul_overflow"(i128, i128, i128*)

cdef long long INT64_MIN_C = -9223372036854775807 - 1
cdef long long INT64_MAX_C = 9223372036854775807

INT64_MIN = INT64_MIN_C
INT64_MAX = INT64_MAX_C

BACKEND = "compiled"


cdef i128* _to_i128(list coeffs, Py_ssize_t n) except NULL:
    cdef i128* buf = <i128*> malloc(n * sizeof(i128))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long v
    try:
        for i in range(n):
            v = coeffs[i]
            buf[i] = v
    except BaseException:
        free(buf)
        raise
    return buf


cdef list _from_i128(i128* buf, Py_ssize_t n):
    # Canonicalize and range-check on the way out.
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        if buf[i] < <i128> INT64_MIN_C or buf[i] > <i128> INT64_MAX_C:
            raise CoefficientOverflow("coefficient exceeds 64-bit range")
        out[i] = <long long> buf[i]
    return out


def mul(list a, list b):
    """Exact product of two canonical coefficient lists."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t nr = na + nb - 1
    cdef i128* ca = _to_i128(a, na)
    cdef i128* cb = NULL
    cdef i128* res = NULL
    cdef Py_ssize_t i, j
    cdef i128 t
    try:
        cb = _to_i128(b, nb)
        res = <i128*> calloc(nr, sizeof(i128))
        if res == NULL:
            raise MemoryError()
        for i in range(na):
            if ca[i] == 0:
                continue
            for j in range(nb):
                if _mul_ov(ca[i], cb[j], &t) or _add_ov(res[i + j], t, &res[i + j]):
                    raise CoefficientOverflow("intermediate exceeds 128-bit range")
        return _from_i128(res, nr)
    finally:
        free(ca)
        free(cb)
        free(res)


cdef int _geometric_sign(list b):
    # 1 for 1 + x + ... + x^d, -1 for 1 - x + x^2 - ... + x^d, else 0.
    # Both satisfy (x - s) * b = x^(d+1) - s, enabling a linear division path.
    cdef Py_ssize_t nb = len(b), j
    if nb < 2 or b[0] != 1:
        return 0
    cdef bint ones = True, alt = nb % 2 == 1
    for j in range(nb):
        if b[j] != 1:
            ones = False
        if alt and b[j] != (1 if j % 2 == 0 else -1):
            alt = False
        if not ones and not alt:
            return 0
    return 1 if ones else -1


cdef list _exact_div_geometric(list a, Py_ssize_t m, long long s):
    cdef Py_ssize_t na = len(a), nw = na + 1, k
    cdef i128* work = <i128*> calloc(nw, sizeof(i128))
    if work == NULL:
        raise MemoryError()
    cdef i128 c
    cdef long long v
    try:
        for k in range(na):
            v = a[k]
            work[k + 1] += v
            work[k] -= s * v
        for k in range(nw - 1, m - 1, -1):
            c = work[k]
            if c != 0 and _add_ov(work[k - m], s * c, &work[k - m]):
                raise CoefficientOverflow("intermediate exceeds 128-bit range")
        for k in range(m):
            if work[k] != 0:
                raise InexactDivision("nonzero remainder")
        return _from_i128(work + m, nw - m)
    finally:
        free(work)


def exact_div(list a, list b):
    """Quotient q with a = q*b exactly; raises InexactDivision otherwise."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na == 0:
        return []
    if na < nb:
        raise InexactDivision("dividend degree below divisor degree")
    cdef int sign = _geometric_sign(b)
    if sign != 0:
        return _exact_div_geometric(a, nb, sign)
    cdef Py_ssize_t db = nb - 1
    cdef i128* work = _to_i128(a, na)
    cdef i128* cb = NULL
    cdef i128* quot = NULL
    cdef Py_ssize_t k, j
    cdef i128 lc, qc, t
    try:
        cb = _to_i128(b, nb)
        lc = cb[db]
        if lc == 0:
            raise ZeroDivisionError("divisor not canonical: zero leading coefficient")
        quot = <i128*> calloc(na - db, sizeof(i128))
        if quot == NULL:
            raise MemoryError()
        for k in range(na - 1, db - 1, -1):
            if work[k] == 0:
                continue
            qc = work[k] / lc
            if qc * lc != work[k]:
                raise InexactDivision("quotient is not an integer polynomial")
            quot[k - db] = qc
            for j in range(db + 1):
                if _mul_ov(qc, cb[j], &t) or _sub_ov(work[k - db + j], t, &work[k - db + j]):
                    raise CoefficientOverflow("intermediate exceeds 128-bit range")
        for j in range(db):
            if work[j] != 0:
                raise InexactDivision("nonzero remainder")
        return _from_i128(quot, na - db)
    finally:
        free(work)
        free(cb)
        free(quot)


def rem_monic(list a, list b):
    """Remainder of a modulo a monic b with deg(b) >= 1."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb < 2:
        raise NonMonicDivisor("divisor must have degree >= 1")
    if b[nb - 1] != 1:
        raise NonMonicDivisor("divisor must be monic")
    if na < nb:
        return list(a)
    cdef Py_ssize_t db = nb - 1
    cdef i128* work = _to_i128(a, na)
    cdef i128* cb = NULL
    cdef Py_ssize_t k, j
    cdef i128 qc, t
    try:
        cb = _to_i128(b, nb)
        for k in range(na - 1, db - 1, -1):
            qc = work[k]
            if qc == 0:
                continue
            for j in range(db + 1):
                if _mul_ov(qc, cb[j], &t) or _sub_ov(work[k - db + j], t, &work[k - db + j]):
                    raise CoefficientOverflow("intermediate exceeds 128-bit range")
        return _from_i128(work, db)
    finally:
        free(work)
        free(cb)
