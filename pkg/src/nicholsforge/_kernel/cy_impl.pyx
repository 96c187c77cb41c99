# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of py_impl.

Same contract, same coefficient-tuple representation; the rationals stay
Python objects (gmpy2.mpq or Fraction), so the speedup comes from typed
loop counters and avoided interpreter dispatch in the elimination loops.
Keep function-for-function parity with py_impl.py.
"""

from .._rat import RAT, R_ONE, R_ZERO

IMPL = "cython"

_R_ZERO = R_ZERO
_R_ONE = R_ONE


def poly_is_zero(a):
    for c in a:
        if c:
            return False
    return True


def poly_add(a, b):
    cdef Py_ssize_t i, n = len(a)
    out = [None] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


def poly_sub(a, b):
    cdef Py_ssize_t i, n = len(a)
    out = [None] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


def poly_neg(a):
    cdef Py_ssize_t i, n = len(a)
    out = [None] * n
    for i in range(n):
        out[i] = -a[i]
    return tuple(out)


def poly_scale(a, s):
    cdef Py_ssize_t i, n = len(a)
    out = [None] * n
    if not s:
        for i in range(n):
            out[i] = _R_ZERO
    else:
        for i in range(n):
            out[i] = a[i] * s
    return tuple(out)


def poly_mul(a, b, red):
    cdef Py_ssize_t i, j, k, e, phi = len(a)
    if phi == 1:
        return (a[0] * b[0],)
    prod = [_R_ZERO] * (2 * phi - 1)
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    prod[i + j] = prod[i + j] + ai * bj
    out = prod[:phi]
    for e in range(phi, 2 * phi - 1):
        c = prod[e]
        if c:
            row = red[e - phi]
            for k in range(phi):
                rk = row[k]
                if rk:
                    out[k] = out[k] + c * rk
    return tuple(out)


def _trim(coeffs):
    cdef Py_ssize_t n = len(coeffs)
    while n > 0 and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


def _poly_divmod(num, den):
    cdef Py_ssize_t i, k, dd = len(den) - 1
    num = list(num)
    lead_inv = _R_ONE / den[dd]
    cdef Py_ssize_t qlen = len(num) - dd
    if qlen < 0:
        qlen = 0
    quot = [_R_ZERO] * qlen
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q = c * lead_inv
            quot[i - dd] = q
            for k in range(dd + 1):
                num[i - dd + k] = num[i - dd + k] - q * den[k]
    return quot, _trim(num)


def poly_inv(a, modpoly):
    cdef Py_ssize_t i, j, phi = len(a)
    if poly_is_zero(a):
        raise ZeroDivisionError("inverse of zero")
    if phi == 1:
        return (_R_ONE / a[0],)
    r0, r1 = list(modpoly), _trim(list(a))
    t0, t1 = [], [_R_ONE]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        tlen = len(q) + len(t1) - 1
        if tlen < len(t0):
            tlen = len(t0)
        t = list(t0) + [_R_ZERO] * (tlen - len(t0))
        for i in range(len(q)):
            qi = q[i]
            if qi:
                for j in range(len(t1)):
                    tj = t1[j]
                    if tj:
                        t[i + j] = t[i + j] - qi * tj
        r0, r1 = r1, r
        t0, t1 = t1, _trim(t)
    if not r1:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    scale = _R_ONE / r1[0]
    out = [_R_ZERO] * phi
    for i in range(len(t1)):
        out[i] = t1[i] * scale
    return tuple(out)


def rref_rows(rows, red, modpoly):
    cdef Py_ssize_t nrows, ncols, col, i, j, fixed, best, weight, best_weight
    work = [list(r) for r in rows]
    nrows = len(work)
    if nrows == 0:
        return (), []
    ncols = len(work[0])
    pivots = []
    fixed = 0
    for col in range(ncols):
        best = -1
        best_weight = -1
        for i in range(fixed, nrows):
            if not poly_is_zero(work[i][col]):
                weight = 0
                rowi = work[i]
                for j in range(ncols):
                    if not poly_is_zero(rowi[j]):
                        weight += 1
                if best < 0 or weight < best_weight:
                    best = i
                    best_weight = weight
        if best < 0:
            continue
        if best != fixed:
            work[fixed], work[best] = work[best], work[fixed]
        pivot_row = work[fixed]
        inv = poly_inv(pivot_row[col], modpoly)
        for j in range(col, ncols):
            e = pivot_row[j]
            if not poly_is_zero(e):
                pivot_row[j] = poly_mul(e, inv, red)
        for i in range(nrows):
            if i == fixed:
                continue
            factor = work[i][col]
            if poly_is_zero(factor):
                continue
            row = work[i]
            for j in range(col, ncols):
                e = pivot_row[j]
                if not poly_is_zero(e):
                    row[j] = poly_sub(row[j], poly_mul(factor, e, red))
        pivots.append(col)
        fixed += 1
        if fixed == nrows:
            break
    return tuple(pivots), work[:fixed]
