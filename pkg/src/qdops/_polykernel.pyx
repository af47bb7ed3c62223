"""Compiled twin of _polykernel_py: dense Z[x] arithmetic on int lists.

Coefficients stay arbitrary-precision Python ints; the win over the pure
backend is loop and dispatch overhead, not limb arithmetic.
"""

from math import gcd

BACKEND = "cython"


def pnorm(a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n] if n != len(a) else a


def padd(a, b):
    cdef Py_ssize_t i, nb
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    nb = len(b)
    for i in range(nb):
        out[i] = out[i] + b[i]
    return pnorm(out)


def psub(a, b):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef list out = list(a)
    if nb > na:
        out.extend([0] * (nb - na))
    for i in range(nb):
        out[i] = out[i] - b[i]
    return pnorm(out)


def pneg(a):
    return [-c for c in a]


def pmul(a, b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        ca = a[i]
        if ca:
            for j in range(nb):
                out[i + j] = out[i + j] + ca * b[j]
    return pnorm(out)


def pmul_int(a, c):
    if c == 0:
        return []
    return [c * x for x in a]


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def pdiv_exact(a, b):
    cdef Py_ssize_t db, dq, k, j
    cdef list aa = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not aa:
        return []
    db = len(b) - 1
    lb = b[db]
    dq = len(aa) - 1 - db
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    cdef list q = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = aa[k + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        q[k] = c
        if c:
            for j in range(db + 1):
                aa[k + j] = aa[k + j] - c * b[j]
    for c in aa:
        if c:
            raise ArithmeticError("inexact polynomial division")
    return q


def _prem(a, b):
    cdef Py_ssize_t da, db = len(b) - 1, s, j
    cdef list aa = list(a)
    lb = b[db]
    while True:
        aa = pnorm(aa)
        da = len(aa) - 1
        if da < db:
            return aa
        la = aa[da]
        aa = [lb * c for c in aa]
        s = da - db
        for j in range(db + 1):
            aa[s + j] = aa[s + j] - la * b[j]


def pgcd(a, b):
    a, b = pnorm(a), pnorm(b)
    if not a:
        a, b = b, a
    if not b:
        if not a:
            return []
        g = pcontent(a)
        return [c // g if a[-1] > 0 else -c // g for c in a]
    ca, cb = pcontent(a), pcontent(b)
    cg = gcd(ca, cb)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, r
        if b:
            c = pcontent(b)
            b = [x // c for x in b]
    if a[-1] < 0:
        a = [-c for c in a]
    return [cg * c for c in a]
