# cython: language_level=3, cdivision=True
"""Compiled dense integer polynomial kernel (same API as ``_pypoly``).

Coefficients stay Python ints at the interface.  Each operation first
bounds the result size from the operand bit lengths; when everything fits
in a signed 64-bit word the work is done on C arrays, otherwise it falls
back to arbitrary-precision loops.
"""

from libc.stdlib cimport malloc, free
from math import gcd as _pygcd

__all__ = ["padd", "psub", "pneg", "pmul", "pscale", "pexquo", "pexquo_int",
           "pcontent", "pgcd", "prem", "canon"]

cdef int SAFE_BITS = 62


cdef inline int _bits(tuple a):
    """Max bit length of the coefficients, or 64 if any exceeds 62 bits."""
    cdef int best = 0, b
    for x in a:
        b = (<object>x).bit_length()
        if b > SAFE_BITS:
            return 64
        if b > best:
            best = b
    return best


cdef inline int _nbits(Py_ssize_t n):
    cdef int b = 0
    while n:
        b += 1
        n >>= 1
    return b


cdef tuple _trim(list c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def padd(tuple a, tuple b):
    cdef Py_ssize_t i, la, lb
    if len(a) < len(b):
        a, b = b, a
    la = len(a)
    lb = len(b)
    if not lb:
        return a
    cdef list c = list(a)
    if _bits(a) < SAFE_BITS and _bits(b) < SAFE_BITS:
        for i in range(lb):
            c[i] = <long long>c[i] + <long long>b[i]
    else:
        for i in range(lb):
            c[i] = c[i] + b[i]
    return _trim(c) if la == lb else tuple(c)


def psub(tuple a, tuple b):
    cdef Py_ssize_t i, n
    if not b:
        return a
    n = max(len(a), len(b))
    cdef list c = list(a) + [0] * (n - len(a))
    if _bits(a) < SAFE_BITS and _bits(b) < SAFE_BITS:
        for i in range(len(b)):
            c[i] = <long long>c[i] - <long long>b[i]
    else:
        for i in range(len(b)):
            c[i] = c[i] - b[i]
    return _trim(c)


def pneg(tuple a):
    return tuple([-x for x in a])


def pscale(tuple a, k):
    if not k:
        return ()
    return tuple([x * k for x in a])


def pmul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, n
    cdef long long* ca
    cdef long long* cb
    cdef long long* cc
    cdef long long x
    if not la or not lb:
        return ()
    if la == 1:
        return pscale(b, a[0])
    if lb == 1:
        return pscale(a, b[0])
    n = la + lb - 1
    if _bits(a) + _bits(b) + _nbits(min(la, lb)) < 63:
        ca = <long long*>malloc(la * sizeof(long long))
        cb = <long long*>malloc(lb * sizeof(long long))
        cc = <long long*>malloc(n * sizeof(long long))
        try:
            for i in range(la):
                ca[i] = a[i]
            for j in range(lb):
                cb[j] = b[j]
            for i in range(n):
                cc[i] = 0
            for i in range(la):
                x = ca[i]
                if x:
                    for j in range(lb):
                        cc[i + j] += x * cb[j]
            return tuple([cc[i] for i in range(n)])
        finally:
            free(ca)
            free(cb)
            free(cc)
    cdef list c = [0] * n
    for i in range(la):
        xo = a[i]
        if xo:
            for j in range(lb):
                c[i + j] += xo * b[j]
    return tuple(c)


cdef long long _llgcd(long long u, long long v):
    cdef long long t
    if u < 0:
        u = -u
    if v < 0:
        v = -v
    while v:
        t = u % v
        u = v
        v = t
    return u


def pcontent(tuple a):
    cdef long long g = 0
    if _bits(a) < SAFE_BITS:
        for x in a:
            g = _llgcd(g, <long long>x)
            if g == 1:
                break
        return g
    go = 0
    for x in a:
        go = _pygcd(go, x)
        if go == 1:
            break
    return go


def pexquo_int(tuple a, k):
    return tuple([x // k for x in a])


def pexquo(tuple a, tuple b):
    """Exact quotient a / b in Z[q]; raises ArithmeticError if inexact."""
    cdef Py_ssize_t db, nq, i, j
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    if db == 0:
        k = b[0]
        out = []
        for x in a:
            qv, rest = divmod(x, k)
            if rest:
                raise ArithmeticError("inexact polynomial division")
            out.append(qv)
        return tuple(out)
    cdef list r = list(a)
    lb = b[-1]
    nq = len(a) - db
    if nq <= 0:
        raise ArithmeticError("inexact polynomial division")
    cdef list quo = [0] * nq
    for i in range(nq - 1, -1, -1):
        c = r[i + db]
        if c:
            qv, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            quo[i] = qv
            for j in range(db + 1):
                r[i + j] -= qv * b[j]
    for i in range(db):
        if r[i]:
            raise ArithmeticError("inexact polynomial division")
    return tuple(quo)


def prem(tuple a, tuple b):
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    cdef Py_ssize_t db = len(b) - 1, e = len(a) - db, shift, j
    if e <= 0:
        return a
    lb = b[-1]
    cdef list r = list(a)
    while len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r = list(_trim(r))
        e -= 1
    if e:
        k = lb ** e
        r = [x * k for x in r]
    return tuple(r)


cdef tuple _primitive(tuple a):
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    return pexquo_int(a, c) if c != 1 else a


def pgcd(tuple a, tuple b):
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if not a:
        return _primitive(b) if b else ()
    if not b:
        return _primitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    if len(a) < len(b):
        a, b = b, a
    a = _primitive(a)
    b = _primitive(b)
    g = h = 1
    cdef Py_ssize_t delta
    while True:
        delta = len(a) - len(b)
        r = prem(a, b)
        if not r:
            return _primitive(b)
        if len(r) == 1:
            return (1,)
        a, b = b, pexquo_int(r, g * h ** delta)
        g = a[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)


cdef bint _single_term(tuple p):
    cdef int n = 0
    for c in p:
        if c:
            n += 1
    return n == 1


def canon(tuple num, tuple den):
    """Reduce num/den (trimmed tuples) to coprime form with den[-1] > 0."""
    cdef Py_ssize_t v, w, m
    if not num:
        return (), (1,)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if len(den) > 1:
        v = 0
        while not num[v]:
            v += 1
        w = 0
        while not den[w]:
            w += 1
        m = min(v, w)
        if m:
            num = num[m:]
            den = den[m:]
        if not _single_term(num) and not _single_term(den):
            g = pgcd(num, den)
            if len(g) > 1:
                num = pexquo(num, g)
                den = pexquo(den, g)
    c = _pygcd(pcontent(num), pcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = pexquo_int(num, c)
        den = pexquo_int(den, c)
    return num, den
