"""Dense integer polynomial kernel, pure Python.

Polynomials are tuples of ints, lowest degree first, without trailing
zeros; the zero polynomial is the empty tuple.  The compiled kernel
``_cpoly`` exposes the same functions.
"""

from math import gcd

__all__ = ["padd", "psub", "pneg", "pmul", "pscale", "pexquo", "pexquo_int",
           "pcontent", "pgcd", "prem", "canon"]


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return _trim(c) if len(a) == len(b) else tuple(c)


def psub(a, b):
    if not b:
        return a
    n = max(len(a), len(b))
    c = list(a) + [0] * (n - len(a))
    for i, x in enumerate(b):
        c[i] -= x
    return _trim(c)


def pneg(a):
    return tuple(-x for x in a)


def pscale(a, k):
    if not k:
        return ()
    return tuple(x * k for x in a)


def pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return pscale(b, a[0])
    if len(b) == 1:
        return pscale(a, b[0])
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return tuple(c)


def pcontent(a):
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def pexquo_int(a, k):
    return tuple(x // k for x in a)


def pexquo(a, b):
    """Exact quotient a / b in Z[q]; raises ArithmeticError if inexact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    if db == 0:
        k = b[0]
        out = []
        for x in a:
            qv, r = divmod(x, k)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(qv)
        return tuple(out)
    r = list(a)
    lb = b[-1]
    nq = len(a) - db
    if nq <= 0:
        raise ArithmeticError("inexact polynomial division")
    quo = [0] * nq
    for i in range(nq - 1, -1, -1):
        c = r[i + db]
        if c:
            qv, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            quo[i] = qv
            for j in range(db + 1):
                r[i + j] -= qv * b[j]
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quo)


def prem(a, b):
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    e = len(a) - db
    if e <= 0:
        return tuple(a)
    lb = b[-1]
    r = list(a)
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


def _primitive(a):
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    return pexquo_int(a, c) if c != 1 else a


def pgcd(a, b):
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


def _single_term(p):
    return sum(1 for c in p if c) == 1


def canon(num, den):
    """Reduce num/den (trimmed tuples) to coprime form with den[-1] > 0."""
    if not num:
        return (), (1,)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if len(den) > 1:
        # strip the common power of q first; cheap and very common here
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
    c = gcd(pcontent(num), pcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = pexquo_int(num, c)
        den = pexquo_int(den, c)
    return num, den
