"""Exact arithmetic in the rational function field Q(q).

A :class:`RatFunc` is a reduced quotient of two integer polynomials in
``q``.  The canonical form has coprime numerator and denominator (over
Z[q], contents included) and a denominator with positive leading
coefficient, so equality is tuple equality.

The polynomial kernel is chosen at import time: the compiled ``_cpoly``
extension when it has been built, otherwise the pure-Python ``_pypoly``.
Set ``QPODLES_KERNEL=python`` to force the fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd
from numbers import Rational

from qpodles._parse import Parser

if os.environ.get("QPODLES_KERNEL", "").lower() == "python":
    from qpodles import _pypoly as _kernel
else:
    try:
        from qpodles import _cpoly as _kernel
    except ImportError:  # extension not built
        from qpodles import _pypoly as _kernel

KERNEL = _kernel.__name__.rsplit(".", 1)[-1]

padd = _kernel.padd
psub = _kernel.psub
pmul = _kernel.pmul
pexquo = _kernel.pexquo
pgcd = _kernel.pgcd
pcontent = _kernel.pcontent
_canon = _kernel.canon

__all__ = ["RatFunc", "DivisionByZero", "PoleAtPoint", "Q", "ONE", "ZERO",
           "arith", "eval_at", "normalize", "KERNEL"]


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtPoint(ArithmeticError):
    pass


def _neg(a):
    return tuple(-x for x in a)


def _poly_text(p):
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((c < 0, body))
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _single_term(p):
    return sum(1 for c in p if c) == 1


class RatFunc:
    """Immutable element of Q(q) in canonical form."""

    __slots__ = ("num", "den", "_h")

    def __init__(self, num=(), den=(1,), *, canonical=False):
        num = tuple(num)
        den = tuple(den)
        if not canonical:
            num = _trim(num)
            den = _trim(den)
            if not den:
                raise DivisionByZero("zero denominator")
            num, den = _canon(num, den)
        self.num = num
        self.den = den
        self._h = None

    # construction -----------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return cls((x,) if x else (), (1,), canonical=True)
        if isinstance(x, Rational):
            x = Fraction(x)
            return cls((x.numerator,), (x.denominator,), canonical=True)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    @classmethod
    def q_power(cls, k: int, coeff=1) -> "RatFunc":
        """coeff * q^k for any integer k."""
        coeff = Fraction(coeff)
        if not coeff:
            return ZERO
        n, d = coeff.numerator, coeff.denominator
        if k >= 0:
            return cls((0,) * k + (n,), (d,), canonical=True)
        if d < 0:
            n, d = -n, -d
        return cls((n,), (0,) * (-k) + (d,), canonical=True)

    @classmethod
    def poly(cls, coeffs) -> "RatFunc":
        """Polynomial from rational coefficients, lowest degree first."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(tuple(int(c * den) for c in fr), (den,))

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def is_monomial(self) -> bool:
        """True for c*q^k (a unit of Q[q, 1/q])."""
        return _single_term(self.num) and _single_term(self.den)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def complexity(self) -> int:
        """Pivot-selection cost: total degree plus coefficient bit length."""
        bits = max((abs(c).bit_length() for c in self.num), default=0)
        bits += max(abs(c).bit_length() for c in self.den)
        return 4 * (len(self.num) + len(self.den) - 2) + bits + (0 if self.is_monomial() else 64)

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc(padd(self.num, o.num), self.den)
        return RatFunc(padd(pmul(self.num, o.den), pmul(o.num, self.den)),
                       pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_neg(self.num), self.den, canonical=True)

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if self.den == o.den:
            return RatFunc(psub(self.num, o.num), self.den)
        return RatFunc(psub(pmul(self.num, o.den), pmul(o.num, self.den)),
                       pmul(self.den, o.den))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        if o.den == (1,) and o.num == (1,):
            return self
        if self.den == (1,) and self.num == (1,):
            return o
        return RatFunc(pmul(self.num, o.num), pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _neg(num), _neg(den)
        return RatFunc(num, den, canonical=True)

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by zero in Q(q)")
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        h = self._h
        if h is None:
            if self.den == (1,) and len(self.num) <= 1:
                h = hash(self.num[0] if self.num else 0)
            else:
                h = hash((self.num, self.den))
            self._h = h
        return h

    # evaluation / text -------------------------------------------------
    def eval_at(self, q0) -> Fraction:
        q0 = Fraction(q0)
        d = _horner(self.den, q0)
        if not d:
            raise PoleAtPoint(f"{self} has a pole at q = {q0}")
        return _horner(self.num, q0) / d

    def to_text(self) -> str:
        n = _poly_text(self.num)
        if self.den == (1,):
            return n
        if not _single_term(self.num):
            n = f"({n})"
        d = _poly_text(self.den)
        bare = len(self.den) == 1 or (self.den[-1] == 1 and _single_term(self.den))
        if not bare:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RatFunc({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        """Parse text such as ``(1-q^4)/(1-q^6)``; raises ParseError."""
        atoms = {"q": Q}
        return Parser(text, atoms.__getitem__, cls.coerce).parse()


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


def _horner(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


ZERO = RatFunc((), (1,), canonical=True)
ONE = RatFunc((1,), (1,), canonical=True)
Q = RatFunc((0, 1), (1,), canonical=True)


def normalize(x: RatFunc) -> RatFunc:
    return RatFunc(x.num, x.den)


def arith(op: str, x, y=None) -> RatFunc:
    """Dispatch ``add|sub|mul|div|neg`` on RatFunc operands."""
    x = RatFunc.coerce(x)
    if op == "neg":
        return -x
    y = RatFunc.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def eval_at(x, q0) -> Fraction:
    return RatFunc.coerce(x).eval_at(q0)
