"""The Podles sphere algebra as a PBW rewriting system.

Generators ``A``, ``B``, ``Bs`` (for B*) with

    B A  = q^2 A B
    Bs A = q^-2 A Bs
    Bs B = s^2 + (1 - s^2) A - A^2
    B Bs = s^2 + (1 - s^2) q^2 A - q^4 A^2

Normal forms are linear combinations of ``A^k B^j`` and ``A^k Bs^j``.
Products of basis monomials are computed in closed form and cached;
:func:`rewrite_word` applies the four rules literally and serves as an
independent check of :meth:`Podles.mul`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple

from qpodles._parse import ParseError, Parser
from qpodles.qscalar import ONE, ZERO, RatFunc

__all__ = ["PBWMonomial", "AlgebraElement", "AutoSpec", "Podles", "NONE", "LB", "LBS",
           "rewrite_word", "ParseError", "sigma", "mu", "IDENTITY"]

NONE, LB, LBS = 0, 1, 2   # ladder kinds: none, B, B*


class PBWMonomial(NamedTuple):
    """``A^a`` times a ladder ``B^j`` or ``Bs^j``; ``j == 0`` iff ``ladder == NONE``."""

    a: int
    ladder: int = NONE
    j: int = 0

    @property
    def degree(self) -> int:
        return self.a + self.j

    @property
    def weight(self) -> int:
        if self.ladder == LB:
            return self.j
        if self.ladder == LBS:
            return -self.j
        return 0

    def sort_key(self):
        return (self.a + self.j, -self.a, self.ladder, self.j)

    def text(self) -> str:
        parts = []
        if self.a:
            parts.append("A" if self.a == 1 else f"A^{self.a}")
        if self.ladder:
            g = "B" if self.ladder == LB else "Bs"
            parts.append(g if self.j == 1 else f"{g}^{self.j}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.text()


UNIT = PBWMonomial(0)


def mono(a: int = 0, ladder: int = NONE, j: int = 0) -> PBWMonomial:
    if j == 0:
        ladder = NONE
    elif ladder == NONE:
        raise ValueError("ladder exponent given without ladder kind")
    if a < 0 or j < 0:
        raise ValueError("negative exponent")
    return PBWMonomial(a, ladder, j)


@dataclass(frozen=True)
class AutoSpec:
    """Diagonal automorphism: ``sigma`` fixes A, ``mu`` negates it; both send B to lam*B."""

    kind: str
    lam: RatFunc = RatFunc((-1,), (1,), canonical=True)

    def __post_init__(self):
        if self.kind not in ("sigma", "mu"):
            raise ValueError(f"unknown automorphism kind {self.kind!r}")
        object.__setattr__(self, "lam", RatFunc.coerce(self.lam))
        if self.lam.is_zero():
            raise ValueError("lambda must be invertible")

    @property
    def is_identity(self) -> bool:
        return self.kind == "sigma" and self.lam.is_one()

    @property
    def is_involution(self) -> bool:
        return (self.lam * self.lam).is_one()

    @property
    def name(self) -> str:
        if self.is_identity:
            return "id"
        if self.lam == -1:
            return self.kind
        return f"{self.kind}[{self.lam}]"

    def factor(self, m: PBWMonomial) -> RatFunc:
        """Scalar by which the automorphism multiplies the monomial ``m``."""
        f = ONE
        if m.ladder == LB:
            f = self.lam ** m.j
        elif m.ladder == LBS:
            f = self.lam ** (-m.j)
        if self.kind == "mu" and m.a % 2:
            f = -f
        return f

    def sign(self, m: PBWMonomial) -> int:
        """Eigenvalue +-1 of an involutive action on ``m``."""
        f = self.factor(m)
        if f.is_one():
            return 1
        if f == -1:
            return -1
        raise ValueError("sign() needs lambda = +-1")

    @staticmethod
    def from_name(name: str) -> "AutoSpec":
        if name in ("id", "identity"):
            return IDENTITY
        if name == "sigma":
            return sigma()
        if name == "mu":
            return mu()
        raise ValueError(f"unknown twist {name!r}")


def sigma(lam=-1) -> AutoSpec:
    return AutoSpec("sigma", RatFunc.coerce(lam))


def mu(lam=-1) -> AutoSpec:
    return AutoSpec("mu", RatFunc.coerce(lam))


IDENTITY = AutoSpec("sigma", ONE)

Terms = Dict[PBWMonomial, RatFunc]


def _accumulate(out: Terms, m, c):
    v = out.get(m)
    if v is None:
        out[m] = c
    else:
        v = v + c
        if v:
            out[m] = v
        else:
            del out[m]


class Podles:
    """The algebra A(S^2_{q,s}) for a fixed exact rational ``s`` (default 1)."""

    def __init__(self, s=1):
        self.s = Fraction(s)
        s2 = RatFunc.coerce(self.s * self.s)
        q2 = RatFunc.q_power(2)
        # B Bs and Bs B as polynomials in A (coefficient lists, A^0 first)
        self.p_bbs = [s2, (1 - s2) * q2, -RatFunc.q_power(4)]
        self.p_bsb = [s2, 1 - s2, -ONE]
        self._qpow = {}
        self._ladder_cache = {}
        self._mul_cache = {}
        self.one = AlgebraElement(self, {UNIT: ONE})
        self.A = self.gen("A")
        self.B = self.gen("B")
        self.Bs = self.gen("Bs")

    def qpow(self, k: int) -> RatFunc:
        r = self._qpow.get(k)
        if r is None:
            r = self._qpow[k] = RatFunc.q_power(k)
        return r

    # elements ----------------------------------------------------------
    def gen(self, name: str) -> "AlgebraElement":
        m = {"A": PBWMonomial(1), "B": PBWMonomial(0, LB, 1),
             "Bs": PBWMonomial(0, LBS, 1)}[name]
        return AlgebraElement(self, {m: ONE})

    def element(self, terms) -> "AlgebraElement":
        return AlgebraElement(self, {m: c for m, c in terms.items() if c})

    def scalar(self, c) -> "AlgebraElement":
        c = RatFunc.coerce(c)
        return AlgebraElement(self, {UNIT: c} if c else {})

    def monomial(self, m: PBWMonomial, c=ONE) -> "AlgebraElement":
        return AlgebraElement(self, {m: RatFunc.coerce(c)})

    def coerce(self, x) -> "AlgebraElement":
        if isinstance(x, AlgebraElement):
            if x.alg is not self and x.alg.s != self.s:
                raise ValueError("elements of different algebras")
            return x
        if isinstance(x, PBWMonomial):
            return self.monomial(x)
        return self.scalar(x)

    # products ----------------------------------------------------------
    def _ladder(self, k1, j, k2, m) -> Terms:
        key = (k1, j, k2, m)
        hit = self._ladder_cache.get(key)
        if hit is not None:
            return hit
        if k1 == NONE:
            out = {PBWMonomial(0, k2, m): ONE}
        elif k2 == NONE:
            out = {PBWMonomial(0, k1, j): ONE}
        elif k1 == k2:
            out = {PBWMonomial(0, k1, j + m): ONE}
        else:
            # X^j Y^m = X^(j-1) p(A) Y^(m-1), then move A^i left past X^(j-1)
            p = self.p_bbs if k1 == LB else self.p_bsb
            sgn = 2 if k1 == LB else -2
            rest = self._ladder(k1 if j > 1 else NONE, j - 1,
                                k2 if m > 1 else NONE, m - 1)
            out = {}
            for i, pi in enumerate(p):
                if not pi:
                    continue
                c0 = pi * self.qpow(sgn * (j - 1) * i)
                for mm, c in rest.items():
                    _accumulate(out, PBWMonomial(mm.a + i, mm.ladder, mm.j), c0 * c)
        self._ladder_cache[key] = out
        return out

    def mono_mul(self, m1: PBWMonomial, m2: PBWMonomial) -> Terms:
        """Normal form of the product ``m1 * m2`` (cached; do not mutate)."""
        key = (m1, m2)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        if m1.ladder == LB:
            c0 = self.qpow(2 * m1.j * m2.a)
        elif m1.ladder == LBS:
            c0 = self.qpow(-2 * m1.j * m2.a)
        else:
            c0 = ONE
        shift = m1.a + m2.a
        out = {}
        for mm, c in self._ladder(m1.ladder, m1.j, m2.ladder, m2.j).items():
            out[PBWMonomial(mm.a + shift, mm.ladder, mm.j)] = c0 * c
        self._mul_cache[key] = out
        return out

    def mul_terms(self, x: Terms, y: Terms) -> Terms:
        out: Terms = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                c = c1 * c2
                for m, c3 in self.mono_mul(m1, m2).items():
                    _accumulate(out, m, c * c3)
        return out

    def mul(self, x, y) -> "AlgebraElement":
        x, y = self.coerce(x), self.coerce(y)
        return AlgebraElement(self, self.mul_terms(x.terms, y.terms))

    def normalize_word(self, word: Iterable[str]) -> "AlgebraElement":
        out = {UNIT: ONE}
        for g in word:
            out = self.mul_terms(out, self.gen(_letter_name(g)).terms)
        return AlgebraElement(self, out)

    # star and automorphisms ---------------------------------------------
    def star_mono(self, m: PBWMonomial):
        if m.ladder == LB:
            return PBWMonomial(m.a, LBS, m.j), self.qpow(-2 * m.j * m.a)
        if m.ladder == LBS:
            return PBWMonomial(m.a, LB, m.j), self.qpow(2 * m.j * m.a)
        return m, ONE

    def star(self, x) -> "AlgebraElement":
        x = self.coerce(x)
        out = {}
        for m, c in x.terms.items():
            mm, f = self.star_mono(m)
            out[mm] = c * f
        return AlgebraElement(self, out)

    def check_auto(self, rho: AutoSpec) -> AutoSpec:
        """``mu`` respects the relations only when s = 1 (A -> -A must fix 1 - s^2)."""
        if rho.kind == "mu" and self.s != 1:
            raise ValueError("mu is an automorphism only for s = 1")
        return rho

    def apply_auto(self, rho: AutoSpec, x) -> "AlgebraElement":
        self.check_auto(rho)
        x = self.coerce(x)
        return AlgebraElement(self, {m: c * rho.factor(m) for m, c in x.terms.items()})

    # bases, parsing ------------------------------------------------------
    @staticmethod
    def basis_up_to(N: int):
        out = [UNIT]
        for d in range(1, N + 1):
            for a in range(d, -1, -1):
                j = d - a
                if j == 0:
                    out.append(PBWMonomial(a))
                else:
                    out.append(PBWMonomial(a, LB, j))
                    out.append(PBWMonomial(a, LBS, j))
        return out

    def parse(self, text: str) -> "AlgebraElement":
        """Parse an expression over ``A``, ``B``, ``Bs`` and ``q``."""
        atoms = {"A": self.A, "B": self.B, "Bs": self.Bs,
                 "q": self.scalar(RatFunc.q_power(1))}
        return Parser(text, atoms.__getitem__, self.scalar).parse()

    def text(self, x) -> str:
        return self.coerce(x).to_text()


def _letter_name(g):
    if g in ("A", "B", "Bs"):
        return g
    if g in ("S", "B*", "Bstar"):
        return "Bs"
    raise ValueError(f"unknown generator {g!r}")


def _coeff_parts(c: RatFunc):
    """(negative, body) for printing ``c`` in front of a monomial."""
    if sum(1 for x in c.num if x) == 1:
        neg = next(x for x in c.num if x) < 0
        body = (-c if neg else c).to_text()
        return neg, body
    return False, f"({c.to_text()})"


class AlgebraElement:
    """Finite combination of PBW monomials with RatFunc coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Podles, terms: Terms):
        self.alg = alg
        self.terms = terms

    @property
    def degree(self):
        return max((m.degree for m in self.terms), default=-math.inf)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: PBWMonomial) -> RatFunc:
        return self.terms.get(m, ZERO)

    def is_scalar(self) -> bool:
        return all(m == UNIT for m in self.terms)

    def __add__(self, other):
        other = self.alg.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(out, m, c)
        return AlgebraElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.alg.coerce(other))

    def __rsub__(self, other):
        return self.alg.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            c = RatFunc.coerce(other)
            if not c:
                return AlgebraElement(self.alg, {})
            return AlgebraElement(self.alg, {m: v * c for m, v in self.terms.items()})
        return self.alg.mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self * other
        return self.alg.mul(other, self)

    def __truediv__(self, other):
        other = self.alg.coerce(other)
        if not other.is_scalar() or other.is_zero():
            raise ValueError("can only divide by a nonzero scalar")
        inv = other.terms[UNIT].inverse()
        return self * inv

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be nonnegative integers")
        out = self.alg.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        try:
            return self.terms == self.alg.coerce(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            neg, body = _coeff_parts(c)
            if m == UNIT:
                piece = body
            elif body == "1":
                piece = m.text()
            else:
                piece = f"{body}*{m.text()}"
            out.append((neg, piece))
        neg, piece = out[0]
        s = ("-" if neg else "") + piece
        for neg, piece in out[1:]:
            s += (" - " if neg else " + ") + piece
        return s

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"AlgebraElement({self.to_text()!r})"


# ----------------------------------------------------------------------
# literal rewriting with the four oriented rules

def _is_normal_word(w) -> bool:
    i = 0
    n = len(w)
    while i < n and w[i] == "A":
        i += 1
    if i == n:
        return True
    g = w[i]
    return all(x == g for x in w[i:])


def _word_to_mono(w) -> PBWMonomial:
    a = 0
    while a < len(w) and w[a] == "A":
        a += 1
    j = len(w) - a
    if j == 0:
        return PBWMonomial(a)
    return PBWMonomial(a, LB if w[a] == "B" else LBS, j)


def rewrite_word(alg: Podles, word, strategy: str = "leftmost") -> AlgebraElement:
    """Normalize a generator word by the rules R1-R4 alone.

    ``strategy`` picks the redex: ``leftmost`` or ``rightmost`` adjacent pair.
    """
    s2 = RatFunc.coerce(alg.s * alg.s)
    rules = {
        ("B", "A"): [(("A", "B"), alg.qpow(2))],
        ("S", "A"): [(("A", "S"), alg.qpow(-2))],
        ("S", "B"): [((), s2), (("A",), 1 - s2), (("A", "A"), -ONE)],
        ("B", "S"): [((), s2), (("A",), (1 - s2) * alg.qpow(2)), (("A", "A"), -alg.qpow(4))],
    }
    letters = tuple("S" if _letter_name(g) == "Bs" else _letter_name(g) for g in word)
    todo = {letters: ONE}
    done: Terms = {}
    while todo:
        w, c = todo.popitem()
        if _is_normal_word(w):
            _accumulate(done, _word_to_mono(w), c)
            continue
        idx = range(len(w) - 1)
        if strategy == "rightmost":
            idx = reversed(idx)
        elif strategy != "leftmost":
            raise ValueError(f"unknown strategy {strategy!r}")
        for i in idx:
            rhs = rules.get((w[i], w[i + 1]))
            if rhs is not None:
                break
        for repl, coeff in rhs:
            if not coeff:
                continue
            nw = w[:i] + repl + w[i + 2:]
            v = todo.get(nw, ZERO) + c * coeff
            if v:
                todo[nw] = v
            else:
                todo.pop(nw, None)
    return AlgebraElement(alg, done)
