"""The crossed product A x_rho Z2, stored as pairs a + b*g."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

from qpodles._parse import ParseError
from qpodles.podles import AlgebraElement, AutoSpec, Podles, sigma
from qpodles.qscalar import ZERO, RatFunc

__all__ = ["CrossedElement", "CrossedMatrix", "MixedAction", "cmul", "cstar",
           "is_projection", "functional_eval"]


class MixedAction(ValueError):
    pass


@dataclass(frozen=True)
class CrossedElement:
    even: AlgebraElement
    odd: AlgebraElement
    rho: AutoSpec

    @classmethod
    def make(cls, alg: Podles, even=0, odd=0, rho: AutoSpec = None) -> "CrossedElement":
        return cls(alg.coerce(even), alg.coerce(odd), rho if rho is not None else sigma())

    @property
    def alg(self) -> Podles:
        return self.even.alg

    def _check(self, other):
        if not isinstance(other, CrossedElement):
            raise TypeError("expected a CrossedElement")
        if self.rho != other.rho:
            raise MixedAction(f"cannot combine {self.rho.name} and {other.rho.name} elements")

    def __add__(self, other):
        self._check(other)
        return CrossedElement(self.even + other.even, self.odd + other.odd, self.rho)

    def __sub__(self, other):
        self._check(other)
        return CrossedElement(self.even - other.even, self.odd - other.odd, self.rho)

    def __neg__(self):
        return CrossedElement(-self.even, -self.odd, self.rho)

    def __mul__(self, other):
        if isinstance(other, CrossedElement):
            return cmul(self, other)
        return CrossedElement(self.even * other, self.odd * other, self.rho)

    def is_zero(self):
        return self.even.is_zero() and self.odd.is_zero()

    def __eq__(self, other):
        if not isinstance(other, CrossedElement):
            return NotImplemented
        return self.rho == other.rho and self.even == other.even and self.odd == other.odd

    def __hash__(self):
        return hash((self.even, self.odd, self.rho))

    def to_text(self) -> str:
        return f"{self.even.to_text()} | {self.odd.to_text()}"

    __str__ = to_text

    @classmethod
    def parse(cls, alg: Podles, text: str, rho: AutoSpec = None) -> "CrossedElement":
        """Parse ``even | odd``; a missing ``| odd`` means odd = 0."""
        parts = text.split("|")
        if len(parts) > 2:
            second = text.index("|", text.index("|") + 1)
            raise ParseError("more than one '|' in crossed element", text, second)
        even = alg.parse(parts[0])
        odd = alg.parse(parts[1]) if len(parts) == 2 else alg.coerce(0)
        return cls(even, odd, rho if rho is not None else sigma())


def cmul(x: CrossedElement, y: CrossedElement) -> CrossedElement:
    """(a + bg)(c + dg) = (ac + b rho(d)) + (ad + b rho(c)) g."""
    x._check(y)
    alg = x.alg
    rc = alg.apply_auto(x.rho, y.even)
    rd = alg.apply_auto(x.rho, y.odd)
    return CrossedElement(x.even * y.even + x.odd * rd, x.even * y.odd + x.odd * rc, x.rho)


def cstar(x: CrossedElement) -> CrossedElement:
    """(a + bg)* = a* + g b* = a* + rho(b*) g."""
    alg = x.alg
    return CrossedElement(alg.star(x.even), alg.apply_auto(x.rho, alg.star(x.odd)), x.rho)


class CrossedMatrix:
    """Square matrix over the crossed product with one common action."""

    def __init__(self, rows: Sequence[Sequence[CrossedElement]]):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("a crossed matrix must be square with n >= 1")
        rho = rows[0][0].rho
        for r in rows:
            for e in r:
                if e.rho != rho:
                    raise MixedAction("matrix entries use different actions")
        self.rows = rows
        self.n = n
        self.rho = rho

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "CrossedMatrix") -> "CrossedMatrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                acc = cmul(self.rows[i][0], other.rows[0][j])
                for k in range(1, self.n):
                    acc = acc + cmul(self.rows[i][k], other.rows[k][j])
                row.append(acc)
            out.append(row)
        return CrossedMatrix(out)

    def adjoint(self) -> "CrossedMatrix":
        return CrossedMatrix([[cstar(self.rows[j][i]) for j in range(self.n)]
                              for i in range(self.n)])

    def __eq__(self, other):
        return isinstance(other, CrossedMatrix) and self.rows == other.rows

    def direct_sum(self, other: "CrossedMatrix") -> "CrossedMatrix":
        alg = self.rows[0][0].alg
        zero = CrossedElement(alg.coerce(0), alg.coerce(0), self.rho)
        n, m = self.n, other.n
        rows = [list(r) + [zero] * m for r in self.rows]
        rows += [[zero] * n + list(r) for r in other.rows]
        return CrossedMatrix(rows)

    def permuted(self, perm: Sequence[int]) -> "CrossedMatrix":
        """P M P^T for the permutation i -> perm[i]."""
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        return CrossedMatrix([[self.rows[inv[i]][inv[j]] for j in range(self.n)]
                              for i in range(self.n)])

    def to_json(self) -> str:
        return json.dumps({"rho": self.rho.name,
                           "matrix": [[e.to_text() for e in r] for r in self.rows]})

    @classmethod
    def from_json(cls, alg: Podles, text: str) -> "CrossedMatrix":
        d = json.loads(text)
        rho = AutoSpec.from_name(d.get("rho", "sigma"))
        return cls([[CrossedElement.parse(alg, str(e), rho) for e in r] for r in d["matrix"]])


def is_projection(p: CrossedMatrix) -> bool:
    return p.adjoint() == p and p * p == p


def functional_eval(phi_even: Callable[[AlgebraElement], RatFunc],
                    phi_odd: Callable[[AlgebraElement], RatFunc],
                    x: CrossedElement) -> RatFunc:
    """phi_even(even) + phi_odd(odd); either functional may be None (zero)."""
    out = ZERO
    if phi_even is not None:
        out = out + phi_even(x.even)
    if phi_odd is not None:
        out = out + phi_odd(x.odd)
    return out


def unit_matrix(alg: Podles, rho: AutoSpec, n: int = 1) -> CrossedMatrix:
    one = CrossedElement(alg.coerce(1), alg.coerce(0), rho)
    zero = CrossedElement(alg.coerce(0), alg.coerce(0), rho)
    return CrossedMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])
