"""Bar and MNW resolutions of the Podles algebra and the comparison maps.

Bar chains of resolution degree ``n`` live in ``A^(n+2)`` and are stored
as ``{(m_0, ..., m_{n+1}): coeff}``.  MNW chains are free left
``A^e``-module elements stored as ``{(x, y, label): coeff}`` meaning
``(x (x) y^o) . label``; ``A^e`` multiplies by
``(x (x) y^o)(x' (x) y'^o) = x x' (x) (y' y)^o``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from qpodles.podles import LB, LBS, UNIT, PBWMonomial, Podles, _accumulate
from qpodles.qscalar import ONE, RatFunc

__all__ = ["BarChain", "MNWChain", "Resolution", "DegreeError", "LABELS",
           "LABEL_WEIGHT", "LABEL_DEGREE"]

A1 = PBWMonomial(1)
B1 = PBWMonomial(0, LB, 1)
BS1 = PBWMonomial(0, LBS, 1)

LABELS = {0: ("unit",), 1: ("eA", "eB", "eBs"), 2: ("eAwB", "eAwBs", "thetaS", "thetaT")}
LABEL_DEGREE = {lab: n for n, labs in LABELS.items() for lab in labs}
# Z-grading (B has weight 1, B* weight -1) carried by each basis label
LABEL_WEIGHT = {"unit": 0, "eA": 0, "eB": 1, "eBs": -1,
                "eAwB": 1, "eAwBs": -1, "thetaS": 0, "thetaT": 0}
GEN_OF = {"eA": A1, "eB": B1, "eBs": BS1}

# candidate scalars for the e_A coefficient in d2(theta_S)
THETA_S_CANDIDATES = ("q", "-q", "q^3", "-q^3", "q^-1", "-q^-1")


class DegreeError(ValueError):
    pass


def _mono_key(t):
    return tuple(m.sort_key() for m in t)


def _tuple_text(t) -> str:
    return " (x) ".join(m.text() for m in t)


@dataclass
class BarChain:
    degree: int
    terms: Dict[Tuple[PBWMonomial, ...], RatFunc] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, BarChain) and self.degree == other.degree
                and self.terms == other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return BarChain(self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = RatFunc.coerce(c)
        if not c:
            return BarChain(self.degree, {})
        return BarChain(self.degree, {k: v * c for k, v in self.terms.items()})

    def to_json(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))
        return json.dumps({"degree": self.degree,
                           "terms": [{"tuple": [m.text() for m in k], "coeff": str(c)}
                                     for k, c in items]})

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))
        return " + ".join(f"({c})*[{_tuple_text(k)}]" for k, c in items)


@dataclass
class MNWChain:
    degree: int
    terms: Dict[Tuple[PBWMonomial, PBWMonomial, str], RatFunc] = field(default_factory=dict)

    def __post_init__(self):
        for (_, _, lab) in self.terms:
            if LABEL_DEGREE.get(lab) != self.degree:
                raise DegreeError(f"label {lab!r} is not a degree-{self.degree} basis label")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MNWChain) and self.degree == other.degree
                and self.terms == other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return MNWChain(self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = RatFunc.coerce(c)
        if not c:
            return MNWChain(self.degree, {})
        return MNWChain(self.degree, {k: v * c for k, v in self.terms.items()})

    @classmethod
    def basis(cls, label: str, x: PBWMonomial = UNIT, y: PBWMonomial = UNIT, c=ONE):
        return cls(LABEL_DEGREE[label], {(x, y, label): RatFunc.coerce(c)})

    def to_json(self) -> str:
        items = sorted(self.terms.items(),
                       key=lambda kv: (kv[0][2], kv[0][0].sort_key(), kv[0][1].sort_key()))
        return json.dumps({"degree": self.degree,
                           "terms": [{"label": k[2], "left": k[0].text(), "right": k[1].text(),
                                      "coeff": str(c)} for k, c in items]})

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(),
                       key=lambda kv: (kv[0][2], kv[0][0].sort_key(), kv[0][1].sort_key()))
        return " + ".join(f"({c})*({x.text()} (x) {y.text()}^o){lab}"
                          for (x, y, lab), c in items)


class Resolution:
    """Both resolutions of one :class:`Podles` algebra, with f and h.

    ``d2(theta_S)`` carries an e_A coefficient that is fixed by searching
    ``THETA_S_CANDIDATES`` for the unique value with ``d1 d2 = 0``; the
    choice is exposed as ``theta_s_coefficient``.
    """

    def __init__(self, alg: Podles):
        self.alg = alg
        self.theta_s_coefficient = None
        self.d2_table = self._build_d2()

    # ------------------------------------------------------------------
    # A^e helpers

    def _ae_times(self, out, c, x, y, xp, yp, lab):
        """Accumulate c * (x (x) y^o)(xp (x) yp^o) . lab into ``out``."""
        alg = self.alg
        left = alg.mono_mul(x, xp)
        right = alg.mono_mul(yp, y)
        for lm, lc in left.items():
            clc = c * lc
            for rm, rc in right.items():
                _accumulate(out, (lm, rm, lab), clc * rc)

    # ------------------------------------------------------------------
    # MNW differentials

    def _theta_s_terms(self, coeff: RatFunc):
        alg = self.alg
        s2 = RatFunc.coerce(alg.s * alg.s)
        qi = alg.qpow(-1)
        terms = [
            (B1, UNIT, "eBs", -qi),
            (UNIT, BS1, "eB", -qi),
            (A1, UNIT, "eA", -coeff),
            (UNIT, A1, "eA", -coeff),
        ]
        # constant e_A term; vanishes at s = 1
        if s2 != 1:
            terms.append((UNIT, UNIT, "eA", alg.qpow(1) * (1 - s2)))
        return terms

    def _build_d2(self):
        alg = self.alg
        q2 = alg.qpow(2)
        qi = alg.qpow(-1)
        s2 = RatFunc.coerce(alg.s * alg.s)
        table = {
            "eAwBs": [(A1, UNIT, "eBs", ONE), (UNIT, A1, "eBs", -q2),
                      (BS1, UNIT, "eA", -q2), (UNIT, BS1, "eA", ONE)],
            "eAwB": [(A1, UNIT, "eB", q2), (UNIT, A1, "eB", -ONE),
                     (B1, UNIT, "eA", -ONE), (UNIT, B1, "eA", q2)],
            "thetaT": [(UNIT, B1, "eBs", -qi), (BS1, UNIT, "eB", -qi),
                       (A1, UNIT, "eA", -qi), (UNIT, A1, "eA", -qi)],
        }
        if s2 != 1:
            table["thetaT"].append((UNIT, UNIT, "eA", qi * (1 - s2)))
        self.d2_table = table
        hits = []
        for text in THETA_S_CANDIDATES:
            cand = RatFunc.parse(text)
            terms = self._theta_s_terms(cand)
            table["thetaS"] = terms
            if self.mnw_d1(self.mnw_d2(MNWChain.basis("thetaS"))).is_zero():
                hits.append((text, cand))
        if len(hits) != 1:
            raise ArithmeticError(f"theta_S coefficient search found {len(hits)} solutions")
        self.theta_s_coefficient = hits[0][1]
        table["thetaS"] = self._theta_s_terms(hits[0][1])
        return table

    def mnw_d1(self, c: MNWChain) -> MNWChain:
        if c.degree != 1:
            raise DegreeError("d1 takes a degree-1 MNW chain")
        out = {}
        for (x, y, lab), v in c.terms.items():
            t = GEN_OF[lab]
            self._ae_times(out, v, x, y, t, UNIT, "unit")
            self._ae_times(out, -v, x, y, UNIT, t, "unit")
        return MNWChain(0, out)

    def mnw_d2(self, c: MNWChain) -> MNWChain:
        if c.degree != 2:
            raise DegreeError("d2 takes a degree-2 MNW chain")
        out = {}
        for (x, y, lab), v in c.terms.items():
            for xp, yp, lab1, cf in self.d2_table[lab]:
                self._ae_times(out, v * cf, x, y, xp, yp, lab1)
        return MNWChain(1, out)

    # ------------------------------------------------------------------
    # bar resolution

    def bar_bprime(self, c: BarChain) -> BarChain:
        n = c.degree
        if n < 1:
            raise DegreeError("b' is defined on bar degree >= 1")
        alg = self.alg
        out = {}
        for t, v in c.terms.items():
            for i in range(n + 1):
                sv = v if i % 2 == 0 else -v
                head, tail = t[:i], t[i + 2:]
                for m, cm in alg.mono_mul(t[i], t[i + 1]).items():
                    _accumulate(out, head + (m,) + tail, sv * cm)
        return BarChain(n - 1, out)

    def bar_contracting_homotopy(self, c: BarChain) -> BarChain:
        return BarChain(c.degree + 1, {(UNIT,) + t: v for t, v in c.terms.items()})

    # ------------------------------------------------------------------
    # comparison maps

    def f_map(self, i: int, c: MNWChain) -> BarChain:
        if c.degree != i or i not in (0, 1, 2):
            raise DegreeError(f"f_{i} needs a degree-{i} MNW chain")
        if i == 0:
            return BarChain(0, {(x, y): v for (x, y, _), v in c.terms.items()})
        if i == 1:
            return BarChain(1, {(x, GEN_OF[lab], y): v for (x, y, lab), v in c.terms.items()})
        out = {}
        for (x, y, lab), v in c.terms.items():
            for t, cv in self.f2_on_label(lab).terms.items():
                # x . t . y on the outer factors
                left = self.alg.mono_mul(x, t[0])
                right = self.alg.mono_mul(t[-1], y)
                for lm, lc in left.items():
                    for rm, rc in right.items():
                        _accumulate(out, (lm,) + t[1:-1] + (rm,), v * cv * lc * rc)
        return BarChain(2, out)

    def f2_on_label(self, lab: str) -> BarChain:
        cache = self.__dict__.setdefault("_f2_cache", {})
        hit = cache.get(lab)
        if hit is None:
            img = self.f_map(1, self.mnw_d2(MNWChain.basis(lab)))
            hit = cache[lab] = self.bar_contracting_homotopy(img)
        return hit

    def h1_middle(self, m: PBWMonomial) -> List[Tuple[PBWMonomial, PBWMonomial, str, RatFunc]]:
        """h_1(1, m, 1) for a PBW monomial ``m`` as (x, y, label, coeff) terms."""
        n, j = m.a, m.j
        terms = []
        for i in range(n):
            terms.append((PBWMonomial(i), PBWMonomial(n - 1 - i, m.ladder, j), "eA", ONE))
        if j:
            lab = "eB" if m.ladder == LB else "eBs"
            for jj in range(j):
                left = PBWMonomial(n, m.ladder, jj) if jj else PBWMonomial(n)
                rest = j - 1 - jj
                right = PBWMonomial(0, m.ladder, rest) if rest else UNIT
                terms.append((left, right, lab, ONE))
        return terms

    def h_map(self, i: int, c: BarChain) -> MNWChain:
        if c.degree != i or i not in (0, 1):
            raise DegreeError(f"h_{i} needs a bar chain of degree {i}")
        if i == 0:
            return MNWChain(0, {(a, b, "unit"): v for (a, b), v in c.terms.items()})
        out = {}
        for (a, m, b), v in c.terms.items():
            for x, y, lab, cf in self.h1_middle(m):
                self._ae_times(out, v * cf, a, b, x, y, lab)
        return MNWChain(1, out)

