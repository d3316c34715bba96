"""Trace functionals, the degree-zero Chern pairing, and index tables."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, List, Sequence

from qpodles.crossed import CrossedMatrix, is_projection, unit_matrix
from qpodles.podles import AlgebraElement, AutoSpec, PBWMonomial, Podles
from qpodles.qscalar import ONE, ZERO, RatFunc

__all__ = ["TraceFunctional", "IndexTable", "NotAProjection", "tau0", "haar_fA",
           "pair", "index_table", "TAU0", "FA"]


class NotAProjection(ValueError):
    pass


def _tau0_rule(m: PBWMonomial) -> RatFunc:
    return ONE if m.degree == 0 else ZERO


def _fa_rule(m: PBWMonomial) -> RatFunc:
    # f_A(1) is set to 0; the closed form only covers A^(r+1)
    if m.j or m.a == 0:
        return ZERO
    r = m.a - 1
    return (1 - RatFunc.q_power(4)) / (1 - RatFunc.q_power(2 * r + 4))


@dataclass(frozen=True)
class TraceFunctional:
    name: str
    rule: Callable[[PBWMonomial], RatFunc] = field(compare=False)
    slot: str = "even"

    def __post_init__(self):
        if self.slot not in ("even", "odd"):
            raise ValueError("slot must be 'even' or 'odd'")

    def __call__(self, x: AlgebraElement) -> RatFunc:
        out = ZERO
        for m, c in x.terms.items():
            v = self.rule(m)
            if v:
                out = out + c * v
        return out

    def twisted(self, mark: str = "σ") -> "TraceFunctional":
        return TraceFunctional(f"{mark}{self.name}", self.rule, "odd")


TAU0 = TraceFunctional("τ0", _tau0_rule)
FA = TraceFunctional("f_A", _fa_rule)


def tau0(x: AlgebraElement) -> RatFunc:
    return TAU0(x)


def haar_fA(x: AlgebraElement) -> RatFunc:
    return FA(x)


def pair(p: CrossedMatrix, phi: TraceFunctional) -> RatFunc:
    if not is_projection(p):
        raise NotAProjection("pairing needs a self-adjoint idempotent")
    out = ZERO
    for i in range(p.n):
        e = p[i, i]
        out = out + phi(e.even if phi.slot == "even" else e.odd)
    return out


@dataclass
class IndexTable:
    orbifold: str
    rows: List[str]
    cols: List[str]
    entries: List[List[RatFunc]]
    notes: List[str] = field(default_factory=list)

    def to_markdown(self) -> str:
        head = "| | " + " | ".join(self.cols) + " |"
        sep = "|---|" + "---|" * len(self.cols)
        body = ["| " + r + " | " + " | ".join(str(v) for v in row) + " |"
                for r, row in zip(self.rows, self.entries)]
        return "\n".join([head, sep] + body) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class"] + self.cols)
        for r, row in zip(self.rows, self.entries):
            w.writerow([r] + [str(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"orbifold": self.orbifold, "rows": self.rows, "cols": self.cols,
                           "entries": [[str(v) for v in row] for row in self.entries],
                           "notes": self.notes}, ensure_ascii=False) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "md":
            return self.to_markdown()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


_ORBIFOLDS = {
    "Dq": ("sigma", "[1_Dq]", [("Sτ0", TAU0), ("Sf_A", FA),
                               ("Sστ0", TAU0.twisted()), ("Sσf_A", FA.twisted())]),
    "RP2q": ("mu", "[1_RP2q]", [("Sτ0", TAU0)]),
}


def index_table(orbifold: str, extra: Sequence[CrossedMatrix] = (), alg: Podles = None,
                extra_labels: Sequence[str] = ()) -> IndexTable:
    """Pairings of [1] and any supplied projections with the even cocycles."""
    if orbifold not in _ORBIFOLDS:
        raise ValueError(f"unknown orbifold {orbifold!r}")
    rho_name, unit_label, cols = _ORBIFOLDS[orbifold]
    rho = AutoSpec.from_name(rho_name)
    alg = alg or Podles()
    mats = [unit_matrix(alg, rho)]
    labels = [unit_label]
    for k, p in enumerate(extra):
        if p.rho != rho:
            raise NotAProjection(f"projection uses {p.rho.name}, expected {rho.name}")
        mats.append(p)
        labels.append(extra_labels[k] if k < len(extra_labels) else f"[P{k + 1}]")
    entries = [[pair(p, phi) for _, phi in cols] for p in mats]
    return IndexTable(orbifold, labels, [c for c, _ in cols], entries,
                      notes=["f_A(1) := 0"] if any(phi.rule is _fa_rule for _, phi in cols) else [])
