"""Randomized self-check suites behind ``qpodles verify``.

Each suite returns a :class:`SuiteResult`; every check compares exact
values, so a failure always means a real inconsistency.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import List

from qpodles.homology import HochschildChain, HomologyEngine
from qpodles.podles import IDENTITY, LB, LBS, PBWMonomial, Podles, mu, rewrite_word, sigma
from qpodles.qscalar import RatFunc
from qpodles.resolution import LABELS, BarChain, MNWChain, Resolution

__all__ = ["SuiteResult", "run_suite", "SUITES", "random_word", "random_element",
           "random_monomial"]

LETTERS = ("A", "B", "Bs")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: List[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))

    def to_json(self) -> str:
        return json.dumps({"suite": self.suite, "passed": self.passed, "info": self.info,
                           "checks": [{"name": c.name, "passed": c.passed} for c in self.checks],
                           "failures": [{"name": c.name, "detail": c.detail}
                                        for c in self.checks if not c.passed]},
                          ensure_ascii=False)


def random_word(rng: random.Random, max_len: int = 6):
    return [rng.choice(LETTERS) for _ in range(rng.randint(0, max_len))]


def random_monomial(rng: random.Random, max_deg: int) -> PBWMonomial:
    d = rng.randint(0, max_deg)
    a = rng.randint(0, d)
    j = d - a
    if not j:
        return PBWMonomial(a)
    return PBWMonomial(a, rng.choice((LB, LBS)), j)


def random_scalar(rng: random.Random) -> RatFunc:
    c = rng.choice((1, -1, 2, 3, -5))
    return RatFunc.q_power(rng.randint(-2, 2), c)


def random_element(alg: Podles, rng: random.Random, max_deg: int = 3, n_terms: int = 3):
    terms = {}
    for _ in range(rng.randint(1, n_terms)):
        m = random_monomial(rng, max_deg)
        terms[m] = terms.get(m, RatFunc.coerce(0)) + random_scalar(rng)
    return alg.element(terms)


# ----------------------------------------------------------------------

def suite_relations(alg: Podles, seed: int = 0, n_words: int = 200, n_triples: int = 100):
    rng = random.Random(seed)
    out = SuiteResult("relations")
    A, B, Bs = alg.A, alg.B, alg.Bs
    s2 = RatFunc.coerce(alg.s * alg.s)
    q2 = alg.qpow(2)
    rels = {
        "BA - q^2 AB": B * A - A * B * q2,
        "B*B + A^2 - (1-s^2)A - s^2": Bs * B + A * A - A * (1 - s2) - alg.scalar(s2),
        "BB* + q^4A^2 - (1-s^2)q^2A - s^2": (B * Bs + A * A * alg.qpow(4)
                                             - A * ((1 - s2) * q2) - alg.scalar(s2)),
    }
    for name, v in rels.items():
        out.add(f"relation {name}", v.is_zero(), str(v))
    # overlap B B* B reduces the same way from both sides
    w = ["B", "Bs", "B"]
    out.add("critical pair B.B*.B",
            rewrite_word(alg, w, "leftmost") == rewrite_word(alg, w, "rightmost"))
    bad = []
    for _ in range(n_words):
        w = random_word(rng)
        left = rewrite_word(alg, w, "leftmost")
        right = rewrite_word(alg, w, "rightmost")
        prod = alg.normalize_word(w)
        if not (left == right == prod):
            bad.append("".join(w))
    out.add(f"confluence on {n_words} random words", not bad, ", ".join(bad[:5]))
    bad = 0
    for _ in range(n_triples):
        x, y, z = (random_element(alg, rng) for _ in range(3))
        if (x * y) * z != x * (y * z):
            bad += 1
    out.add(f"associativity on {n_triples} random triples", not bad, f"{bad} failures")
    return out


def _random_mnw(res: Resolution, rng, degree, max_deg=2):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        lab = rng.choice(LABELS[degree])
        k = (random_monomial(rng, max_deg), random_monomial(rng, max_deg), lab)
        terms[k] = random_scalar(rng)
    return MNWChain(degree, terms)


def _random_bar(rng, degree, max_deg=2):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        k = tuple(random_monomial(rng, max_deg) for _ in range(degree + 2))
        terms[k] = random_scalar(rng)
    return BarChain(degree, terms)


def suite_resolution(res: Resolution, seed: int = 0, n_samples: int = 20):
    rng = random.Random(seed)
    out = SuiteResult("resolution")
    out.info["theta_S_coefficient"] = str(res.theta_s_coefficient)
    for lab in LABELS[2]:
        v = res.mnw_d1(res.mnw_d2(MNWChain.basis(lab)))
        out.add(f"d1 d2 = 0 on {lab}", v.is_zero(), str(v))
    for lab in LABELS[1]:
        c = MNWChain.basis(lab)
        out.add(f"f0 d1 = b' f1 on {lab}",
                res.f_map(0, res.mnw_d1(c)) == res.bar_bprime(res.f_map(1, c)))
    for lab in LABELS[2]:
        c = MNWChain.basis(lab)
        out.add(f"f1 d2 = b' f2 on {lab}",
                res.f_map(1, res.mnw_d2(c)) == res.bar_bprime(res.f_map(2, c)))
    bad = {"f0d1": 0, "f1d2": 0, "h0b'": 0, "h0f0": 0, "h1f1": 0}
    for _ in range(n_samples):
        c1 = _random_mnw(res, rng, 1)
        c2 = _random_mnw(res, rng, 2)
        c0 = _random_mnw(res, rng, 0)
        b1 = _random_bar(rng, 1)
        if res.f_map(0, res.mnw_d1(c1)) != res.bar_bprime(res.f_map(1, c1)):
            bad["f0d1"] += 1
        if res.f_map(1, res.mnw_d2(c2)) != res.bar_bprime(res.f_map(2, c2)):
            bad["f1d2"] += 1
        if res.h_map(0, res.bar_bprime(b1)) != res.mnw_d1(res.h_map(1, b1)):
            bad["h0b'"] += 1
        if res.h_map(0, res.f_map(0, c0)) != c0:
            bad["h0f0"] += 1
        if res.h_map(1, res.f_map(1, c1)) != c1:
            bad["h1f1"] += 1
    names = {"f0d1": "f0 d1 = b' f1", "f1d2": "f1 d2 = b' f2", "h0b'": "h0 b' = d1 h1",
             "h0f0": "h0 f0 = id", "h1f1": "h1 f1 = id"}
    for k, n in bad.items():
        out.add(f"{names[k]} on {n_samples} random chains", not n, f"{n} failures")
    return out


def _random_hoch(rng, n, twist, max_deg=2):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        k = tuple(random_monomial(rng, max_deg) for _ in range(n + 1))
        terms[k] = random_scalar(rng)
    return HochschildChain(n, terms, twist)


def _symmetrize(eng: HomologyEngine, c: HochschildChain, action):
    """Project onto invariants of an involutive diagonal action: (c + g c)/2."""
    out = c + eng.act(action, c)
    return HochschildChain(c.n, {k: v / 2 for k, v in out.terms.items()}, c.twist)


def suite_complexes(eng: HomologyEngine, seed: int = 0, n_samples: int = 25):
    rng = random.Random(seed)
    out = SuiteResult("complexes")
    twists = (IDENTITY, sigma(), mu()) if eng.alg.s == 1 else (IDENTITY, sigma())
    for tw in twists:
        bad_bb = bad_par = 0
        for _ in range(n_samples):
            n = rng.randint(2, 3)
            c = _random_hoch(rng, n, tw)
            if not eng.hochschild_b(eng.hochschild_b(c)).is_zero():
                bad_bb += 1
            t = c
            for _ in range(n + 1):
                t = eng.cyclic_t(t)
            if t != eng.act(tw, c):
                bad_par += 1
        out.add(f"b b = 0 ({tw.name})", not bad_bb, f"{bad_bb} failures")
        out.add(f"t^(n+1) = rho^(n+1) ({tw.name})", not bad_par, f"{bad_par} failures")
        bad_BB = bad_bB = 0
        for _ in range(n_samples):
            n = rng.randint(1, 2)
            c = _random_hoch(rng, n, tw)
            if not tw.is_identity:
                c = _symmetrize(eng, c, tw)
            Bc = eng.connes_B(c)
            if not eng.connes_B(Bc).is_zero():
                bad_BB += 1
            if not (eng.hochschild_b(Bc) + eng.connes_B(eng.hochschild_b(c))).is_zero():
                bad_bB += 1
        out.add(f"B B = 0 on invariant chains ({tw.name})", not bad_BB, f"{bad_BB} failures")
        out.add(f"bB + Bb = 0 on invariant chains ({tw.name})", not bad_bB, f"{bad_bB} failures")
    return out


SUITES = ("relations", "resolution", "complexes")


def run_suite(name: str, s=1, seed: int = 0) -> SuiteResult:
    if name == "relations":
        return suite_relations(Podles(s), seed)
    if name == "resolution":
        return suite_resolution(Resolution(Podles(s)), seed)
    if name == "complexes":
        return suite_complexes(HomologyEngine(s), seed)
    raise ValueError(f"unknown suite {name!r}")
