"""Truncated Hochschild and cyclic homology of the Podles algebra.

Two chain models are available for ``H_n(A, _rho A)``:

* ``bar`` -- the Hochschild complex ``A^(n+1)`` with the twisted boundary
  whose last face is ``rho(a_n) a_0``;
* ``mnw`` -- ``_rho A (x)_{A^e} M_n`` for the MNW resolution, i.e. ``A^3``
  in degree 1 and ``A^4`` in degree 2 (degrees 0 and 1 only).

Chains are truncated at total PBW degree N (MNW labels count with their
resolution degree).  Products never raise the degree, so the truncated
spaces are subcomplexes.  Both models split by the Z-weight (B counts +1,
B* counts -1) and, for an involutive diagonal action, by eigenvalue; all
matrices are assembled and reduced block by block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from qpodles.exactla import EchelonBasis, SparseMatrix, Vector
from qpodles.podles import (IDENTITY, LB, LBS, UNIT, AutoSpec, PBWMonomial, Podles,
                            _accumulate)
from qpodles.qscalar import ONE, RatFunc
from qpodles.resolution import GEN_OF, LABEL_DEGREE, LABEL_WEIGHT, LABELS, Resolution

__all__ = ["TruncationSpec", "HochschildChain", "HomologyReport", "HomologyEngine",
           "UnsupportedDegree", "TransportMismatch", "ORBIFOLDS"]

ORBIFOLDS = {"Dq": "sigma", "RP2q": "mu"}

LABEL_TEXT = {"eA": "e_A", "eB": "e_B", "eBs": "e_{B*}", "eAwB": "e_A∧e_B",
              "eAwBs": "e_A∧e_{B*}", "thetaS": "ϑ_S", "thetaT": "ϑ_T"}
_LABEL_ORDER = {lab: i for i, lab in enumerate(l for n in sorted(LABELS) for l in LABELS[n])}
TWIST_MARK = {"id": "", "sigma": "σ", "mu": "μ"}


class UnsupportedDegree(ValueError):
    pass


class TransportMismatch(ArithmeticError):
    pass


@dataclass(frozen=True)
class TruncationSpec:
    N: int
    nMax: int = 3

    def __post_init__(self):
        if self.N < 0 or self.nMax < 0:
            raise ValueError("truncation bounds must be nonnegative")


@dataclass
class HochschildChain:
    n: int
    terms: Dict[Tuple[PBWMonomial, ...], RatFunc]
    twist: AutoSpec = IDENTITY

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, HochschildChain) and self.n == other.n
                and self.terms == other.terms)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, -c)
        return HochschildChain(self.n, out, self.twist)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return HochschildChain(self.n, out, self.twist)

    @property
    def degree(self):
        return max((sum(m.degree for m in t) for t in self.terms), default=-1)


@dataclass
class HomologyReport:
    twist: str
    n: int
    N: int
    dim: int
    stabilized: bool
    generators: List[str]
    source: str = "mnw"
    action: Optional[str] = None
    dim_prev: Optional[int] = None
    vectors: list = field(default_factory=list, repr=False)

    def to_dict(self):
        d = {"twist": self.twist, "n": self.n, "N": self.N, "dim": self.dim,
             "stabilized": self.stabilized, "generators": list(self.generators),
             "source": self.source}
        if self.action is not None:
            d["action"] = self.action
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


# ----------------------------------------------------------------------
# chain models

def _is_degenerate(t) -> bool:
    for m in t[1:]:
        if m == UNIT:
            return True
    return False


class _Model:
    """A truncated chain model: keys per degree, boundary, weights and signs."""

    source = ""

    def __init__(self, eng: "HomologyEngine", twist: AutoSpec, N: int):
        self.eng = eng
        self.alg = eng.alg
        self.twist = twist
        self.N = N
        self._keys = {}
        self._bd = {}

    def keys(self, n):
        k = self._keys.get(n)
        if k is None:
            k = self._keys[n] = self._enumerate(n)
        return k

    def blocks(self, n, action: Optional[AutoSpec] = None, eps: int = 1):
        """Keys of degree n grouped by weight; optionally an action eigenspace."""
        out: Dict[int, list] = {}
        for key in self.keys(n):
            if action is not None and self.sign(key, action) != eps:
                continue
            out.setdefault(self.weight(key), []).append(key)
        return out

    def boundary(self, n, key) -> Dict:
        cache = self._bd
        hit = cache.get((n, key))
        if hit is None:
            hit = cache[(n, key)] = self._boundary(n, key)
        return hit


class BarModel(_Model):
    """Hochschild complex of A with coefficients in _rho A (optionally normalized)."""

    source = "bar"

    def __init__(self, eng, twist, N, normalized=True):
        super().__init__(eng, twist, N)
        self.normalized = normalized

    def _enumerate(self, n):
        basis = Podles.basis_up_to(self.N)
        out = []
        nonunit = [m for m in basis if m != UNIT]

        def rec(prefix, budget, left):
            if left == 0:
                out.append(tuple(prefix))
                return
            pool = nonunit if (self.normalized and prefix) else basis
            for m in pool:
                if m.degree > budget:
                    break
                prefix.append(m)
                rec(prefix, budget - m.degree, left - 1)
                prefix.pop()

        rec([], self.N, n + 1)
        return out

    @staticmethod
    def weight(key):
        return sum(m.weight for m in key)

    @staticmethod
    def degree(key):
        return sum(m.degree for m in key)

    def sign(self, key, action):
        s = 1
        for m in key:
            s *= action.sign(m)
        return s

    def _boundary(self, n, key):
        return self.eng.b_terms(key, self.twist, self.normalized)

    @staticmethod
    def order(key):
        return tuple(m.sort_key() for m in key)

    def text(self, key):
        return "⊗".join(m.text() for m in key)


class MNWModel(_Model):
    """``_rho A (x)_{A^e} M_n`` for n <= 2 with keys ``(a, label)``."""

    source = "mnw"

    def _enumerate(self, n):
        if n > 2:
            raise UnsupportedDegree("MNW differentials above degree 2 are not available")
        basis = Podles.basis_up_to(self.N)
        return [(m, lab) for lab in LABELS[n] for m in basis if m.degree + n <= self.N]

    @staticmethod
    def weight(key):
        return key[0].weight + LABEL_WEIGHT[key[1]]

    @staticmethod
    def degree(key):
        return key[0].degree + LABEL_DEGREE[key[1]]

    def sign(self, key, action):
        f = action.factor(key[0]) * self.eng.label_factor(action, key[1])
        if f.is_one():
            return 1
        if f == -1:
            return -1
        raise ValueError("action is not an involution")

    @staticmethod
    def order(key):
        return (key[0].sort_key(), _LABEL_ORDER[key[1]])

    def _boundary(self, n, key):
        if n == 0:
            return {}
        return self.eng.mnw_boundary_terms(key, self.twist)

    def text(self, key):
        m, lab = key
        if lab == "unit":
            return m.text()
        mark = TWIST_MARK.get(self.twist.name, "")
        return f"{m.text()}⊗{mark}{LABEL_TEXT[lab]}"


# ----------------------------------------------------------------------

def _vec_text(model, vec, keys, twisted_prefix=""):
    items = sorted(vec.items())
    parts = []
    for i, c in items:
        body = model.text(keys[i])
        if model.source == "bar" and twisted_prefix:
            body = f"{twisted_prefix}[{body}]"
        elif model.source == "mnw" and twisted_prefix and keys[i][1] == "unit":
            body = f"{twisted_prefix}[{body}]"
        if c.is_one():
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"({c})*{body}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass
class _BlockHomology:
    weight: int
    keys: list
    index: dict
    dim: int
    reps: List[Vector]
    image: EchelonBasis


class HomologyEngine:
    """Hochschild/cyclic homology computations for one algebra ``A(S^2_{q,s})``."""

    def __init__(self, s=1, normalized: bool = True):
        self.alg = Podles(s)
        self.res = Resolution(self.alg)
        self.normalized = normalized
        self._models = {}
        self._mnw_tables = self._mnw_tables_build()
        self._homology_cache = {}

    # -- low-level boundary formulas ----------------------------------------
    def label_factor(self, action: AutoSpec, lab: str) -> RatFunc:
        fa = action.factor(PBWMonomial(1))
        fb = action.factor(PBWMonomial(0, LB, 1))
        fbs = action.factor(PBWMonomial(0, LBS, 1))
        return {"unit": ONE, "eA": fa, "eB": fb, "eBs": fbs, "eAwB": fa * fb,
                "eAwBs": fa * fbs, "thetaS": fb * fbs, "thetaT": fb * fbs}[lab]

    def _mnw_tables_build(self):
        tab = {}
        for lab, g in GEN_OF.items():
            tab[lab] = [(g, UNIT, "unit", ONE), (UNIT, g, "unit", -ONE)]
        for lab, terms in self.res.d2_table.items():
            tab[lab] = list(terms)
        return tab

    def mnw_boundary_terms(self, key, twist: AutoSpec):
        """Boundary of ``a . label`` in ``_rho A (x)_{A^e} M``: (x (x) y^o) -> rho(y) a x."""
        a, lab = key
        alg = self.alg
        out = {}
        for x, y, lab1, c in self._mnw_tables[lab]:
            cy = c * twist.factor(y)
            for m1, c1 in alg.mono_mul(y, a).items():
                for m2, c2 in alg.mono_mul(m1, x).items():
                    _accumulate(out, (m2, lab1), cy * c1 * c2)
        return out

    def b_terms(self, key, twist: AutoSpec, normalized: bool):
        alg = self.alg
        n = len(key) - 1
        out = {}
        for i in range(n):
            sv = ONE if i % 2 == 0 else -ONE
            head, tail = key[:i], key[i + 2:]
            for m, c in alg.mono_mul(key[i], key[i + 1]).items():
                _accumulate(out, head + (m,) + tail, sv * c)
        sv = twist.factor(key[n])
        if n % 2:
            sv = -sv
        for m, c in alg.mono_mul(key[n], key[0]).items():
            _accumulate(out, (m,) + key[1:n], sv * c)
        if normalized:
            out = {k: v for k, v in out.items() if not _is_degenerate(k)}
        return out

    def t_terms(self, key, twist: AutoSpec):
        n = len(key) - 1
        c = twist.factor(key[n])
        if n % 2:
            c = -c
        return (key[n],) + key[:n], c

    def B_terms(self, key, twist: AutoSpec, normalized: bool):
        """Connes' operator B = (1 - t) s N on one tensor."""
        n = len(key) - 1
        out = {}
        cur, c = key, ONE
        for _ in range(n + 1):
            sk = (UNIT,) + cur
            _accumulate(out, sk, c)
            tk, tc = self.t_terms(sk, twist)
            _accumulate(out, tk, -c * tc)
            cur, cc = self.t_terms(cur, twist)
            c = c * cc
        if normalized:
            out = {k: v for k, v in out.items() if not _is_degenerate(k)}
        return out

    # -- public chain-level operations -------------------------------------
    def hochschild_b(self, c: HochschildChain, normalized: bool = False) -> HochschildChain:
        if c.n < 1:
            from qpodles.resolution import DegreeError
            raise DegreeError("Hochschild boundary needs n >= 1")
        out = {}
        for key, v in c.terms.items():
            for k, cv in self.b_terms(key, c.twist, normalized).items():
                _accumulate(out, k, v * cv)
        return HochschildChain(c.n - 1, out, c.twist)

    def cyclic_t(self, c: HochschildChain) -> HochschildChain:
        out = {}
        for key, v in c.terms.items():
            k, cv = self.t_terms(key, c.twist)
            _accumulate(out, k, v * cv)
        return HochschildChain(c.n, out, c.twist)

    def connes_B(self, c: HochschildChain, normalized: bool = False) -> HochschildChain:
        out = {}
        for key, v in c.terms.items():
            for k, cv in self.B_terms(key, c.twist, normalized).items():
                _accumulate(out, k, v * cv)
        return HochschildChain(c.n + 1, out, c.twist)

    def act(self, action: AutoSpec, c: HochschildChain) -> HochschildChain:
        out = {}
        for key, v in c.terms.items():
            f = v
            for m in key:
                f = f * action.factor(m)
            out[key] = f
        return HochschildChain(c.n, out, c.twist)

    # -- models ---------------------------------------------------------------
    def model(self, source: str, twist: AutoSpec, N: int) -> _Model:
        self.alg.check_auto(twist)
        key = (source, twist, N)
        m = self._models.get(key)
        if m is None:
            if source == "bar":
                m = BarModel(self, twist, N, self.normalized)
            elif source == "mnw":
                m = MNWModel(self, twist, N)
            else:
                raise ValueError(f"unknown source {source!r}")
            self._models[key] = m
        return m

    def mnw_induced_complex(self, twist: AutoSpec, N: int):
        """Boundary matrices d1: A^3 -> A and d2: A^4 -> A^3 at truncation N."""
        if N < 2:
            raise ValueError("need N >= 2")
        mod = self.model("mnw", twist, N)
        keys = [mod.keys(i) for i in range(3)]
        index = [{k: i for i, k in enumerate(ks)} for ks in keys]
        mats = []
        for n in (1, 2):
            cols = []
            for key in keys[n]:
                cols.append({index[n - 1][k]: v for k, v in mod.boundary(n, key).items()})
            mats.append(SparseMatrix(len(keys[n - 1]), len(keys[n]), columns=cols))
        return keys, mats[0], mats[1]

    # -- homology core ----------------------------------------------------------
    def _block(self, mod: _Model, n: int, w: int, action, eps, keys_n, keys_up, keys_down):
        index = {k: i for i, k in enumerate(keys_n)}
        idx_down = {k: i for i, k in enumerate(keys_down)} if keys_down is not None else None
        # kernel of the outgoing boundary
        if n == 0:
            kernel_rank = 0
            ker_vectors = None
        else:
            e = EchelonBasis(track=True)
            ker_vectors = []
            for key in keys_n:
                col = {idx_down[k]: v for k, v in mod.boundary(n, key).items()}
                dep = e.add(col)
                if dep is not None:
                    ker_vectors.append(dep)
            kernel_rank = len(e)
        image = EchelonBasis()
        for key in keys_up:
            col = {index[k]: v for k, v in mod.boundary(n + 1, key).items()}
            if col:
                image.add(col)
        dim = len(keys_n) - kernel_rank - len(image)
        # representatives: monomial cycles first, then kernel vectors
        cands = []
        if ker_vectors is None:
            cands = [{i: ONE} for i in range(len(keys_n))]
        else:
            mono_cycles = [v for v in ker_vectors if len(v) == 1]
            others = [v for v in ker_vectors if len(v) != 1]
            cands = [{i: ONE} for v in mono_cycles for i in v] + others
        reps = []
        probe = EchelonBasis()
        for r, p in zip(image.rows, image.pivots):
            probe.rows.append(r)
            probe.pivots.append(p)
        for v in cands:
            if len(reps) == dim:
                break
            if probe.add(v) is None:
                reps.append(v)
        if len(reps) != dim:
            raise ArithmeticError("failed to complete a homology basis")
        return _BlockHomology(w, keys_n, index, dim, reps, image)

    def homology_blocks(self, source: str, twist: AutoSpec, n: int, N: int,
                        action: Optional[AutoSpec] = None, eps: int = 1):
        if action is not None:
            self.alg.check_auto(action)
        ck = (source, twist, n, N, action, eps)
        hit = self._homology_cache.get(ck)
        if hit is not None:
            return hit
        mod = self.model(source, twist, N)
        if source == "mnw" and n >= 2:
            raise UnsupportedDegree("MNW homology is available in degrees 0 and 1 only")
        cur = mod.blocks(n, action, eps)
        up = mod.blocks(n + 1, action, eps)
        down = mod.blocks(n - 1, action, eps) if n > 0 else {}
        out = []
        for w in sorted(cur):
            out.append(self._block(mod, n, w, action, eps, cur[w], up.get(w, []),
                                   down.get(w, []) if n > 0 else None))
        self._homology_cache[ck] = out
        return out

    def _stabilized(self, source, twist, n, N, action, eps):
        if N == 0:
            return True, None
        prev = self.homology_blocks(source, twist, n, N - 1, action, eps)
        cur = {b.weight: b for b in self.homology_blocks(source, twist, n, N, action, eps)}
        ok = True
        dim_prev = 0
        for pb in prev:
            dim_prev += pb.dim
            if not pb.dim:
                continue
            cb = cur[pb.weight]
            probe = EchelonBasis()
            probe.rows = list(cb.image.rows)
            probe.pivots = list(cb.image.pivots)
            for v in pb.reps:
                mapped = {cb.index[pb.keys[i]]: c for i, c in v.items()}
                if probe.add(mapped) is not None:
                    ok = False
        return ok, dim_prev

    def hh_report(self, source: str, twist, n: int, trunc: TruncationSpec,
                  action=None, prefix: str = "") -> HomologyReport:
        twist = _as_auto(twist)
        action = _as_auto(action) if action is not None else None
        if source == "mnw" and n >= 2:
            raise UnsupportedDegree("MNW homology is available in degrees 0 and 1 only")
        if source == "bar" and n + 1 > trunc.nMax:
            raise UnsupportedDegree(f"bar H_{n} needs tensor degree {n + 1} > nMax")
        blocks = self.homology_blocks(source, twist, n, trunc.N, action)
        mod = self.model(source, twist, trunc.N)
        found = []
        for b in blocks:
            for v in b.reps:
                lead = min(mod.order(b.keys[i]) for i in v)
                found.append((lead, b, v))
        found.sort(key=lambda t: t[0])
        gens = [_vec_text(mod, v, b.keys, prefix) for _, b, v in found]
        vecs = [(b.weight, {b.keys[i]: c for i, c in v.items()}) for _, b, v in found]
        stab, dim_prev = self._stabilized(source, twist, n, trunc.N, action, 1)
        return HomologyReport(twist=twist.name, n=n, N=trunc.N, dim=sum(b.dim for b in blocks),
                              stabilized=stab, generators=gens, source=source,
                              action=action.name if action is not None else None,
                              dim_prev=dim_prev, vectors=vecs)

    def is_cycle(self, source, twist, n, N, chain: Dict) -> bool:
        mod = self.model(source, twist, N)
        if n == 0:
            return True
        out = {}
        for k, c in chain.items():
            for k2, v in mod.boundary(n, k).items():
                _accumulate(out, k2, c * v)
        return not out

    def is_boundary(self, source, twist, n, N, chain: Dict) -> bool:
        """Whether ``chain`` is the boundary of a chain of degree <= N."""
        mod = self.model(source, twist, N)
        keys = set(mod.keys(n))
        if any(k not in keys for k in chain):
            raise ValueError("chain is outside the truncation")
        weights = {mod.weight(k) for k in chain}
        up = mod.blocks(n + 1)
        for w in weights:
            part = {k: c for k, c in chain.items() if mod.weight(k) == w}
            idx = {}
            image = EchelonBasis()
            for key in up.get(w, []):
                col = {}
                for k, v in mod.boundary(n + 1, key).items():
                    col[idx.setdefault(k, len(idx))] = v
                image.add(col)
            vec = {idx.setdefault(k, len(idx)): c for k, c in part.items()}
            if not image.contains(vec):
                return False
        return True

    # -- Z2 action on homology --------------------------------------------------
    def _express(self, block: _BlockHomology, vec: Vector):
        """Coordinates of ``vec`` in the representative basis modulo boundaries."""
        e = EchelonBasis(track=True)
        n_img = len(block.image.rows)
        for r in block.image.rows:
            e.add(r)
        for r in block.reps:
            e.add(r)
        combo = {}
        rest = e.reduce(vec, combo)
        if rest:
            raise TransportMismatch("transported chain is not a cycle in the span")
        return [-combo.get(n_img + i, RatFunc.coerce(0)) for i in range(len(block.reps))]

    def induced_action_on_homology(self, twist, n: int, trunc: TruncationSpec, action=None):
        """Matrix of the Z2 action on MNW homology representatives, checked two ways.

        (a) the diagonal action on ``A (x) M_n``; (b) push to the Hochschild
        complex with f, act diagonally on tensors, pull back with h.
        Returns (labels, matrix) with matrix[i][j] = coefficient of rep i in g(rep j).
        """
        twist = _as_auto(twist)
        action = _as_auto(action) if action is not None else twist
        if n > 1:
            raise UnsupportedDegree("transport uses f and h in degrees 0 and 1 only")
        blocks = self.homology_blocks("mnw", twist, n, trunc.N)
        mod = self.model("mnw", twist, trunc.N)
        labels, cols = [], []
        offset = 0
        total = sum(b.dim for b in blocks)
        for b in blocks:
            for v in b.reps:
                labels.append(_vec_text(mod, v, b.keys))
                diag = {}
                trans = {}
                for i, c in v.items():
                    key = b.keys[i]
                    f = c * action.factor(key[0]) * self.label_factor(action, key[1])
                    _accumulate(diag, b.index[key], f)
                    for k2, c2 in self._transport(key, twist, action).items():
                        if k2 not in b.index:
                            raise TransportMismatch("transport left the truncation block")
                        _accumulate(trans, b.index[k2], c * c2)
                ca = self._express(b, diag)
                cb = self._express(b, trans)
                if ca != cb:
                    raise TransportMismatch(f"diagonal and f/h transports differ on {labels[-1]}")
                col = [RatFunc.coerce(0)] * total
                for i, x in enumerate(ca):
                    col[offset + i] = x
                cols.append(col)
            offset += b.dim
        matrix = [[cols[j][i] for j in range(total)] for i in range(total)]
        return labels, matrix

    def _transport(self, key, twist: AutoSpec, action: AutoSpec):
        """h o action o f on one MNW basis chain ``a . label`` (degrees 0, 1)."""
        a, lab = key
        alg = self.alg
        if lab == "unit":
            return {key: action.factor(a)}
        t = GEN_OF[lab]
        # f: a . e_t -> a (x) t ; act diagonally
        ca = action.factor(a) * action.factor(t)
        out = {}
        # h: m (x) c -> sum rho(y) m x . label over h_1(1, c, 1)
        for x, y, lab1, cf in self.res.h1_middle(t):
            cy = ca * cf * twist.factor(y)
            for m1, c1 in alg.mono_mul(y, a).items():
                for m2, c2 in alg.mono_mul(m1, x).items():
                    _accumulate(out, (m2, lab1), cy * c1 * c2)
        return out

    def invariant_dim(self, twist, n: int, trunc: TruncationSpec, action=None,
                      source: str = "mnw") -> int:
        """Dimension of the +1 eigenspace of the action on H_n."""
        twist = _as_auto(twist)
        action = _as_auto(action) if action is not None else twist
        blocks = self.homology_blocks(source, twist, n, trunc.N, action, 1)
        return sum(b.dim for b in blocks)

    def orbifold_hh(self, orbifold: str, n: int, trunc: TruncationSpec,
                    source: str = "auto") -> HomologyReport:
        """H_n of A x_rho Z2 as H_n(A, A)^rho + H_n(A, _rho A)^rho."""
        rho = AutoSpec.from_name(ORBIFOLDS[orbifold])
        if source == "auto":
            source = "mnw" if n <= 1 else "bar"
        r0 = self.hh_report(source, IDENTITY, n, trunc, action=rho)
        r1 = self.hh_report(source, rho, n, trunc, action=rho,
                            prefix=TWIST_MARK[rho.name])
        return _direct_sum(orbifold, r0, r1)

    def orbifold_hc(self, orbifold: str, n: int, trunc: TruncationSpec) -> HomologyReport:
        rho = AutoSpec.from_name(ORBIFOLDS[orbifold])
        r0 = self.hc_report(IDENTITY, n, trunc, action=rho)
        r1 = self.hc_report(rho, n, trunc, action=rho)
        r1.generators = [f"{TWIST_MARK[rho.name]}[{g}]" for g in r1.generators]
        return _direct_sum(orbifold, r0, r1)

    # -- cyclic homology ---------------------------------------------------------
    def hc_report(self, twist, n: int, trunc: TruncationSpec, action=None) -> HomologyReport:
        """HC_n from the (b, B) total complex on twist-invariant chains."""
        twist = _as_auto(twist)
        action = _as_auto(action) if action is not None else None
        if n > 2 or n < 0:
            raise UnsupportedDegree("cyclic homology is computed for n <= 2")
        blocks = self._hc_blocks(twist, n, trunc.N, action)
        mod = self.model("bar", twist, trunc.N)
        gens = []
        for w, keys, dim, reps in blocks:
            for v in reps:
                parts = {}
                for i, c in v.items():
                    k, key = keys[i]
                    parts.setdefault(k, {})[i] = c
                gens.append(" ⊕ ".join(
                    f"C{n - 2 * k}:" + _vec_text(mod, {i: c for i, c in part.items()},
                                                 [kk[1] for kk in keys])
                    for k, part in sorted(parts.items())))
        dim = sum(b[2] for b in blocks)
        stab = True
        dim_prev = None
        if trunc.N > 0:
            prev = self._hc_blocks(twist, n, trunc.N - 1, action)
            dim_prev = sum(b[2] for b in prev)
            stab = self._hc_injective(prev, twist, n, trunc.N, action)
        return HomologyReport(twist=twist.name, n=n, N=trunc.N, dim=dim, stabilized=stab,
                              generators=gens, source="bar-cyclic",
                              action=action.name if action is not None else None,
                              dim_prev=dim_prev)

    def _tot_keys(self, mod, n, twist, action):
        """Basis of Tot_n = C_n + C_{n-2} + ... restricted to invariants, by weight."""
        out: Dict[int, list] = {}
        k = 0
        while n - 2 * k >= 0:
            for key in mod.keys(n - 2 * k):
                if not twist.is_identity and mod.sign(key, twist) != 1:
                    continue
                if action is not None and mod.sign(key, action) != 1:
                    continue
                out.setdefault(mod.weight(key), []).append((k, key))
            k += 1
        return out

    def _tot_boundary(self, mod, n, item, twist):
        k, key = item
        m = n - 2 * k
        out = {}
        if m >= 1:
            for k2, v in mod.boundary(m, key).items():
                out[(k, k2)] = v
        if k >= 1:
            for k2, v in self.B_terms(key, twist, mod.normalized).items():
                _accumulate(out, (k - 1, k2), v)
        return out

    def _hc_blocks(self, twist, n, N, action):
        if action is not None:
            self.alg.check_auto(action)
        ck = ("hc", twist, n, N, action)
        hit = self._homology_cache.get(ck)
        if hit is not None:
            return hit
        mod = self.model("bar", twist, N)
        cur = self._tot_keys(mod, n, twist, action)
        up = self._tot_keys(mod, n + 1, twist, action)
        down = self._tot_keys(mod, n - 1, twist, action) if n > 0 else {}
        out = []
        for w in sorted(cur):
            keys = cur[w]
            index = {k: i for i, k in enumerate(keys)}
            idx_down = {k: i for i, k in enumerate(down.get(w, []))}
            e = EchelonBasis(track=True)
            kers = []
            if n > 0:
                for item in keys:
                    col = {idx_down[k]: v for k, v in self._tot_boundary(mod, n, item, twist).items()}
                    dep = e.add(col)
                    if dep is not None:
                        kers.append(dep)
            else:
                kers = [{i: ONE} for i in range(len(keys))]
            image = EchelonBasis()
            for item in up.get(w, []):
                col = {index[k]: v for k, v in self._tot_boundary(mod, n + 1, item, twist).items()}
                if col:
                    image.add(col)
            dim = len(keys) - len(e) - len(image)
            probe = EchelonBasis()
            probe.rows = list(image.rows)
            probe.pivots = list(image.pivots)
            cands = sorted(kers, key=lambda v: (len(v) != 1, min(v)))
            reps = []
            for v in cands:
                if len(reps) == dim:
                    break
                if probe.add(v) is None:
                    reps.append(v)
            out.append((w, keys, dim, reps))
        self._homology_cache[ck] = out
        return out

    def _hc_injective(self, prev, twist, n, N, action):
        mod = self.model("bar", twist, N)
        up = self._tot_keys(mod, n + 1, twist, action)
        cur = self._tot_keys(mod, n, twist, action)
        for w, keys, dim, reps in prev:
            if not dim:
                continue
            index = {k: i for i, k in enumerate(cur.get(w, []))}
            probe = EchelonBasis()
            for item in up.get(w, []):
                col = {index[k]: v for k, v in self._tot_boundary(mod, n + 1, item, twist).items()}
                if col:
                    probe.add(col)
            for v in reps:
                if probe.add({index[keys[i]]: c for i, c in v.items()}) is not None:
                    return False
        return True


def _direct_sum(name: str, r0: HomologyReport, r1: HomologyReport) -> HomologyReport:
    prev = None if r0.dim_prev is None else r0.dim_prev + r1.dim_prev
    return HomologyReport(twist=name, n=r0.n, N=r0.N, dim=r0.dim + r1.dim,
                          stabilized=r0.stabilized and r1.stabilized,
                          generators=r0.generators + r1.generators, source=r0.source,
                          action=r0.action, dim_prev=prev, vectors=r0.vectors + r1.vectors)


def _as_auto(x) -> AutoSpec:
    if isinstance(x, AutoSpec):
        return x
    return AutoSpec.from_name(x)

