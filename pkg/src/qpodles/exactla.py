"""Exact sparse linear algebra over Q(q).

Vectors are ``{index: RatFunc}`` dicts with no zero entries.  A
:class:`SparseMatrix` is stored by columns, because boundary matrices are
assembled one basis chain (column) at a time.  All rank, kernel and
membership queries go through :class:`EchelonBasis`, an incremental
column-echelon form whose pivots are chosen by lowest coefficient
complexity to keep rational-function growth down.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Optional

from qpodles.qscalar import ONE, RatFunc

__all__ = ["SparseMatrix", "EchelonBasis", "DimensionMismatch", "rank", "kernel_basis",
           "in_span", "mat_vec"]

Vector = Dict[int, RatFunc]


class DimensionMismatch(ValueError):
    pass


def axpy(v: Vector, a: RatFunc, w: Vector) -> None:
    """In place: v <- v + a*w."""
    for k, c in w.items():
        x = v.get(k)
        if x is None:
            v[k] = a * c
        else:
            x = x + a * c
            if x:
                v[k] = x
            else:
                del v[k]


def _pick_pivot(v: Vector) -> int:
    best = None
    best_key = None
    for k, c in v.items():
        key = (c.complexity(), k)
        if best_key is None or key < best_key:
            best, best_key = k, key
    return best


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of Q(q)^n.

    Stored vectors are normalized to 1 at their pivot and reduced against
    every earlier pivot, so a new vector is reduced in one ordered pass.
    With ``track=True`` each stored vector remembers its expression in the
    inserted vectors, which :meth:`add` uses to report dependencies.
    """

    def __init__(self, track: bool = False):
        self.rows: List[Vector] = []
        self.pivots: List[int] = []
        self.track = track
        self.combos: List[Vector] = []
        self.n_added = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vector, combo: Optional[Vector] = None) -> Vector:
        v = dict(v)
        for p, row, cb in zip(self.pivots, self.rows, self.combos or [None] * len(self.rows)):
            c = v.get(p)
            if c is not None:
                axpy(v, -c, row)
                if combo is not None:
                    axpy(combo, -c, cb)
        return v

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def add(self, v: Vector):
        """Insert ``v``; returns None if independent, else the dependency.

        The dependency (only with ``track``) is a vector ``d`` over insertion
        indices with ``sum d[i] * inserted[i] = 0`` and ``d[this] = 1``.
        """
        idx = self.n_added
        self.n_added += 1
        combo = {idx: ONE} if self.track else None
        r = self.reduce(v, combo)
        if not r:
            return combo if self.track else {}
        p = _pick_pivot(r)
        inv = r[p].inverse()
        if not inv.is_one():
            r = {k: c * inv for k, c in r.items()}
            if combo is not None:
                combo = {k: c * inv for k, c in combo.items()}
        self.rows.append(r)
        self.pivots.append(p)
        if self.track:
            self.combos.append(combo)
        return None


class SparseMatrix:
    """Immutable sparse matrix over Q(q), stored column-wise."""

    def __init__(self, n_rows: int, n_cols: int, entries=None, columns=None):
        self.n_rows = n_rows
        self.n_cols = n_cols
        if columns is not None:
            if len(columns) != n_cols:
                raise DimensionMismatch("column count does not match n_cols")
            cols = [{r: RatFunc.coerce(c) for r, c in col.items() if c} for col in columns]
        else:
            cols = [dict() for _ in range(n_cols)]
            for (r, c), v in (entries or {}).items():
                v = RatFunc.coerce(v)
                if v:
                    cols[c][r] = v
        for col in cols:
            for r in col:
                if not 0 <= r < n_rows:
                    raise IndexError(f"row index {r} out of range")
        self._cols = cols
        self._echelon = None

    @classmethod
    def from_rows(cls, rows) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        ent = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)}
        return cls(n_rows, n_cols, ent)

    def column(self, j: int) -> Vector:
        return dict(self._cols[j])

    def columns(self):
        return [dict(c) for c in self._cols]

    def entries(self):
        return {(r, j): v for j, col in enumerate(self._cols) for r, v in col.items()}

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.n_cols, self.n_rows,
                            {(j, r): v for (r, j), v in self.entries().items()})

    def permuted(self, row_perm, col_perm) -> "SparseMatrix":
        return SparseMatrix(self.n_rows, self.n_cols,
                            {(row_perm[r], col_perm[j]): v for (r, j), v in self.entries().items()})

    def hstack(self, vectors: Iterable[Vector]) -> "SparseMatrix":
        extra = [dict(v) for v in vectors]
        return SparseMatrix(self.n_rows, self.n_cols + len(extra),
                            columns=self.columns() + extra)

    def echelon(self) -> EchelonBasis:
        if self._echelon is None:
            e = EchelonBasis()
            for col in self._cols:
                if col:
                    e.add(col)
            self._echelon = e
        return self._echelon

    def rank(self) -> int:
        return len(self.echelon())

    def kernel_basis(self) -> List[Vector]:
        e = EchelonBasis(track=True)
        out = []
        for j, col in enumerate(self._cols):
            dep = e.add(col)
            if dep is not None:
                out.append(dep)
        return out

    def in_span(self, v: Vector) -> bool:
        if any(not 0 <= r < self.n_rows for r in v):
            raise DimensionMismatch("vector length does not match the number of rows")
        return self.echelon().contains(v)

    def mat_vec(self, v: Vector) -> Vector:
        out: Vector = {}
        for j, c in v.items():
            if not 0 <= j < self.n_cols:
                raise DimensionMismatch("vector length does not match the number of columns")
            axpy(out, c, self._cols[j])
        return out

    def to_json(self) -> str:
        ent = sorted(self.entries().items())
        return json.dumps({"rows": self.n_rows, "cols": self.n_cols,
                           "entries": [{"r": r, "c": c, "coeff": str(v)} for (r, c), v in ent]})

    @classmethod
    def from_json(cls, text: str) -> "SparseMatrix":
        d = json.loads(text)
        return cls(d["rows"], d["cols"],
                   {(e["r"], e["c"]): RatFunc.parse(e["coeff"]) for e in d["entries"]})

    def __repr__(self):
        return f"SparseMatrix({self.n_rows}x{self.n_cols}, nnz={sum(map(len, self._cols))})"


def rank(M: SparseMatrix) -> int:
    return M.rank()


def kernel_basis(M: SparseMatrix) -> List[Vector]:
    return M.kernel_basis()


def in_span(v: Vector, M: SparseMatrix) -> bool:
    return M.in_span(v)


def mat_vec(M: SparseMatrix, v: Vector) -> Vector:
    return M.mat_vec(v)
