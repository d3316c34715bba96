import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qpodles.exactla import (DimensionMismatch, EchelonBasis, SparseMatrix, in_span,
                             kernel_basis, mat_vec, rank)
from qpodles.qscalar import ONE, Q, RatFunc

M_PROP = SparseMatrix.from_rows([[1, Q], [Q, Q ** 2]])


def test_rank_examples():
    assert rank(M_PROP) == 1
    assert rank(SparseMatrix(0, 3)) == 0
    assert rank(SparseMatrix.from_rows([[1, 0, 0], [0, 1 - Q ** 2, 0], [0, 0, Q]])) == 3


def test_kernel_examples():
    (v,) = kernel_basis(SparseMatrix.from_rows([[1, Q]]))
    assert v[0] / v[1] == -Q
    eye = SparseMatrix.from_rows([[1, 0], [0, 1]])
    assert kernel_basis(eye) == []
    (w,) = kernel_basis(M_PROP)
    assert mat_vec(M_PROP, w) == {}


def test_in_span_examples():
    assert in_span({}, M_PROP)
    assert in_span(M_PROP.column(0), M_PROP)
    assert not in_span({0: ONE}, M_PROP)
    aug = M_PROP.hstack([{0: ONE}])
    assert rank(aug) == rank(M_PROP) + 1


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        in_span({5: ONE}, M_PROP)
    with pytest.raises(DimensionMismatch):
        mat_vec(M_PROP, {2: ONE})
    with pytest.raises(DimensionMismatch):
        SparseMatrix(2, 2, columns=[{}])


def test_json_roundtrip():
    M = SparseMatrix.from_rows([[1, Q / (1 - Q)], [0, Q ** -3]])
    back = SparseMatrix.from_json(M.to_json())
    assert back.entries() == M.entries()
    assert (back.n_rows, back.n_cols) == (2, 2)


def test_echelon_tracking():
    e = EchelonBasis(track=True)
    assert e.add({0: ONE}) is None
    assert e.add({1: Q}) is None
    dep = e.add({0: RatFunc.coerce(2), 1: Q ** 2})
    # dependency among the three inputs: 2*v0 + q*v1 - v2 = 0
    assert dep is not None
    assert dep[0] / dep[2] == -2 and dep[1] / dep[2] == -Q


entry = st.sampled_from([0, 0, 0, 1, -1, 2, Q, 1 - Q, Q ** 2 + 1, 1 / (1 + Q)])


@st.composite
def matrices(draw):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 4))
    rows = [[RatFunc.coerce(draw(entry)) for _ in range(c)] for _ in range(r)]
    return SparseMatrix.from_rows(rows)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_rank_invariances(M, rnd):
    rk = rank(M)
    assert rank(M.transpose()) == rk
    rp = list(range(M.n_rows))
    cp = list(range(M.n_cols))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    assert rank(M.permuted(rp, cp)) == rk
    ker = kernel_basis(M)
    assert len(ker) == M.n_cols - rk
    for v in ker:
        assert mat_vec(M, v) == {}


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(entry, min_size=4, max_size=4))
def test_in_span_matches_rank(M, vals):
    v = {i: RatFunc.coerce(x) for i, x in enumerate(vals[:M.n_rows]) if x}
    assert in_span(v, M) == (rank(M.hstack([v])) == rank(M))


def test_larger_random_rank_matches_specialization():
    # rank over Q(q) is at least the rank at any specialization
    rng = random.Random(3)
    rows = [[RatFunc.poly([rng.randint(-2, 2) for _ in range(3)]) for _ in range(7)]
            for _ in range(6)]
    M = SparseMatrix.from_rows(rows)
    spec = [[x.eval_at(Fraction(5, 3)) for x in r] for r in rows]
    assert rank(M) >= rank(SparseMatrix.from_rows(spec))
