import json

import pytest
from hypothesis import given, settings, strategies as st

from qpodles.chern import (FA, TAU0, NotAProjection, haar_fA, index_table, pair, tau0)
from qpodles.crossed import CrossedElement, CrossedMatrix, unit_matrix
from qpodles.podles import LB, PBWMonomial, Podles, mu, sigma
from qpodles.qscalar import Q, RatFunc

ALG = Podles()
A, B, Bs = ALG.A, ALG.B, ALG.Bs


def test_tau0_examples():
    assert tau0(ALG.one) == 1
    assert tau0(A + 3 * B ** 2) == 0
    assert tau0(B * Bs) == 1


def test_haar_examples():
    assert haar_fA(A) == 1
    assert haar_fA(A ** 2 * ALG.monomial(PBWMonomial(0, LB, 3))) == 0
    assert haar_fA(A ** 3) == (1 - Q ** 4) / (1 - Q ** 8)
    assert haar_fA(ALG.one) == 0


def test_pair_examples():
    one_d = unit_matrix(ALG, sigma())
    assert pair(one_d, TAU0) == 1
    assert pair(one_d, FA.twisted()) == 0
    assert pair(unit_matrix(ALG, mu()), TAU0) == 1


def test_pair_rejects_non_projection():
    with pytest.raises(NotAProjection):
        pair(CrossedMatrix([[CrossedElement.make(ALG, A, 0)]]), TAU0)


def test_index_tables():
    t = index_table("Dq")
    assert t.cols == ["Sτ0", "Sf_A", "Sστ0", "Sσf_A"]
    assert t.entries == [[1, 0, 0, 0]]
    t = index_table("RP2q")
    assert t.rows == ["[1_RP2q]"] and t.entries == [[1]]
    assert json.loads(index_table("Dq").to_json())["notes"] == ["f_A(1) := 0"]


def test_index_table_user_projection():
    zero = CrossedMatrix([[CrossedElement.make(ALG, 0, 0, mu())]])
    t = index_table("RP2q", [zero], extra_labels=["[P]"])
    assert t.rows == ["[1_RP2q]", "[P]"]
    assert t.entries[1] == [0]
    half = ALG.scalar(1) / 2
    p = CrossedMatrix([[CrossedElement.make(ALG, half, half, mu())]])
    assert index_table("RP2q", [p]).entries[1] == [RatFunc.coerce(1) / 2]
    with pytest.raises(NotAProjection):
        index_table("RP2q", [unit_matrix(ALG, sigma())])


def test_tau0_vanishes_on_commutators():
    basis = Podles.basis_up_to(3)
    for m in basis:
        for n in basis:
            x, y = ALG.monomial(m), ALG.monomial(n)
            assert tau0(x * y - y * x) == 0


unitish = st.sampled_from(["1 | 0", "1/2 | 1/2", "1/2 | -1/2", "0 | 0"])


@settings(max_examples=30, deadline=None)
@given(st.lists(unitish, min_size=1, max_size=3), st.permutations([0, 1, 2]))
def test_pairing_additive_and_permutation_invariant(diag, perm):
    mats = [CrossedMatrix([[CrossedElement.parse(ALG, d, sigma())]]) for d in diag]
    total = mats[0]
    for m in mats[1:]:
        total = total.direct_sum(m)
    for phi in (TAU0, FA, TAU0.twisted(), FA.twisted()):
        assert pair(total, phi) == sum((pair(m, phi) for m in mats), RatFunc.coerce(0))
        if total.n == 3:
            assert pair(total.permuted(list(perm)), phi) == pair(total, phi)
