from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qpodles._parse import ParseError
from qpodles.podles import (IDENTITY, LB, LBS, UNIT, AutoSpec, PBWMonomial, Podles, mu,
                            rewrite_word, sigma)
from qpodles.qscalar import Q, RatFunc

ALG = Podles()
A, B, Bs = ALG.A, ALG.B, ALG.Bs
LETTERS = ("A", "B", "Bs")


def test_normalize_word_examples():
    assert ALG.normalize_word(["B", "A"]) == Q ** 2 * (A * B)
    assert ALG.normalize_word(["B", "Bstar"]) == 1 - Q ** 4 * A ** 2
    assert ALG.normalize_word([]) == ALG.one
    assert ALG.normalize_word("A B A B".split()) == Q ** 2 * ALG.monomial(PBWMonomial(2, LB, 2))


def test_mul_examples():
    assert ALG.mul(A, 1) == A
    assert ALG.mul(B, Bs) == 1 - Q ** 4 * A ** 2
    assert ALG.mul(A * B, A * B) == Q ** 2 * ALG.monomial(PBWMonomial(2, LB, 2))


def test_star_examples():
    assert ALG.star(A) == A
    assert ALG.star(B) == Bs
    assert ALG.star(A * B) == Q ** -2 * (A * Bs)


def test_auto_examples():
    assert ALG.apply_auto(sigma(), B) == -B
    assert ALG.apply_auto(mu(), A) == -A
    x = A * B ** 3
    assert ALG.apply_auto(sigma(), ALG.apply_auto(sigma(), x)) == x


def test_basis_counts_and_order():
    assert Podles.basis_up_to(0) == [UNIT]
    assert len(Podles.basis_up_to(1)) == 4
    assert [m.text() for m in Podles.basis_up_to(2)] == \
        ["1", "A", "B", "Bs", "A^2", "A*B", "A*Bs", "B^2", "Bs^2"]
    for N in range(6):
        assert len(Podles.basis_up_to(N)) == (N + 1) ** 2


def test_parse_examples():
    assert ALG.parse("q^2*A^2*B") == Q ** 2 * ALG.monomial(PBWMonomial(2, LB, 1))
    assert ALG.parse("B*A").to_text() == "q^2*A*B"
    assert ALG.parse("Bs*B") == 1 - A ** 2
    assert ALG.parse("1").to_text() == "1"


@pytest.mark.parametrize("bad", ["A*", "C", "(A", "A^-1", "A^", "B $ A"])
def test_parse_errors_carry_position(bad):
    with pytest.raises(ParseError) as info:
        ALG.parse(bad)
    assert isinstance(info.value, SyntaxError)
    assert 0 <= info.value.pos <= len(bad)


@pytest.mark.parametrize("s", [Fraction(1), Fraction(1, 3), Fraction(0)])
def test_defining_relations(s):
    alg = Podles(s)
    a, b, bs = alg.A, alg.B, alg.Bs
    s2 = RatFunc.coerce(s * s)
    assert (b * a - Q ** 2 * (a * b)).is_zero()
    assert (bs * b + a ** 2 - ((1 - s2) * a + s2)).is_zero()
    assert (b * bs + Q ** 4 * a ** 2 - ((1 - s2) * Q ** 2 * a + s2)).is_zero()


@pytest.mark.parametrize("s", [Fraction(1), Fraction(1, 2)])
def test_critical_pair_b_bs_b(s):
    alg = Podles(s)
    left = alg.mul(alg.mul(alg.B, alg.Bs), alg.B)
    right = alg.mul(alg.B, alg.mul(alg.Bs, alg.B))
    assert left == right
    word = ["B", "Bs", "B"]
    assert rewrite_word(alg, word, "leftmost") == rewrite_word(alg, word, "rightmost")


def test_mu_needs_s_one():
    with pytest.raises(ValueError):
        Podles(Fraction(1, 2)).apply_auto(mu(), Podles(Fraction(1, 2)).A)


def test_autospec_names():
    assert IDENTITY.name == "id"
    assert AutoSpec.from_name("sigma") == sigma()
    assert AutoSpec.from_name("mu").name == "mu"
    with pytest.raises(ValueError):
        AutoSpec.from_name("tau")


words = st.lists(st.sampled_from(LETTERS), max_size=6)


@st.composite
def elements(draw, max_deg=3):
    basis = Podles.basis_up_to(max_deg)
    ms = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3, unique=True))
    cs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(ms), max_size=len(ms)))
    k = draw(st.integers(-2, 2))
    return ALG.element({m: RatFunc.q_power(k, c) for m, c in zip(ms, cs)})


@settings(max_examples=200, deadline=None)
@given(words)
def test_confluence(word):
    left = rewrite_word(ALG, word, "leftmost")
    assert left == rewrite_word(ALG, word, "rightmost")
    assert left == ALG.normalize_word(word)


@settings(max_examples=100, deadline=None)
@given(elements(), elements(), elements())
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=60, deadline=None)
@given(elements(), elements())
def test_star_laws(x, y):
    assert ALG.star(ALG.star(x)) == x
    assert ALG.star(x * y) == ALG.star(y) * ALG.star(x)


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), st.sampled_from([sigma(), mu()]))
def test_automorphism_laws(x, y, rho):
    ap = ALG.apply_auto
    assert ap(rho, x * y) == ap(rho, x) * ap(rho, y)
    assert ap(rho, ap(rho, x)) == x
    assert ap(rho, x).degree == x.degree


@settings(max_examples=60, deadline=None)
@given(elements())
def test_print_parse_roundtrip(x):
    assert ALG.parse(x.to_text()) == x


def test_monomial_degree_weight():
    m = PBWMonomial(2, LBS, 3)
    assert m.degree == 5
    assert m.weight == -3
    assert m.text() == "A^2*Bs^3"
