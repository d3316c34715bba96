import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from qpodles import _pypoly

_cpoly = pytest.importorskip("qpodles._cpoly")


def trimmed(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


small = st.lists(st.integers(-50, 50), max_size=7).map(trimmed)
huge = st.lists(st.integers(-(1 << 80), 1 << 80), max_size=5).map(trimmed)
polys = st.one_of(small, small, huge)


@settings(max_examples=300, deadline=None)
@given(polys, polys)
def test_binary_ops_agree(a, b):
    for name in ("padd", "psub", "pmul", "pgcd", "prem"):
        if name == "prem" and not b:
            continue
        assert getattr(_cpoly, name)(a, b) == getattr(_pypoly, name)(a, b), name


@settings(max_examples=300, deadline=None)
@given(polys, polys.filter(bool))
def test_canon_and_exquo_agree(a, b):
    assert _cpoly.canon(a, b) == _pypoly.canon(a, b)
    prod = _pypoly.pmul(a, b)
    assert _cpoly.pexquo(prod, b) == _pypoly.pexquo(prod, b) == a
    assert _cpoly.pcontent(a) == _pypoly.pcontent(a)


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        _cpoly.pexquo((1, 0, 1), (1, 1))
    with pytest.raises(ZeroDivisionError):
        _cpoly.canon((1,), ())


@pytest.mark.parametrize("forced,want", [("python", "_pypoly"), ("", "_cpoly")])
def test_kernel_selection(forced, want):
    r = subprocess.run([sys.executable, "-c", "import qpodles; print(qpodles.KERNEL)"],
                       capture_output=True, text=True, check=True,
                       env={**os.environ, "QPODLES_KERNEL": forced})
    assert r.stdout.strip() == want


def test_fallback_gives_same_homology():
    code = ("from qpodles.homology import HomologyEngine, TruncationSpec\n"
            "e = HomologyEngine()\n"
            "print([e.hh_report('mnw', t, n, TruncationSpec(4)).dim "
            "for t in ('id', 'sigma', 'mu') for n in (0, 1)])")
    dims = []
    for forced in ("python", ""):
        r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                           check=True, env={**os.environ, "QPODLES_KERNEL": forced})
        dims.append(r.stdout.strip())
    assert dims[0] == dims[1] == "[10, 8, 2, 0, 0, 0]"
