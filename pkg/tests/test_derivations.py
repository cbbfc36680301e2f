from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from splitoct.apartment import is_long
from splitoct.automorphisms import ALL_LABELS, RootGen, to_matrix
from splitoct.core_arith import MultiPoly
from splitoct.derivations import (
    E_root,
    NotNilpotent,
    bracket,
    chevalley_basis_check,
    derivation_nullspace,
    derivation_system,
    exp_nilpotent,
    identity,
    is_derivation,
    nilpotency_index,
    nilpotency_report,
    nullspace,
    rank,
)


@pytest.fixture(scope="module")
def basis():
    return derivation_nullspace()


@pytest.fixture(scope="module")
def report(basis):
    return {r["label"]: r for r in nilpotency_report(basis)}


def test_dimension_matches_sympy_oracle(basis):
    rows = derivation_system()
    oracle = 64 - sympy.Matrix(rows).rank()
    assert oracle == 14
    assert basis.dimension == 14


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=5))
def test_rank_and_nullspace_match_sympy(rows):
    m = sympy.Matrix(rows)
    assert rank(rows) == m.rank()
    ns = nullspace(rows, 5)
    assert len(ns) == 5 - m.rank()
    for v in ns:
        assert all(sum(Fraction(r[j]) * v[j] for j in range(5)) == 0 for r in rows)


@pytest.mark.parametrize("lab", ALL_LABELS, ids=str)
def test_E_is_derivation_in_span(lab, basis):
    m = E_root(lab)
    assert is_derivation(m)
    assert basis.contains(m)


@pytest.mark.parametrize("lab", ALL_LABELS, ids=str)
def test_exp_matches_generator(lab):
    t = MultiPoly.var("t")
    assert exp_nilpotent(E_root(lab), t) == to_matrix(RootGen(lab, t))


def test_brackets_close(basis):
    for a in ALL_LABELS[:4]:
        for b in ALL_LABELS[6:]:
            br = bracket(E_root(a), E_root(b))
            assert is_derivation(br)
            assert basis.contains(br)


def test_identity_is_not_a_derivation():
    assert not is_derivation(identity())


def test_exp_rejects_non_nilpotent():
    assert nilpotency_index(identity()) is None
    with pytest.raises(NotNilpotent):
        exp_nilpotent(identity())


def test_chevalley_axioms():
    rep = chevalley_basis_check()
    assert rep["failures"] == []
    assert all(rep[k] for k in "abcde")


def test_literal_readings_fail():
    # the readings kept for comparison do not hold; the standard ones above do
    lit = chevalley_basis_check()["literal_readings"]
    assert len(lit["b_literal"]) == 8
    assert len(lit["c_root_coefficients"]) == 8
    assert len(lit["c_swapped"]) == 12


@pytest.mark.parametrize("lab", ALL_LABELS, ids=str)
def test_nilpotency_by_root_length(lab, report):
    r = report[str(lab)]
    if is_long(lab.root):
        assert r["square_zero"] and r["ad_cube_zero"]
        assert r["nilpotency_index"] == 2
        assert r["ad_nilpotency_index"] == 3
    else:
        # short root vectors act with a 3-step flag: E^3 = 0, ad(E)^4 = 0
        assert not r["square_zero"] and not r["ad_cube_zero"]
        assert r["nilpotency_index"] == 3
        assert r["ad_nilpotency_index"] == 4
