from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import octonions
from splitoct.octonion import (
    BASIS_INDICES,
    Mat2,
    Octonion,
    basis,
    bilin,
    conj,
    decompose,
    embed_eta,
    format_octonion,
    gram_matrix,
    mult,
    norm,
    one,
    parse_octonion,
    recompose,
    splitting_element,
    trace,
)

many = settings(max_examples=1000, derandomize=True)


@many
@given(octonions, octonions)
def test_norm_is_multiplicative(x, y):
    assert norm(mult(x, y)) == norm(x) * norm(y)


@many
@given(octonions)
def test_characteristic_identity(x):
    assert mult(x, x) - x.scale(trace(x)) + one().scale(norm(x)) == Octonion((0,) * 8)


@many
@given(octonions, octonions)
def test_conjugation_reverses_products(x, y):
    assert conj(mult(x, y)) == mult(conj(y), conj(x))


@given(octonions, octonions)
def test_alternative_laws(x, y):
    assert mult(mult(x, x), y) == mult(x, mult(x, y))
    assert mult(mult(y, x), x) == mult(y, mult(x, x))


@given(octonions)
def test_conj_norm_trace(x):
    assert mult(x, conj(x)) == one().scale(norm(x))
    assert x + conj(x) == one().scale(trace(x))
    assert conj(conj(x)) == x


@given(octonions, octonions)
def test_bilinear_form_is_polar_of_norm(x, y):
    assert 2 * bilin(x, y) == norm(x + y) - norm(x) - norm(y)
    assert 2 * bilin(x, y) == trace(mult(x, conj(y)))
    g = gram_matrix()
    assert bilin(x, y) == sum(x.coords[i] * g[i][j] * y.coords[j] for i in range(8) for j in range(8))


def test_one_is_identity_and_not_commutative():
    e = one()
    for i in BASIS_INDICES:
        assert mult(e, basis(i)) == basis(i) == mult(basis(i), e)
    assert mult(basis(1), basis(2)) != mult(basis(2), basis(1))


def test_split_form_signature():
    # hyperbolic: b_i pairs only with b_-i
    for i in BASIS_INDICES:
        for j in BASIS_INDICES:
            want = 0
            if i == -j:
                want = Fraction(-1, 2) if abs(i) < 4 else Fraction(1, 2)
            assert bilin(basis(i), basis(j)) == want


@given(octonions)
def test_decompose_recompose_round_trip(x):
    for u in "ijk":
        a, b = decompose(x, u)
        assert recompose(a, b, u) == x


@given(octonions, octonions)
def test_decompositions_agree_with_product(x, y):
    # (A + B l)(C + D l) = (AC + conj(D) B) + (DA + B conj(C)) l, with conj the adjugate
    for u in "ijk":
        a, b = decompose(x, u)
        c, d = decompose(y, u)
        lhs = decompose(mult(x, y), u)
        assert lhs == (a * c + d.adjugate() * b, d * a + b * c.adjugate())


def test_eta_embedding_is_an_algebra_map():
    m1 = Mat2.of([[1, 2], [3, 4]])
    m2 = Mat2.of([[0, -1], [5, 2]])
    for u in "ijk":
        assert mult(embed_eta(u, m1), embed_eta(u, m2)) == embed_eta(u, m1 * m2)
        assert norm(embed_eta(u, m1)) == m1.det()


def test_splitting_elements():
    swap = Mat2.of([[0, 1], [1, 0]])
    i_elt, j_elt, k_elt = (embed_eta(u, swap) for u in "ijk")
    assert splitting_element("i") == j_elt
    assert splitting_element("j") == k_elt
    assert splitting_element("k") == i_elt
    assert embed_eta("i", swap) == i_elt
    for u in "ijk":
        assert norm(splitting_element(u)) == -1


def test_parse_and_format():
    x = parse_octonion("1, -2/3, 0, 0, 5, 0, 0, 7")
    assert x.coords[1] == Fraction(-2, 3)
    assert parse_octonion(format_octonion(x)) == x
    for bad in ("1,2,3", "a,b,c,d,e,f,g,h", ""):
        with pytest.raises(ValueError):
            parse_octonion(bad)
