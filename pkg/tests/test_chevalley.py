import pytest

from splitoct.automorphisms import RootLabel
from splitoct.chevalley import (
    CommutatorSpec,
    VacuousPair,
    extract_constants,
    holds_symbolically,
    identity_residual,
    load_expected,
    load_reference,
    nonvacuous_pairs,
    product_word,
    root_string,
    table_pairs,
)

L = RootLabel.parse


def spec(a, b):
    return CommutatorSpec(L(a), L(b))


def test_root_string_long_short_includes_2_3():
    assert root_string(L("gamma+i"), L("delta+k")) == [(1, 1), (1, 2), (1, 3), (2, 3)]


def test_root_string_order_is_j_then_i():
    for sp in nonvacuous_pairs():
        s = root_string(sp.alpha, sp.beta)
        assert s == sorted(s, key=lambda ij: (ij[1], ij[0]))


def test_opposite_labels_are_vacuous():
    with pytest.raises(VacuousPair):
        root_string(L("delta+i"), L("delta-i"))


def test_table_pairs_are_the_nonvacuous_pairs():
    assert set(table_pairs()) == set(nonvacuous_pairs())
    assert len(table_pairs()) == 60


@pytest.mark.parametrize(
    "a,b", [("gamma+i", "delta+k"), ("delta+i", "delta+j"), ("gamma-k", "delta+i"), ("delta-i", "gamma+k"), ("gamma+j", "gamma+k")]
)
def test_extracted_constants_match_golden(a, b):
    got = [e.to_json() for e in extract_constants(spec(a, b))]
    assert got == load_expected()[(a, b)]


def test_identity_is_sharp():
    sp = spec("delta+i", "delta+j")
    consts = [e.constant for e in extract_constants(sp)]
    assert holds_symbolically(sp, consts)
    for k in range(len(consts)):
        bumped = list(consts)
        bumped[k] = -bumped[k]
        assert not holds_symbolically(sp, bumped)


def test_reference_table_alone_is_not_an_identity():
    # without the 2 alpha + 3 beta factor the identity fails, with residual of degree (2, 3)
    sp = spec("gamma+i", "delta+k")
    ref = load_reference()[("gamma+i", "delta+k")]
    full = [e["N"] for e in load_expected()[("gamma+i", "delta+k")]]
    assert holds_symbolically(sp, full)
    # drop the (2,3) factor by giving the product only the printed entries
    string = root_string(sp.alpha, sp.beta)
    printed = {(c["i"], c["j"]) for c in ref}
    assert set(string) - printed == {(2, 3)}
    residual = identity_residual(sp, [0 if ij == (2, 3) else n for ij, n in zip(string, full)])
    assert not residual.is_zero()
    assert all(c.degree_in("s") == 2 and c.degree_in("t") == 3 for c in residual.coords if not c.is_zero())


def test_product_word_uses_root_arithmetic():
    sp = spec("delta+i", "delta+j")
    w = product_word(sp, [2, 3], 1, 1)
    assert [str(g.label) for g in w.gens] == ["delta-k", "gamma-j"]
