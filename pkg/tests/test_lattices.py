import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from splitoct.apartment import ApartmentPoint, incident, special_points
from splitoct.core_arith import val_p
from splitoct.lattices import (
    NEAREST_TYPE1,
    NEAREST_TYPE2,
    NEAREST_TYPE3,
    STANDARD,
    ExponentLattice,
    IntermediateFn,
    check_algebra_valuation,
    classify_vertex_order,
    contains,
    dual,
    fn_from_sequence,
    format_lattice,
    is_order,
    is_self_dual,
    jumps,
    lattice_at,
    lattice_product,
    order_at_point,
    parse_lattice,
    sequence_of,
    standard_intermediate_fns,
    strictly_contains,
    transport,
)
from splitoct.octonion import basis_by_position, mult, trace

P = 5
L = parse_lattice
lattices = st.lists(st.integers(-3, 3), min_size=8, max_size=8).map(lambda xs: ExponentLattice(tuple(xs)))
many = settings(max_examples=1000, derandomize=True)


def product_oracle(l1, l2):
    """Span of all products of basis generators, computed with the octonion product."""
    best = [None] * 8
    for i in range(8):
        for j in range(8):
            z = mult(basis_by_position(i), basis_by_position(j))
            for k, c in enumerate(z.coords):
                if c:
                    e = l1.exps[i] + l2.exps[j] + val_p(c, P)
                    best[k] = e if best[k] is None else min(best[k], e)
    return ExponentLattice(tuple(best))


def dual_oracle(lat):
    """{x : T(x y) integral for every y in the lattice}, computed with the trace form."""
    out = []
    for k in range(8):
        need = []
        for j in range(8):
            c = trace(mult(basis_by_position(k), basis_by_position(j)))
            if c:
                need.append(-lat.exps[j] - val_p(c, P))
        out.append(max(need))
    return ExponentLattice(tuple(out))


@many
@given(lattices, lattices)
def test_product_matches_oracle(l1, l2):
    assert lattice_product(l1, l2) == product_oracle(l1, l2)


@many
@given(lattices)
def test_dual_matches_oracle_and_is_involution(lat):
    assert dual(lat) == dual_oracle(lat)
    assert dual(dual(lat)) == lat


@many
@given(lattices, lattices)
def test_dual_reverses_containment(l1, l2):
    if contains(l1, l2):
        assert contains(dual(l2), dual(l1))


@given(lattices)
def test_is_order_characterisation(lat):
    has_one = lat.exps[0] <= 0 and lat.exps[7] <= 0
    assert is_order(lat) == (has_one and contains(lat, lattice_product(lat, lat)))


def test_worked_duals_and_products():
    assert dual(L("L[1 0 0; 0 1 0]")) == L("L[0 -1 0; -1 0 0]")
    assert dual(L("L[1 0 1; 0 1 0]")) == L("L[0 -1 0; -1 0 -1]")
    d = dual(L("L[1 0 0; 0 1 0]"))
    assert lattice_product(d, d) == L("L[0 -1 -1 | -1; -1 0 -1 | -1]")
    d = dual(L("L[1 0 1; 0 1 0]"))
    assert lattice_product(d, d) == L("L[-1 -2 -1 | -1; -1 0 -1 | -1]")
    assert is_self_dual(L("L[0 -1 0; 0 1 0]"))


def test_featured_classifications():
    assert classify_vertex_order(STANDARD).kind == "type1_maximal"
    assert classify_vertex_order(L("L[1 0 0; 0 1 0]")).kind == "type2"
    c = classify_vertex_order(L("L[1 0 1; 0 1 0]"))
    assert c.kind == "type3"
    assert c.M == L("L[0 -1 0; 0 1 0]")
    assert str(c) == "type3, M = L[0 -1 0; 0 1 0]"


@pytest.mark.parametrize(
    "group,kind", [(NEAREST_TYPE1, "type1_maximal"), (NEAREST_TYPE2, "type2"), (NEAREST_TYPE3, "type3")]
)
def test_nearest_lattices_classify(group, kind):
    for lat in group:
        assert classify_vertex_order(lat).kind == kind


def test_non_orders_classify_as_none():
    assert classify_vertex_order(L("L[1 1 1; 1 1 1]")).kind == "none"
    assert classify_vertex_order(L("L[-1 0 0; 0 0 0]")).kind == "none"


def test_chamber_chain():
    l3, l2, l1 = L("L[1 0 1; 0 1 0]"), L("L[1 0 0; 0 1 0]"), STANDARD
    assert strictly_contains(l2, l3) and strictly_contains(l1, l2)


def test_transport_generates_type1_labels():
    moves = [(1, -1, 0), (0, 1, -1), (-1, 0, 1)]
    moves += [tuple(-c for c in m) for m in moves]
    got = {transport(STANDARD, m) for m in moves}
    assert got == set(NEAREST_TYPE1) - {STANDARD}
    assert len(got) == 6


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2), lattices)
def test_transport_preserves_classification(e, lat):
    move = (e[0], e[1], -e[0] - e[1])
    moved = transport(lat, move)
    assert classify_vertex_order(moved).kind == classify_vertex_order(lat).kind
    assert transport(moved, tuple(-c for c in move)) == lat


def box_vertices():
    return [(p, k) for p, k in special_points(-2, -2, 2, 2) if k in ("type1", "type2", "type3")]


def test_vertex_orders_have_matching_type():
    want = {"type1": "type1_maximal", "type2": "type2", "type3": "type3"}
    for p, k in box_vertices():
        assert classify_vertex_order(order_at_point(p)).kind == want[k]


def test_incidence_iff_containment():
    verts = [(p, k, order_at_point(p)) for p, k in box_vertices()]
    checked = 0
    for (p1, k1, o1), (p2, k2, o2) in combinations(verts, 2):
        if k1 == k2:
            continue
        (pa, ka, oa), (pb, kb, ob) = sorted([(p1, k1, o1), (p2, k2, o2)], key=lambda t: t[1])
        # the higher-type order sits inside the lower-type one exactly when the vertices are incident
        assert incident(pa, pb) == contains(oa, ob)
        checked += 1
    assert checked > 4000


def test_sixth_type2_order_of_featured_type3_vertex():
    verts = [(p, k) for p, k in special_points(-2, -2, 2, 2)]
    (p3,) = [p for p, k in verts if k == "type3" and order_at_point(p) == L("L[1 0 1; 0 1 0]")]
    assert p3 == ApartmentPoint(Fraction(-1, 3), -1)
    around = {format_lattice(order_at_point(p)) for p, k in verts if k == "type2" and incident(p, p3)}
    assert around == {"L[1 0 0; 0 1 0]", "L[0 0 1; 0 1 0]", "L[1 -1 1; 0 1 0]"}
    assert classify_vertex_order(L("L[1 -1 1; 0 1 0]")).kind == "type2"
    maximal = {order_at_point(p) for p, k in verts if k == "type1" and incident(p, p3)}
    assert maximal == {STANDARD, L("L[1 -1 0; -1 1 0]"), L("L[0 -1 1; 0 1 -1]")}


# valuations and lattice sequences

def test_v4_sequence():
    v4 = standard_intermediate_fns()["v4"]
    assert lattice_at(v4, 0) == L("L[1 0 0; 0 1 0]")
    assert lattice_at(v4, Fraction(1, 3)) == L("L[1 0 1 | 1; 0 1 1 | 1]")
    assert lattice_at(v4, Fraction(2, 3)) == L("L[1 1 1 | 1; 1 1 1 | 1]")
    assert lattice_at(v4, 1) == L("L[2 1 1 | 1; 1 2 1 | 1]")
    assert jumps(v4) == [0, Fraction(1, 3), Fraction(2, 3)]


def test_v5_sequence():
    v5 = standard_intermediate_fns()["v5"]
    want = {
        Fraction(0): "L[1 0 1; 0 1 0]",
        Fraction(1, 6): "L[1 0 1 | 1; 0 1 0 | 1]",
        Fraction(1, 3): "L[1 0 1 | 1; 1 1 1 | 1]",
        Fraction(1, 2): "L[1 1 1 | 1; 1 1 1 | 1]",
        Fraction(2, 3): "L[1 1 1 | 1; 1 1 1 | 1]",
        Fraction(5, 6): "L[1 1 1 | 1; 1 2 1 | 1]",
        Fraction(1): "L[2 1 2 | 1; 1 2 1 | 1]",
    }
    for r, lat in want.items():
        assert lattice_at(v5, r) == L(lat)
    assert jumps(v5) == [0, Fraction(1, 6), Fraction(1, 3), Fraction(2, 3), Fraction(5, 6)]


def random_fn(rng):
    return IntermediateFn(tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(8)))


def jumps_oracle(v):
    grid = [Fraction(k, 60) for k in range(60)]
    eps = Fraction(1, 120)
    return [r for r in grid if lattice_at(v, r) != lattice_at(v, r + eps)]


def test_jumps_match_brute_force():
    rng = random.Random(1)
    fns = list(standard_intermediate_fns().values()) + [random_fn(rng) for _ in range(100)]
    for v in fns:
        assert jumps(v) == jumps_oracle(v)


def test_sequence_round_trip():
    rng = random.Random(2)
    fns = list(standard_intermediate_fns().values()) + [random_fn(rng) for _ in range(100)]
    for v in fns:
        seq = sequence_of(v)
        assert fn_from_sequence(seq) == v
        assert seq.at(1) == ExponentLattice(tuple(e + 1 for e in seq.at(0).exps))


@pytest.mark.parametrize("name", ["standard", "v1", "v2", "v3", "v4", "v5"])
def test_intermediate_fns_give_algebra_valuations(name):
    rep = check_algebra_valuation(standard_intermediate_fns()[name], p=P, samples=150, seed=3)
    assert rep["passed"], rep["failures"]


def test_lattice_text_round_trip():
    for text in ("L[1 0 1; 0 1 0]", "L[1 0 1 | 1; 0 1 0 | -2]"):
        assert format_lattice(L(text)) == text
    with pytest.raises(ValueError):
        L("L[1 0; 0 1 0]")


@given(lattices, st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_transport_commutes_with_dual(lat, e):
    move = (e[0], e[1], -e[0] - e[1])
    assert dual(transport(lat, move)) == transport(dual(lat), move)


def test_v2_jumps():
    assert jumps(standard_intermediate_fns()["v2"]) == [0, Fraction(1, 2)]
    assert jumps(standard_intermediate_fns()["standard"]) == [0]


@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8), st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_dual_pairs_integrally(exps, coeffs):
    lat = ExponentLattice(tuple(exps))
    d = dual(lat)
    # elements at the exponent corners of the dual and the lattice
    x = type(basis_by_position(0))(tuple(Fraction(P) ** e * c for e, c in zip(d.exps, coeffs)))
    y = type(basis_by_position(0))(tuple(Fraction(P) ** e for e in lat.exps))
    assert val_p(trace(mult(x, y)), P) >= 0
