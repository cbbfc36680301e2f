"""Diagonal lattices in the split octonions and the valuations they come from.

An ``ExponentLattice`` holds eight integers, one per coordinate in the order
(a, v1, v2, v3, w1, w2, w3, d): the lattice is every octonion whose i-th
coordinate has p-adic valuation at least a_i.  The text form follows the
array layout L[a2 a3 a4 | a1 ; a5 a6 a7 | a8], diagonals optional.

An ``IntermediateFn`` assigns a rational shift to each standard basis vector
and induces val(x) = min_i val_p(x_i) + v(b_i).  Its lattice sequence is
r -> {x : val(x) >= r}.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .apartment import ApartmentPoint, cocharacter
from .core_arith import INF, ext_min, val_p
from .octonion import BASIS_INDICES, Octonion, basis_by_position, bilin, coord_position, mult


@dataclass(frozen=True, order=True)
class ExponentLattice:
    exps: tuple

    def __post_init__(self):
        e = tuple(int(x) for x in self.exps)
        if len(e) != 8:
            raise ValueError("an exponent lattice has 8 entries")
        object.__setattr__(self, "exps", e)

    @classmethod
    def from_rows(cls, top: Sequence[int], bottom: Sequence[int], a1: int = 0, a8: int = 0) -> "ExponentLattice":
        """Build from the displayed rows (a2 a3 a4) and (a5 a6 a7)."""
        return cls((a1, *top, *bottom, a8))

    @property
    def top(self):
        return self.exps[1:4]

    @property
    def bottom(self):
        return self.exps[4:7]

    def a(self, i: int) -> int:
        """1-based access matching a1..a8."""
        return self.exps[i - 1]

    def __str__(self):
        return format_lattice(self)


STANDARD = ExponentLattice((0,) * 8)

_LAT_RE = re.compile(
    r"^\s*L\[\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)\s*(?:\|\s*(-?\d+)\s*)?;"
    r"\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)\s*(?:\|\s*(-?\d+)\s*)?\]\s*$"
)


def parse_lattice(text: str) -> ExponentLattice:
    m = _LAT_RE.match(text)
    if not m:
        raise ValueError(f"not a lattice: {text!r}")
    g = [None if x is None else int(x) for x in m.groups()]
    return ExponentLattice.from_rows(g[0:3], g[4:7], g[3] or 0, g[7] or 0)


def format_lattice(lat: ExponentLattice) -> str:
    e = lat.exps
    top = " ".join(str(x) for x in e[1:4])
    bot = " ".join(str(x) for x in e[4:7])
    if e[0] == 0 and e[7] == 0:
        return f"L[{top}; {bot}]"
    return f"L[{top} | {e[0]}; {bot} | {e[7]}]"


def contains(big: ExponentLattice, small: ExponentLattice) -> bool:
    """small is a subset of big."""
    return all(s >= b for s, b in zip(small.exps, big.exps))


def strictly_contains(big: ExponentLattice, small: ExponentLattice) -> bool:
    return contains(big, small) and big != small


def is_order(lat: ExponentLattice) -> bool:
    a = (None,) + lat.exps
    return (
        a[1] == 0 and a[8] == 0
        and a[2] + a[5] >= 0 and a[3] + a[6] >= 0 and a[4] + a[7] >= 0
        and a[2] + a[3] >= a[7] and a[2] + a[4] >= a[6] and a[3] + a[4] >= a[5]
        and a[5] + a[6] >= a[4] and a[5] + a[7] >= a[3] and a[6] + a[7] >= a[2]
    )


def dual(lat: ExponentLattice) -> ExponentLattice:
    """Lattice of x with T(xy) integral for all y in lat.

    The trace form pairs a with a, d with d and v_j with w_j, so the dual
    negates every exponent and swaps the two vector rows.
    """
    e = lat.exps
    return ExponentLattice((-e[0], -e[4], -e[5], -e[6], -e[1], -e[2], -e[3], -e[7]))


def lattice_product(l1: ExponentLattice, l2: ExponentLattice) -> ExponentLattice:
    """Exponents of the span of all products xy, x in l1, y in l2.

    Each output exponent is the minimum, over the terms of the Zorn formula
    contributing to that coordinate, of the summed input exponents.
    """
    A = (None,) + l1.exps
    B = (None,) + l2.exps
    nxt = {0: 1, 1: 2, 2: 0}
    top = min(A[1] + B[1], A[2] + B[5], A[3] + B[6], A[4] + B[7])
    bottom = min(A[8] + B[8], A[5] + B[2], A[6] + B[3], A[7] + B[4])
    right, left = [], []
    for n in range(3):
        p, q = nxt[n], nxt[nxt[n]]
        # v part: a phi + delta v - w x psi
        right.append(min(A[1] + B[2 + n], B[8] + A[2 + n], A[5 + p] + B[5 + q], A[5 + q] + B[5 + p]))
        # w part: alpha w + d psi + v x phi
        left.append(min(B[1] + A[5 + n], A[8] + B[5 + n], A[2 + p] + B[2 + q], A[2 + q] + B[2 + p]))
    return ExponentLattice((top, *right, *left, bottom))


def lattice_sum(l1: ExponentLattice, l2: ExponentLattice) -> ExponentLattice:
    return ExponentLattice(tuple(min(x, y) for x, y in zip(l1.exps, l2.exps)))


def scale(lat: ExponentLattice, k: int) -> ExponentLattice:
    """p^k times the lattice."""
    return ExponentLattice(tuple(x + k for x in lat.exps))


def is_self_dual(lat: ExponentLattice) -> bool:
    return dual(lat) == lat


def is_maximal_diagonal(lat: ExponentLattice) -> bool:
    a = lat.exps
    return a[0] == 0 and a[7] == 0 and all(a[1 + n] + a[4 + n] == 0 for n in range(3))


@dataclass(frozen=True)
class Classification:
    kind: str  # type1_maximal, type2, type3 or none
    M: ExponentLattice | None = None

    def __str__(self):
        return f"{self.kind}, M = {self.M}" if self.M is not None else self.kind


def _chain_condition(lat: ExponentLattice) -> bool:
    d = dual(lat)
    return strictly_contains(d, lat) and strictly_contains(scale(lat, -1), d)


def classify_vertex_order(lat: ExponentLattice) -> Classification:
    if not is_order(lat):
        return Classification("none")
    if is_maximal_diagonal(lat):
        return Classification("type1_maximal")
    if not _chain_condition(lat):
        return Classification("none")
    d2 = lattice_product(dual(lat), dual(lat))
    if contains(scale(lat, -1), d2):
        return Classification("type2")
    m = lattice_sum(scale(d2, 1), lat)
    if is_self_dual(m):
        return Classification("type3", m)
    return Classification("none")


def transport(lat: ExponentLattice, e: Sequence[int]) -> ExponentLattice:
    """Image of the lattice under theta(diag(p^e1, p^e2, p^e3))."""
    e = tuple(int(x) for x in e)
    if sum(e) != 0:
        raise ValueError("torus exponents must sum to zero")
    x = lat.exps
    return ExponentLattice((x[0], *(x[1 + n] + e[n] for n in range(3)), *(x[4 + n] - e[n] for n in range(3)), x[7]))


# valuations from intermediate functions

@dataclass(frozen=True)
class IntermediateFn:
    """Rational shifts v(b_i), stored in coordinate order."""

    values: tuple

    def __post_init__(self):
        v = tuple(Fraction(x) for x in self.values)
        if len(v) != 8:
            raise ValueError("an intermediate function has 8 values")
        object.__setattr__(self, "values", v)

    @classmethod
    def from_basis(cls, table: dict[int, object]) -> "IntermediateFn":
        vals = [Fraction(0)] * 8
        for idx, x in table.items():
            vals[coord_position(idx)] = Fraction(x)
        return cls(tuple(vals))

    def __call__(self, index: int) -> Fraction:
        return self.values[coord_position(index)]

    def scaled(self, c) -> "IntermediateFn":
        return IntermediateFn(tuple(Fraction(c) * x for x in self.values))

    def as_basis_table(self) -> dict[int, Fraction]:
        return {i: self(i) for i in BASIS_INDICES}


def fn_from_point(x: ApartmentPoint) -> IntermediateFn:
    """v(b_j) = -e_j, v(b_-j) = e_j, v(b_4) = v(b_-4) = 0 for the point's torus exponents e."""
    e = cocharacter(x)
    return IntermediateFn((0, *(-c for c in e), *e, 0))


def order_at_point(x: ApartmentPoint) -> ExponentLattice:
    return lattice_at(fn_from_point(x), 0)


def standard_intermediate_fns() -> dict[str, IntermediateFn]:
    v1 = IntermediateFn.from_basis({2: 1, -1: 1, 1: -1, -2: -1})
    v1b = IntermediateFn.from_basis({2: 1, -3: 1, 3: -1, -2: -1})
    v2 = v1.scaled(Fraction(1, 2))
    v3 = IntermediateFn.from_basis({
        1: Fraction(-1, 3), 2: Fraction(2, 3), 3: Fraction(-1, 3),
        -1: Fraction(1, 3), -2: Fraction(-2, 3), -3: Fraction(1, 3),
    })
    return {
        "standard": IntermediateFn((0,) * 8),
        "v1": v1,
        "v1b": v1b,
        "v2": v2,
        "v3": v3,
        "v4": v2.scaled(Fraction(2, 3)),
        "v5": v3.scaled(Fraction(1, 2)),
    }


def valuation_of(x: Octonion, v: IntermediateFn, p: int):
    return ext_min(val_p(c, p) + s for c, s in zip(x.coords, v.values) if c != 0)


def lattice_at(v: IntermediateFn, r) -> ExponentLattice:
    """Exponents of {x : val(x) >= r}: ceil(r - v(b_i)) per coordinate."""
    r = Fraction(r)
    return ExponentLattice(tuple(math.ceil(r - s) for s in v.values))


def jumps(v: IntermediateFn) -> list[Fraction]:
    """The r in [0, 1) where the sequence drops just after r.

    ceil(r - v_i) increases right after r - v_i becomes an integer, so the
    jumps are the fractional parts of the v_i.
    """
    return sorted({s - math.floor(s) for s in v.values})


@dataclass(frozen=True)
class LatticeSequence:
    """A periodic lattice sequence, described by its lattices at the jumps in [0, 1)."""

    points: tuple  # ((r, ExponentLattice), ...) sorted by r

    def at(self, r) -> ExponentLattice:
        r = Fraction(r)
        n = math.floor(r)
        f = r - n
        for jr, lat in self.points:
            if jr >= f:
                return scale(lat, n)
        return scale(self.points[0][1], n + 1)

    def jumps(self) -> list[Fraction]:
        return [r for r, _ in self.points]


def sequence_of(v: IntermediateFn) -> LatticeSequence:
    return LatticeSequence(tuple((r, lattice_at(v, r)) for r in jumps(v)))


def fn_from_sequence(seq: LatticeSequence) -> IntermediateFn:
    """Recover v(b_i) = max{r : b_i in Lambda_r} from the sequence."""
    vals = []
    for i in range(8):
        vals.append(max(r - lat.exps[i] for r, lat in seq.points))
    return IntermediateFn(tuple(vals))


def basis_valuation(v: IntermediateFn, pos: int) -> Fraction:
    return v.values[pos]


def _random_padic(rng: random.Random, p: int) -> Fraction:
    if rng.random() < 0.1:
        return Fraction(0)
    k = rng.randint(-3, 3)
    num = rng.choice([-1, 1]) * rng.randint(1, 40)
    den = rng.randint(1, 40)
    return Fraction(num, den) * Fraction(p) ** k


def random_octonion(rng: random.Random, p: int) -> Octonion:
    return Octonion(tuple(_random_padic(rng, p) for _ in range(8)))


def check_algebra_valuation(v: IntermediateFn, p: int = 5, samples: int = 200, seed: int = 0) -> dict:
    """Check the algebra-valuation axioms and minorization of the polar form.

    (a) val(x) = inf iff x = 0; (b) val(cx) = val_p(c) + val(x);
    (c) val(x + y) >= min(val(x), val(y)); (d) val(xy) >= val(x) + val(y);
    minorization: val_p(B(x, y)) >= val(x) + val(y).
    (d) and minorization are checked on all 64 basis pairs, everything on random pairs.
    """
    rng = random.Random(seed)
    failures = []

    def val(x):
        return valuation_of(x, v, p)

    if val(Octonion((Fraction(0),) * 8)) is not INF:
        failures.append("(a) val(0) is not inf")
    basis = [basis_by_position(i) for i in range(8)]
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if val(mult(x, y)) < val(x) + val(y):
                failures.append(f"(d) basis pair ({BASIS_INDICES[i]}, {BASIS_INDICES[j]})")
            if val_p(bilin(x, y), p) < val(x) + val(y):
                failures.append(f"minorization on basis pair ({BASIS_INDICES[i]}, {BASIS_INDICES[j]})")
    for _ in range(samples):
        x, y = random_octonion(rng, p), random_octonion(rng, p)
        c = _random_padic(rng, p)
        vx, vy = val(x), val(y)
        if (vx is INF) != x.is_zero():
            failures.append("(a) infinite valuation exactly on zero")
        if c != 0 and val(x.scale(c)) != val_p(c, p) + vx:
            failures.append(f"(b) scaling by {c}")
        if val(x + y) < min(vx, vy):
            failures.append("(c) sum")
        if val(mult(x, y)) < vx + vy:
            failures.append("(d) product")
        if val_p(bilin(x, y), p) < vx + vy:
            failures.append("minorization")
    return {"passed": not failures, "failures": failures}


# the vertex orders of each type nearest the origin

def _L(top, bottom) -> ExponentLattice:
    return ExponentLattice.from_rows(top, bottom)


NEAREST_TYPE1 = (
    STANDARD,
    _L((0, -1, 1), (0, 1, -1)),
    _L((1, -1, 0), (-1, 1, 0)),
    _L((1, 0, -1), (-1, 0, 1)),
    _L((0, 1, -1), (0, -1, 1)),
    _L((-1, 1, 0), (1, -1, 0)),
    _L((-1, 0, 1), (1, 0, -1)),
)
NEAREST_TYPE2 = (
    _L((0, 0, 1), (0, 1, 0)),
    _L((1, 0, 0), (0, 1, 0)),
    _L((1, 0, 0), (0, 0, 1)),
    _L((0, 1, 0), (0, 0, 1)),
    _L((0, 1, 0), (1, 0, 0)),
    _L((0, 0, 1), (1, 0, 0)),
)
NEAREST_TYPE3 = (
    _L((0, 0, 1), (1, 1, 0)),
    _L((1, 0, 1), (0, 1, 0)),
    _L((1, 0, 0), (0, 1, 1)),
    _L((1, 1, 0), (0, 0, 1)),
    _L((0, 1, 0), (1, 0, 1)),
    _L((0, 1, 1), (1, 0, 0)),
)


def label_name(lat: ExponentLattice) -> str:
    return "standard" if lat == STANDARD else format_lattice(lat)


def sorted_lattices(lats: Iterable[ExponentLattice]) -> list[ExponentLattice]:
    return sorted(lats, key=lambda l: l.exps)
