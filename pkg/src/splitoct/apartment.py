"""G2 roots, coroots, pairing, Weyl group and the standard apartment.

Roots are written m*delta + n*gamma with delta short and gamma long; coroots
as x*delta_v + y*gamma_v.  Apartment points are rational pairs in the coroot
basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable


@dataclass(frozen=True, order=True)
class Root:
    m: int
    n: int

    def __neg__(self) -> "Root":
        return Root(-self.m, -self.n)

    def __add__(self, o: "Root") -> "Root":
        return Root(self.m + o.m, self.n + o.n)

    def scaled(self, k: int) -> "Root":
        return Root(k * self.m, k * self.n)

    def __str__(self):
        return _lincomb(self.m, self.n, "d", "g")


@dataclass(frozen=True, order=True)
class Coroot:
    c_delta: int
    c_gamma: int

    def __neg__(self) -> "Coroot":
        return Coroot(-self.c_delta, -self.c_gamma)

    def __add__(self, o: "Coroot") -> "Coroot":
        return Coroot(self.c_delta + o.c_delta, self.c_gamma + o.c_gamma)

    def scaled(self, k: int) -> "Coroot":
        return Coroot(k * self.c_delta, k * self.c_gamma)


@dataclass(frozen=True, order=True)
class ApartmentPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, o: "ApartmentPoint") -> "ApartmentPoint":
        return ApartmentPoint(self.x + o.x, self.y + o.y)


@dataclass(frozen=True)
class AffineRoot:
    root: Root
    n: int


def _lincomb(a, b, sa, sb):
    parts = []
    for c, s in ((a, sa), (b, sb)):
        if c:
            parts.append(f"{'' if c == 1 else '-' if c == -1 else c}{s}")
    return "+".join(parts).replace("+-", "-") or "0"


DELTA = Root(1, 0)
GAMMA = Root(0, 1)
SIMPLE_ROOTS = (DELTA, GAMMA)
POSITIVE_ROOTS = (Root(1, 0), Root(0, 1), Root(1, 1), Root(2, 1), Root(3, 1), Root(3, 2))
ROOTS = POSITIVE_ROOTS + tuple(-r for r in POSITIVE_ROOTS)
LONG_ROOTS = (Root(0, 1), Root(3, 1), Root(3, 2))

_POSITIVE_COROOTS = {
    Root(1, 0): Coroot(1, 0),
    Root(0, 1): Coroot(0, 1),
    Root(1, 1): Coroot(1, 3),
    Root(2, 1): Coroot(2, 3),
    Root(3, 1): Coroot(1, 1),
    Root(3, 2): Coroot(1, 2),
}

# Values on the simple pairs: <d, d_v> = 2, <d, g_v> = -1, <g, d_v> = -3, <g, g_v> = 2.
_PAIR = ((2, -1), (-3, 2))


def is_root(r: Root) -> bool:
    return r in ROOTS


def is_long(r: Root) -> bool:
    return r in LONG_ROOTS or -r in LONG_ROOTS


def pairing(alpha: Root, c: Coroot):
    """The bilinear pairing between the root and coroot lattices."""
    return (
        alpha.m * (c.c_delta * _PAIR[0][0] + c.c_gamma * _PAIR[0][1])
        + alpha.n * (c.c_delta * _PAIR[1][0] + c.c_gamma * _PAIR[1][1])
    )


def coroot_of(alpha: Root) -> Coroot:
    if alpha in _POSITIVE_COROOTS:
        return _POSITIVE_COROOTS[alpha]
    if -alpha in _POSITIVE_COROOTS:
        return -_POSITIVE_COROOTS[-alpha]
    raise ValueError(f"{alpha} is not a root")


def reflect(alpha: Root, beta: Root) -> Root:
    """s_alpha(beta) = beta - <beta, alpha_v> alpha."""
    return beta + alpha.scaled(-pairing(beta, coroot_of(alpha)))


def cartan_matrix() -> list[list[int]]:
    return [[pairing(b, coroot_of(a)) for b in SIMPLE_ROOTS] for a in SIMPLE_ROOTS]


def _as_perm(alpha: Root) -> tuple[int, ...]:
    return tuple(ROOTS.index(reflect(alpha, b)) for b in ROOTS)


def weyl_group() -> set[tuple[int, ...]]:
    """All elements as permutations of ROOTS, by closure of the simple reflections."""
    gens = [_as_perm(a) for a in SIMPLE_ROOTS]
    ident = tuple(range(len(ROOTS)))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(g[s[i]] for i in range(len(ROOTS)))
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def weyl_group_order() -> int:
    return len(weyl_group())


def orbit(r: Root) -> set[Root]:
    return {ROOTS[g[ROOTS.index(r)]] for g in weyl_group()}


def pair_point(alpha: Root, x: ApartmentPoint) -> Fraction:
    """<alpha, x> extended bilinearly to rational points."""
    return (
        alpha.m * (x.x * _PAIR[0][0] + x.y * _PAIR[0][1])
        + alpha.n * (x.x * _PAIR[1][0] + x.y * _PAIR[1][1])
    )


def affine_eval(ar: AffineRoot, x: ApartmentPoint) -> Fraction:
    return pair_point(ar.root, x) + ar.n


def hyperplanes_through(x: ApartmentPoint) -> list[AffineRoot]:
    """Affine roots with positive root part vanishing at x."""
    out = []
    for alpha in POSITIVE_ROOTS:
        val = pair_point(alpha, x)
        bound = math.ceil(abs(val)) + 1
        for n in range(-bound, bound + 1):
            if val + n == 0:
                out.append(AffineRoot(alpha, n))
    return out


VERTEX_TYPES = {6: "type1", 3: "type3", 2: "type2", 1: "edge", 0: "interior"}


def vertex_type(x: ApartmentPoint) -> str:
    count = len({ar.root for ar in hyperplanes_through(x)})
    return VERTEX_TYPES[count]


def cocharacter(x: ApartmentPoint) -> tuple[Fraction, Fraction, Fraction]:
    """Diagonal torus exponents (e1, e2, e3) of the point, summing to zero.

    delta_v acts as diag(p^2, p^-1, p^-1) and gamma_v as diag(p^-1, p, 1).
    """
    return (2 * x.x - x.y, -x.x + x.y, -x.x)


def point_from_cocharacter(e: Iterable) -> ApartmentPoint:
    e1, e2, e3 = (Fraction(c) for c in e)
    if e1 + e2 + e3 != 0:
        raise ValueError("torus exponents must sum to zero")
    return ApartmentPoint(-e3, e2 - e3)


def separated(x1: ApartmentPoint, x2: ApartmentPoint) -> bool:
    """True if some affine hyperplane strictly separates the two points."""
    for alpha in POSITIVE_ROOTS:
        lo, hi = sorted((pair_point(alpha, x1), pair_point(alpha, x2)))
        # an integer strictly between lo and hi marks a separating hyperplane
        if math.floor(lo) + 1 < hi:
            return True
    return False


def incident(x1: ApartmentPoint, x2: ApartmentPoint) -> bool:
    """Distinct points lying in the closure of a common chamber."""
    return x1 != x2 and not separated(x1, x2)


def special_points(x0, y0, x1, y1, denominator: int = 6) -> list[tuple[ApartmentPoint, str]]:
    """Every vertex (type 1, 2 or 3) with coordinates in the closed box.

    Vertices of this arrangement have coordinates in (1/6)Z, so a grid search
    with denominator 6 is exhaustive.
    """
    x0, y0, x1, y1 = (Fraction(c) for c in (x0, y0, x1, y1))
    out = []
    xs = range(math.ceil(x0 * denominator), math.floor(x1 * denominator) + 1)
    ys = range(math.ceil(y0 * denominator), math.floor(y1 * denominator) + 1)
    for i, j in product(xs, ys):
        pt = ApartmentPoint(Fraction(i, denominator), Fraction(j, denominator))
        t = vertex_type(pt)
        if t.startswith("type"):
            out.append((pt, t))
    return out
