"""Split octonions as Zorn vector matrices over an exact coefficient ring.

An element is stored as eight coordinates in the order
(a, v1, v2, v3, w1, w2, w3, d) and read as the array [[a, v], [w, d]].
Coefficients may be ``Fraction`` or ``MultiPoly``; only ring operations are
used, so the same code serves numeric and symbolic work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .core_arith import parse_rational, format_rational

AXES = ("i", "j", "k")
BASIS_INDICES = (4, 1, 2, 3, -1, -2, -3, -4)


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _zero_like(c):
    return c - c


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix [[p, q], [r, s]] over the coefficient ring."""

    p: Any
    q: Any
    r: Any
    s: Any

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "Mat2":
        (p, q), (r, s) = rows
        return cls(p, q, r, s)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def rows(self):
        return ((self.p, self.q), (self.r, self.s))

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.p * o.p + self.q * o.r,
            self.p * o.q + self.q * o.s,
            self.r * o.p + self.s * o.r,
            self.r * o.q + self.s * o.s,
        )

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.p + o.p, self.q + o.q, self.r + o.r, self.s + o.s)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.p - o.p, self.q - o.q, self.r - o.r, self.s - o.s)

    def scale(self, c) -> "Mat2":
        return Mat2(c * self.p, c * self.q, c * self.r, c * self.s)

    def det(self):
        return self.p * self.s - self.q * self.r

    def trace(self):
        return self.p + self.s

    def adjugate(self) -> "Mat2":
        """Adjugate; equals the inverse when det = 1."""
        return Mat2(self.s, -self.q, -self.r, self.p)


@dataclass(frozen=True)
class Octonion:
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("an octonion has exactly 8 coordinates")

    @classmethod
    def of(cls, a, v, w, d) -> "Octonion":
        return cls((a, *v, *w, d))

    @classmethod
    def from_rationals(cls, values: Sequence) -> "Octonion":
        return cls(tuple(Fraction(x) for x in values))

    @property
    def a(self):
        return self.coords[0]

    @property
    def v(self):
        return self.coords[1:4]

    @property
    def w(self):
        return self.coords[4:7]

    @property
    def d(self):
        return self.coords[7]

    def __add__(self, o: "Octonion") -> "Octonion":
        return Octonion(tuple(x + y for x, y in zip(self.coords, o.coords)))

    def __sub__(self, o: "Octonion") -> "Octonion":
        return Octonion(tuple(x - y for x, y in zip(self.coords, o.coords)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-x for x in self.coords))

    def scale(self, c) -> "Octonion":
        return Octonion(tuple(c * x for x in self.coords))

    def __mul__(self, o: "Octonion") -> "Octonion":
        return mult(self, o)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def __str__(self):
        return format_octonion(self)


def mult(x: Octonion, y: Octonion) -> Octonion:
    """Zorn product of [[a, v], [w, d]] and [[al, ph], [ps, de]]."""
    a, v, w, d = x.a, x.v, x.w, x.d
    al, ph, ps, de = y.a, y.v, y.w, y.d
    vxp = _cross(w, ps)
    wxp = _cross(v, ph)
    top = a * al + _dot(v, ps)
    right = tuple(a * ph[n] + de * v[n] - vxp[n] for n in range(3))
    left = tuple(al * w[n] + d * ps[n] + wxp[n] for n in range(3))
    bottom = d * de + _dot(w, ph)
    return Octonion.of(top, right, left, bottom)


def one(like=None) -> Octonion:
    z = Fraction(0) if like is None else _zero_like(like)
    return Octonion((z + 1, z, z, z, z, z, z, z + 1))


def zero(like=None) -> Octonion:
    z = Fraction(0) if like is None else _zero_like(like)
    return Octonion((z,) * 8)


def coord_position(index: int) -> int:
    """Position in the coordinate tuple of the standard basis vector b_index."""
    if index == 4:
        return 0
    if index == -4:
        return 7
    if 1 <= index <= 3:
        return index
    if -3 <= index <= -1:
        return 3 - index
    raise ValueError(f"basis index must be one of +-1..+-4, got {index}")


def basis(index: int) -> Octonion:
    c = [Fraction(0)] * 8
    c[coord_position(index)] = Fraction(1)
    return Octonion(tuple(c))


def basis_by_position(pos: int) -> Octonion:
    c = [Fraction(0)] * 8
    c[pos] = Fraction(1)
    return Octonion(tuple(c))


def norm(x: Octonion):
    return x.a * x.d - _dot(x.v, x.w)


def trace(x: Octonion):
    return x.a + x.d


def conj(x: Octonion) -> Octonion:
    return Octonion.of(x.d, tuple(-c for c in x.v), tuple(-c for c in x.w), x.a)


def bilin(x: Octonion, y: Octonion):
    """Polar form B(x, y) = (N(x+y) - N(x) - N(y)) / 2."""
    return (norm(x + y) - norm(x) - norm(y)) * Fraction(1, 2)


def gram_matrix() -> list[list[Fraction]]:
    return [[bilin(basis_by_position(i), basis_by_position(j)) for j in range(8)] for i in range(8)]


def _unit(u: str, c, z):
    k = AXES.index(u)
    return tuple(c if n == k else z for n in range(3))


def embed_eta(u: str, m: Mat2) -> Octonion:
    """Embed Mat2 along axis u: [[p, q], [r, s]] -> (p, q e_u, r e_u, s)."""
    z = _zero_like(m.p)
    return Octonion.of(m.p, _unit(u, m.q, z), _unit(u, m.r, z), m.s)


def splitting_element(u: str) -> Octonion:
    """l_i = J, l_j = K, l_k = I."""
    partner = {"i": "j", "j": "k", "k": "i"}[u]
    z = Fraction(0)
    e = _unit(partner, Fraction(1), z)
    return Octonion.of(z, e, e, z)


# (A, B) placements per axis, as coordinate positions with a sign for B's lower-left.
# Axis i: A = [[a, v1], [w1, d]], B = [[v2, w3], [-v3, w2]]; j and k cycle the indices.
_CYCLE = {"i": (1, 2, 3), "j": (2, 3, 1), "k": (3, 1, 2)}


def decompose(x: Octonion, u: str) -> tuple[Mat2, Mat2]:
    """Split x as eta_u(A) + eta_u(B) * l_u."""
    p, q, r = _CYCLE[u]
    v, w = x.v, x.w
    a_mat = Mat2(x.a, v[p - 1], w[p - 1], x.d)
    b_mat = Mat2(v[q - 1], w[r - 1], -v[r - 1], w[q - 1])
    return a_mat, b_mat


def recompose(a_mat: Mat2, b_mat: Mat2, u: str) -> Octonion:
    """Inverse of decompose."""
    p, q, r = _CYCLE[u]
    v = [None] * 3
    w = [None] * 3
    v[p - 1], w[p - 1] = a_mat.q, a_mat.r
    v[q - 1], w[r - 1] = b_mat.p, b_mat.q
    v[r - 1], w[q - 1] = -b_mat.r, b_mat.s
    return Octonion.of(a_mat.p, tuple(v), tuple(w), a_mat.s)


def parse_octonion(text: str) -> Octonion:
    parts = [s for s in text.replace(" ", "").split(",")]
    if len(parts) != 8:
        raise ValueError(f"expected 8 comma-separated rationals, got {len(parts)}")
    return Octonion(tuple(parse_rational(s) for s in parts))


def format_octonion(x: Octonion) -> str:
    return ",".join(format_rational(c) if isinstance(c, (int, Fraction)) else str(c) for c in x.coords)
