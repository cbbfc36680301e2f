"""Automorphisms of the split octonions: theta, gamma, delta and root generators.

Words apply left to right: the first generator in a word acts first.
Matrices lowered by ``to_matrix`` act on coordinate column vectors, so column
j of the matrix is the image of the j-th coordinate basis vector.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

from .apartment import Root
from .core_arith import MultiPoly, inv, val_p
from .octonion import (
    AXES,
    Mat2,
    Octonion,
    basis_by_position,
    decompose,
    recompose,
)

FAMILIES = ("gamma", "delta")
SIGNS = ("+", "-")


@dataclass(frozen=True, order=True)
class RootLabel:
    family: str
    axis: str
    sign: str

    def __post_init__(self):
        if self.family not in FAMILIES or self.axis not in AXES or self.sign not in SIGNS:
            raise ValueError(f"bad root label {self.family}{self.sign}{self.axis}")

    @property
    def root(self) -> Root:
        return ROOT_OF_LABEL[self]

    def mirror(self) -> "RootLabel":
        return RootLabel(self.family, self.axis, "-" if self.sign == "+" else "+")

    def __str__(self):
        return f"{self.family}{self.sign}{self.axis}"

    @classmethod
    def parse(cls, text: str) -> "RootLabel":
        m = re.fullmatch(r"\s*(gamma|delta)([+-])([ijk])\s*", text)
        if not m:
            raise ValueError(f"not a root label: {text!r}")
        return cls(m.group(1), m.group(3), m.group(2))


def _label(text: str) -> RootLabel:
    return RootLabel.parse(text)


# Root association: delta+i <-> delta, gamma-k <-> gamma; mirrors carry the negatives.
_POSITIVE_SIDE = {
    "delta+i": Root(1, 0),
    "delta+j": Root(1, 1),
    "delta-k": Root(2, 1),
    "gamma-j": Root(3, 1),
    "gamma+i": Root(3, 2),
    "gamma-k": Root(0, 1),
}
ROOT_OF_LABEL: dict[RootLabel, Root] = {}
for _text, _root in _POSITIVE_SIDE.items():
    ROOT_OF_LABEL[_label(_text)] = _root
    ROOT_OF_LABEL[_label(_text).mirror()] = -_root
LABEL_OF_ROOT: dict[Root, RootLabel] = {r: lab for lab, r in ROOT_OF_LABEL.items()}
ALL_LABELS: tuple[RootLabel, ...] = tuple(
    RootLabel(f, u, s) for f in FAMILIES for u in AXES for s in SIGNS
)


class NotUnimodular(ValueError):
    pass


def e_plus(s) -> Mat2:
    z = s - s
    return Mat2(z + 1, s, z, z + 1)


def e_minus(s) -> Mat2:
    z = s - s
    return Mat2(z + 1, z, s, z + 1)


def _det3(g):
    return (
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    )


def _cofactor3(g):
    """Cofactor matrix; equals the inverse transpose when det = 1."""
    def minor(i, j):
        rows = [r for k, r in enumerate(g) if k != i]
        cols = [[c for l, c in enumerate(r) if l != j] for r in rows]
        return cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0]
    return tuple(tuple((-1) ** (i + j) * minor(i, j) for j in range(3)) for i in range(3))


def _matvec3(g, v):
    return tuple(g[i][0] * v[0] + g[i][1] * v[1] + g[i][2] * v[2] for i in range(3))


class Generator:
    def apply(self, x: Octonion) -> Octonion:
        raise NotImplementedError

    def inverse(self) -> "Generator":
        raise NotImplementedError


@dataclass(frozen=True)
class Theta(Generator):
    """theta(g): v -> g v, w -> g^-T w, diagonal entries fixed."""

    g: tuple

    def __post_init__(self):
        g = tuple(tuple(row) for row in self.g)
        object.__setattr__(self, "g", g)
        if _det3(g) != 1:
            raise NotUnimodular("theta needs a 3x3 matrix of determinant 1")

    def apply(self, x: Octonion) -> Octonion:
        return Octonion.of(x.a, _matvec3(self.g, x.v), _matvec3(_cofactor3(self.g), x.w), x.d)

    def inverse(self) -> "Theta":
        c = _cofactor3(self.g)
        return Theta(tuple(tuple(c[j][i] for j in range(3)) for i in range(3)))


def theta_diag(*entries) -> Theta:
    z = entries[0] - entries[0]
    return Theta(tuple(tuple(entries[i] if i == j else z for j in range(3)) for i in range(3)))


def _check_sl2(g: Mat2):
    if g.det() != 1:
        raise NotUnimodular("SL2 element needs determinant 1")


@dataclass(frozen=True)
class GammaGen(Generator):
    """gamma_u(g): eta(A) + eta(B) l_u -> eta(A) + eta(g B) l_u."""

    axis: str
    g: Mat2

    def __post_init__(self):
        _check_sl2(self.g)

    def apply(self, x: Octonion) -> Octonion:
        a, b = decompose(x, self.axis)
        return recompose(a, self.g * b, self.axis)

    def inverse(self) -> "GammaGen":
        return GammaGen(self.axis, self.g.adjugate())


@dataclass(frozen=True)
class DeltaGen(Generator):
    """delta_u(g): eta(A) + eta(B) l_u -> eta(g A g^-1) + eta(B g^-1) l_u."""

    axis: str
    g: Mat2

    def __post_init__(self):
        _check_sl2(self.g)

    def apply(self, x: Octonion) -> Octonion:
        a, b = decompose(x, self.axis)
        gi = self.g.adjugate()
        return recompose(self.g * a * gi, b * gi, self.axis)

    def inverse(self) -> "DeltaGen":
        return DeltaGen(self.axis, self.g.adjugate())


@dataclass(frozen=True)
class RootGen(Generator):
    """The one-parameter family attached to a root label, at parameter ``param``."""

    label: RootLabel
    param: Any

    def expand(self) -> Generator:
        e = e_plus(self.param) if self.label.sign == "+" else e_minus(self.param)
        cls = GammaGen if self.label.family == "gamma" else DeltaGen
        return cls(self.label.axis, e)

    def apply(self, x: Octonion) -> Octonion:
        return self.expand().apply(x)

    def inverse(self) -> "RootGen":
        return RootGen(self.label, -self.param)

    def __str__(self):
        return f"{self.label}({self.param})"


def root_generator(label: RootLabel, param) -> RootGen:
    return RootGen(label, param)


@dataclass(frozen=True)
class AutWord:
    gens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))

    def __add__(self, other: "AutWord") -> "AutWord":
        return AutWord(self.gens + other.gens)

    def __len__(self):
        return len(self.gens)

    def apply(self, x: Octonion) -> Octonion:
        for g in self.gens:
            x = g.apply(x)
        return x

    def inverse(self) -> "AutWord":
        return AutWord(tuple(g.inverse() for g in reversed(self.gens)))


Word = Union[AutWord, Generator]


def as_word(w: Word) -> AutWord:
    return w if isinstance(w, AutWord) else AutWord((w,))


def apply(gen: Generator, x: Octonion) -> Octonion:
    return gen.apply(x)


def apply_word(word: Word, x: Octonion) -> Octonion:
    return as_word(word).apply(x)


def w_alpha(label: RootLabel, t) -> AutWord:
    """e_a(t) e_-a(-1/t) e_a(t)."""
    if t == 0:
        raise ZeroDivisionError("w_alpha needs an invertible parameter")
    return AutWord((RootGen(label, t), RootGen(label.mirror(), -inv(t)), RootGen(label, t)))


def h_alpha(label: RootLabel, t) -> AutWord:
    """The composite map w_a(t) o w_a(-1), so w_a(-1) acts first."""
    return w_alpha(label, -(t - t + 1)) + w_alpha(label, t)


def to_matrix(word: Word, like=None) -> list[list]:
    """8x8 matrix of the word acting on coordinate columns."""
    w = as_word(word)
    cols = []
    for j in range(8):
        e = basis_by_position(j)
        if like is not None:
            e = Octonion(tuple(c + (like - like) for c in e.coords))
        cols.append(w.apply(e).coords)
    return [[cols[j][i] for j in range(8)] for i in range(8)]


class NotToral(ValueError):
    pass


def torus_exponents(word: Word, p: int) -> tuple[int, int, int]:
    """Exponents (e1, e2, e3) with the word acting as theta(diag(p^e1, p^e2, p^e3))."""
    m = to_matrix(word)
    for i in range(8):
        for j in range(8):
            if i != j and m[i][j] != 0:
                raise NotToral("word does not act diagonally")
    if m[0][0] != 1 or m[7][7] != 1:
        raise NotToral("word moves the diagonal entries")
    exps = []
    for j in range(3):
        c, cw = Fraction(m[1 + j][1 + j]), Fraction(m[4 + j][4 + j])
        e = val_p(c, p)
        if c != Fraction(p) ** e or cw != Fraction(p) ** (-e):
            raise NotToral("diagonal entries are not matching powers of p")
        exps.append(e)
    if sum(exps) != 0:
        raise NotToral("exponents do not sum to zero")
    return tuple(exps)


def word_equal_on(w1: Word, w2: Word, x: Octonion) -> bool:
    return apply_word(w1, x) == apply_word(w2, x)


def generic_octonion(names: Sequence[str] = ("a", "b", "c", "d", "e", "f", "g", "h")) -> Octonion:
    """The symbolic octonion whose coordinates are independent variables."""
    return Octonion(tuple(MultiPoly.var(n) for n in names))


_GEN_RE = re.compile(r"^(gamma|delta)([+-])([ijk])\((.+)\)$")
_H_RE = re.compile(r"^h\((gamma|delta)([+-])([ijk]),(.+)\)$")
_W_RE = re.compile(r"^w\((gamma|delta)([+-])([ijk]),(.+)\)$")


def _parse_param(text: str, p: int):
    from .core_arith import parse_rational

    text = text.strip()
    if text == "p":
        return Fraction(p)
    if re.fullmatch(r"[A-Za-z_]\w*", text):
        return MultiPoly.var(text)
    return parse_rational(text)


def parse_generator(text: str, p: int = 5) -> AutWord:
    """Parse "gamma+i(3/2)", "delta-k(s)", "theta[[...]]" or "h(gamma+k, p)"."""
    import json

    t = text.replace(" ", "")
    if t.startswith("theta"):
        rows = json.loads(t[len("theta"):])
        from .core_arith import parse_rational

        g = tuple(tuple(parse_rational(str(c)) for c in r) for r in rows)
        if len(g) != 3 or any(len(r) != 3 for r in g):
            raise ValueError("theta needs a 3x3 matrix")
        return AutWord((Theta(g),))
    for rx, fn in ((_H_RE, h_alpha), (_W_RE, w_alpha)):
        m = rx.match(t)
        if m:
            return fn(RootLabel(m.group(1), m.group(3), m.group(2)), _parse_param(m.group(4), p))
    m = _GEN_RE.match(t)
    if m:
        lab = RootLabel(m.group(1), m.group(3), m.group(2))
        return AutWord((RootGen(lab, _parse_param(m.group(4), p)),))
    raise ValueError(f"cannot parse generator {text!r}")
