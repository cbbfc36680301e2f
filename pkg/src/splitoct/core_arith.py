"""Exact scalars: rationals, p-adic valuations, and a sparse Laurent polynomial ring.

Rationals are ``fractions.Fraction``.  Valuations live in the extended integers,
where ``INF`` stands for the valuation of zero.  ``MultiPoly`` is a commutative
polynomial ring over the rationals in named variables; exponents may be
negative so that a monomial such as ``t`` has an inverse, which the Weyl-type
words ``w_alpha(t)`` need.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Union

Rational = Fraction

DEFAULT_PRIME_ENV = "SPLITOCT_PRIME"


class ConfigError(ValueError):
    """A runtime parameter (such as the prime) is unusable."""


@total_ordering
class _Infinity:
    """The distinguished value +inf of the extended integers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("splitoct-inf")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__


INF = _Infinity()
ExtInt = Union[int, _Infinity]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % f for f in range(3, math.isqrt(n) + 1, 2))


def check_prime(p: int) -> int:
    """Return p if it is an odd prime, otherwise raise ConfigError."""
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p) or p == 2:
        raise ConfigError(f"p must be an odd prime, got {p!r}")
    return p


def default_prime() -> int:
    raw = os.environ.get(DEFAULT_PRIME_ENV, "5")
    try:
        p = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{DEFAULT_PRIME_ENV}={raw!r} is not an integer") from exc
    return check_prime(p)


def _int_val(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def val_p(q, p: int) -> ExtInt:
    """Exponent of p in the rational q, or INF for q = 0."""
    if not is_prime(p):
        raise ConfigError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return INF
    return _int_val(abs(q.numerator), p) - _int_val(q.denominator, p)


def ext_min(values: Iterable[ExtInt]) -> ExtInt:
    out: ExtInt = INF
    for v in values:
        if v < out:
            out = v
    return out


def parse_rational(text: str) -> Fraction:
    """Parse "n" or "n/d"; raises ValueError on anything else."""
    text = text.strip()
    if not text or any(c not in "+-0123456789/" for c in text):
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(text)


def format_rational(q) -> str:
    if q is INF:
        return "inf"
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# A monomial is a tuple of (name, exponent) pairs sorted by name, exponents nonzero.
Monomial = tuple


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for name, e in m2:
        e2 = exps.get(name, 0) + e
        if e2:
            exps[name] = e2
        else:
            del exps[name]
    return tuple(sorted(exps.items()))


class MultiPoly:
    """Sparse Laurent polynomial with rational coefficients.

    ``variables`` records declaration order for display; equality is structural
    on the normalized term map and ignores declaration order.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, variables: Iterable[str] = ()):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(sorted((n, e) for n, e in mono if e))] = c
        names = list(dict.fromkeys(variables))
        for mono in clean:
            for n, _ in mono:
                if n not in names:
                    names.append(n)
        self.variables = tuple(names)
        self.terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1}, (name,))

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @staticmethod
    def lift(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MultiPoly.const(x)
        return NotImplemented

    def _merged_vars(self, other: "MultiPoly") -> tuple:
        return tuple(dict.fromkeys(self.variables + other.variables))

    def __add__(self, other):
        other = MultiPoly.lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return MultiPoly._raw(terms, self._merged_vars(other))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        other = MultiPoly.lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = MultiPoly.lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = MultiPoly.lift(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return MultiPoly._raw(terms, self._merged_vars(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "MultiPoly":
        """Inverse of a single-term polynomial; anything else is not a unit."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible in the Laurent ring")
        (mono, c), = self.terms.items()
        return MultiPoly._raw({tuple((n, -e) for n, e in mono): 1 / c}, self.variables)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * MultiPoly.lift(other).inverse()

    def __rtruediv__(self, other):
        return MultiPoly.lift(other) * self.inverse()

    @classmethod
    def _raw(cls, terms, variables):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.variables = variables
        obj._hash = None
        return obj

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = MultiPoly.lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def constant_value(self):
        """The value as a Fraction if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    def coefficient(self, mono: Iterable[tuple[str, int]]) -> Fraction:
        return self.terms.get(tuple(sorted((n, e) for n, e in mono if e)), Fraction(0))

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def eval(self, assignment: Mapping[str, object]) -> Fraction:
        """Substitute rationals for every variable."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for name, e in mono:
                if name not in assignment:
                    raise KeyError(f"no value for variable {name!r}")
                term *= Fraction(assignment[name]) ** e
            total += term
        return total

    def _sort_key(self, mono):
        pos = {n: i for i, n in enumerate(self.variables)}
        dense = [0] * len(self.variables)
        for n, e in mono:
            dense[pos[n]] = e
        return (-sum(dense), [-e for e in dense])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=self._sort_key):
            c = self.terms[mono]
            body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            if not body:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{format_rational(c)}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_vars(*names: str) -> tuple[MultiPoly, ...]:
    return tuple(MultiPoly.var(n) for n in names)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return MultiPoly.lift(a) + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return MultiPoly.lift(a) * b


def poly_neg(a: MultiPoly) -> MultiPoly:
    return -MultiPoly.lift(a)


def poly_eval(f: MultiPoly, assignment: Mapping[str, object]) -> Fraction:
    return MultiPoly.lift(f).eval(assignment)


def inv(c):
    """Multiplicative inverse in whichever coefficient ring c belongs to."""
    if isinstance(c, MultiPoly):
        return c.inverse()
    c = Fraction(c)
    if c == 0:
        raise ZeroDivisionError("zero has no inverse")
    return 1 / c


def is_zero(c) -> bool:
    return c == 0
