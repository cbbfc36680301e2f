"""Exact arithmetic for the split octonions, their G2 automorphisms and octonion orders."""

from .core_arith import INF, MultiPoly, Rational, val_p
from .octonion import Octonion, mult, norm, trace, conj

__all__ = ["INF", "MultiPoly", "Rational", "val_p", "Octonion", "mult", "norm", "trace", "conj"]
__version__ = "0.1.0"
