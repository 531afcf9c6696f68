"""Explicit roots of X^{p^k+1} + X + a over GF(p^n)."""
from .gf import Elt, FieldCtx, make_field
from .oracle import brute_roots, census, verify
from .sequence import Instance, make_instance
from .solver import Solution, classify, parametrize_a, solve

__version__ = "0.1.0"

__all__ = [
    "Elt",
    "FieldCtx",
    "Instance",
    "Solution",
    "brute_roots",
    "census",
    "classify",
    "make_field",
    "make_instance",
    "parametrize_a",
    "solve",
    "verify",
]
