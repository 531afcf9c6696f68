"""Linearized polynomials sum_j c_j X^{p^j} over a concrete field.

Terms are keyed by the p-power exponent j, so q-polynomials (q = p^k) and
q^m-polynomials live in one representation and compose without any base
bookkeeping.  Kernels and preimages come from the GF(p)-matrix of the map.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .gf import CtxMismatch, FieldTooLarge, embed

KERNEL_ENUM_LIMIT = 2**16


class LinPoly:
    def __init__(self, ctx, terms):
        self.ctx = ctx
        clean = {}
        for j, c in terms.items():
            c = ctx(c) if not hasattr(c, "ctx") else c
            if c.ctx != ctx:
                raise CtxMismatch(f"{c.ctx} vs {ctx}")
            if c:
                clean[int(j)] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def from_coeffs(cls, ctx, coeffs, base=1):
        """sum_i coeffs[i] X^{p^{base*i}}."""
        return cls(ctx, {base * i: c for i, c in enumerate(coeffs)})

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, {0: ctx.one})

    @property
    def base(self):
        """Largest b with every exponent a multiple of b (0 for monomials at X)."""
        b = 0
        for j in self.terms:
            b = np.gcd(b, j)
        return int(b)

    @property
    def degree_exp(self):
        return max(self.terms, default=0)

    def coeff(self, j):
        return self.terms.get(j, self.ctx.zero)

    def __call__(self, x):
        return lp_eval(self, x)

    def __matmul__(self, other):
        return lp_compose(self, other)

    def __add__(self, other):
        terms = dict(self.terms)
        for j, c in other.terms.items():
            terms[j] = terms.get(j, self.ctx.zero) + c
        return LinPoly(self.ctx, terms)

    def __neg__(self):
        return LinPoly(self.ctx, {j: -c for j, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, LinPoly) and self.ctx == other.ctx and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"{int(c)}*X^(p^{j})" for j, c in self.terms.items()) or "0"
        return f"LinPoly[{body}]"

    def embed(self, dst):
        if dst == self.ctx:
            return self
        return LinPoly(dst, {j: embed(self.ctx, dst, c) for j, c in self.terms.items()})

    def matrix(self):
        """GF(p)-matrix of x -> L(x) on self.ctx (column i = L(t^i))."""
        return self.ctx.matrix_of(self)

    def eval_many(self, vecs):
        """Evaluate on the rows of an (n, e) coefficient array."""
        M = self.matrix()
        return (np.asarray(vecs, dtype=np.int64) @ M.T) % self.ctx.p


def lp_eval(L, x):
    if x.ctx != L.ctx:
        raise CtxMismatch(f"{x.ctx} vs {L.ctx}")
    out = L.ctx.zero
    for j, c in L.terms.items():
        out = out + c * x.frob(j)
    return out


def lp_compose(L1, L2):
    """Symbolic L1 o L2: c X^{p^i} o d X^{p^j} = c d^{p^i} X^{p^{i+j}}."""
    if L1.ctx != L2.ctx:
        raise CtxMismatch(f"{L1.ctx} vs {L2.ctx}")
    terms = {}
    zero = L1.ctx.zero
    for i, c in L1.terms.items():
        for j, d in L2.terms.items():
            terms[i + j] = terms.get(i + j, zero) + c * d.frob(i)
    return LinPoly(L1.ctx, terms)


@dataclass
class Kernel:
    basis: list
    elements: list | None
    p: int

    @property
    def dim(self):
        return len(self.basis)

    @property
    def size(self):
        return self.p**self.dim


def _prepare(L, ctx):
    if ctx is None:
        return L
    return L.embed(ctx)


def lp_kernel(L, ctx=None):
    """Kernel of L on ctx (default: L's coefficient field)."""
    L = _prepare(L, ctx)
    ctx = L.ctx
    basis = linalg.nullspace(L.matrix(), ctx.p)
    elements = None
    if ctx.p ** len(basis) <= KERNEL_ENUM_LIMIT:
        vecs = linalg.span(basis, ctx.p) if len(basis) else np.zeros((1, ctx.e), dtype=np.int64)
        elements = sorted(ctx.from_array(vecs), key=int)
    return Kernel(ctx.from_array(basis), elements, ctx.p)


def lp_image_basis(L, ctx=None):
    L = _prepare(L, ctx)
    return L.ctx.from_array(linalg.column_space(L.matrix(), L.ctx.p))


def lp_preimage(L, y, ctx=None):
    """All x with L(x) = y, sorted by encoding; empty if y is not in the image."""
    L = _prepare(L, ctx)
    ctx = L.ctx
    if y.ctx != ctx:
        y = embed(y.ctx, ctx, y)
    M = L.matrix()
    x0 = linalg.solve(M, np.array(y.c, dtype=np.int64), ctx.p)
    if x0 is None:
        return []
    basis = linalg.nullspace(M, ctx.p)
    if ctx.p ** len(basis) > KERNEL_ENUM_LIMIT:
        raise FieldTooLarge(f"kernel of size {ctx.p}^{len(basis)} too large to list")
    vecs = (linalg.span(basis, ctx.p) + x0) % ctx.p if len(basis) else x0.reshape(1, -1)
    return sorted(ctx.from_array(vecs), key=int)


def artin_schreier_solve(c, q, ctx=None):
    """All w in ctx with w^q - w + c = 0 (q a power of the characteristic)."""
    ctx = ctx or c.ctx
    if c.ctx != ctx:
        c = embed(c.ctx, ctx, c)
    k = 0
    while ctx.p**k < q:
        k += 1
    if ctx.p**k != q:
        raise ValueError(f"{q} is not a power of {ctx.p}")
    L = LinPoly(ctx, {k: ctx.one, 0: -ctx.one})
    return lp_preimage(L, -c)
