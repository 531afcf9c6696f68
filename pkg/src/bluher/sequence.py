"""The coefficient sequences A_r, B_r evaluated at a concrete a, and the
linearized polynomials L_a, F1, G1, G2 built from them.

All values are field elements of GF(Q); nothing here is symbolic in a.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .gf import Elt, FieldCtx, FieldTooLarge, make_field
from .linpoly import LinPoly


class AZero(ValueError):
    pass


class PreconditionFmNonzero(ValueError):
    """A builder for the p^d+1 case was asked for while F(a) != 0."""


def a_sequence(a, k, rmax):
    """[None, A_1(a), ..., A_rmax(a)] with A_{r+2} = -A_{r+1}^q - a^q A_r^{q^2}."""
    ctx = a.ctx
    seq = [None, ctx.one, -ctx.one]
    aq = a.frob(k)
    while len(seq) <= rmax:
        r = len(seq) - 2
        seq.append(-seq[r + 1].frob(k) - aq * seq[r].frob(2 * k))
    return seq[: rmax + 1]


def a_sequence_alt(a, k, rmax):
    """Same values via A_{r+2} = -A_{r+1} - a^{q^r} A_r."""
    ctx = a.ctx
    seq = [None, ctx.one, -ctx.one]
    while len(seq) <= rmax:
        r = len(seq) - 2
        seq.append(-seq[r + 1] - a.frob(k * r) * seq[r])
    return seq[: rmax + 1]


@dataclass(frozen=True, eq=False)
class Instance:
    """P_a(X) = X^{q+1} + X + a over GF(Q), q = p^k, Q = p^n."""

    p: int
    n: int
    k: int
    a: Elt

    def __post_init__(self):
        if self.a.ctx.p != self.p or self.a.ctx.e != self.n:
            raise ValueError(f"a lives in {self.a.ctx}, expected GF({self.p}^{self.n})")
        if self.k < 1:
            raise ValueError("k must be positive")
        if not self.a:
            raise AZero("a must be nonzero")
        num = (self.q**self.m - 1) * (self.p**self.d - 1)
        den = (self.Q - 1) * (self.q - 1)
        assert num % den == 0, (self.p, self.n, self.k)

    @property
    def ctxQ(self) -> FieldCtx:
        return self.a.ctx

    @cached_property
    def d(self):
        return math.gcd(self.n, self.k)

    @cached_property
    def m(self):
        return self.n // self.d

    @property
    def q(self):
        return self.p**self.k

    @property
    def Q(self):
        return self.p**self.n

    @property
    def pd(self):
        return self.p**self.d

    @property
    def N(self):
        return self.m * (self.pd - 1)

    @property
    def s(self):
        return (self.q**self.m - 1) * (self.pd - 1) // ((self.Q - 1) * (self.q - 1))

    @cached_property
    def ctx_amb(self):
        """GF(q^N) = GF(p^{kN}); it contains GF(Q) because n | kN."""
        return make_field(self.p, self.k * self.N)

    @cached_property
    def ctx_Q2(self):
        return make_field(self.p, 2 * self.n)

    @cached_property
    def _A(self):
        return a_sequence(self.a, self.k, self.m + 2)

    def A(self, r):
        if r >= len(self._A):
            self._A.extend(a_sequence(self.a, self.k, r)[len(self._A):])
        return self._A[r]

    def __repr__(self):
        return f"Instance(p={self.p}, n={self.n}, k={self.k}, a={int(self.a)})"


def make_instance(p, n, k, a, poly=None):
    """Instance from an integer encoding (or Elt) of a."""
    ctx = make_field(p, n, poly)
    return Instance(p, n, k, a if isinstance(a, Elt) else ctx(a))


def eval_A(inst, r):
    if r < 1:
        raise ValueError("r >= 1")
    return inst.A(r)


def eval_B(inst, r):
    """B_1 = 0, B_{r+1} = -a A_r^q."""
    if r < 1:
        raise ValueError("r >= 1")
    if r == 1:
        return inst.ctxQ.zero
    return -inst.a * inst.A(r - 1).frob(inst.k)


def eval_F(inst):
    return inst.A(inst.m)


def eval_G(inst):
    m = inst.m
    # A_0 = 0 extends the recurrence backwards; only reached when m = 1
    prev = inst.A(m - 1).frob(inst.k) if m > 1 else inst.ctxQ.zero
    return -inst.A(m + 1) - inst.a * prev


def zero_set_A(r, ctx, k=1):
    """{(u-u^q)^{q^2+1} / (u-u^{q^2})^{q+1} : u in GF(q^r) minus GF(q^2)}.

    ctx must be GF(q^r) with q = p^k.  Test oracle only.
    """
    if r < 3:
        raise ValueError("r >= 3")
    if ctx.e != k * r:
        raise ValueError(f"{ctx} is not GF(q^{r}) for q = p^{k}")
    if ctx.order > 2**16:
        raise FieldTooLarge(repr(ctx))
    q = ctx.p**k
    out = set()
    for u in ctx.elements():
        den = u - u.frob(2 * k)
        if not den:
            continue
        num = u - u.frob(k)
        out.add(num ** (q * q + 1) / den ** (q + 1))
    return out


def _require_pd1(inst):
    if eval_F(inst):
        raise PreconditionFmNonzero(f"F(a) != 0 for {inst}")


def build_La(inst):
    """L_a = X^{q^2} + X^q + aX."""
    ctx, k = inst.ctxQ, inst.k
    return LinPoly(ctx, {2 * k: ctx.one, k: ctx.one, 0: inst.a})


def build_F1(inst):
    """F1 = X^{q^m} - B_m(a) X."""
    _require_pd1(inst)
    ctx = inst.ctxQ
    return LinPoly(ctx, {inst.k * inst.m: ctx.one, 0: -eval_B(inst, inst.m)})


def build_G1(inst):
    """G1 = sum_{i=0}^{m-2} A_{m-1-i}(a)^{q^{i+1}} X^{q^i}."""
    _require_pd1(inst)
    k, m = inst.k, inst.m
    return LinPoly(inst.ctxQ, {k * i: inst.A(m - 1 - i).frob(k * (i + 1)) for i in range(m - 1)})


def build_G2(inst):
    """G2 = sum_{i=0}^{p^d-2} B_m(a)^{p^d-2-i} X^{q^{m i}}."""
    _require_pd1(inst)
    b = eval_B(inst, inst.m)
    P = inst.pd
    return LinPoly(inst.ctxQ, {inst.k * inst.m * i: b ** (P - 2 - i) for i in range(P - 1)})
