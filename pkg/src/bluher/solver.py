"""Classification and explicit roots of P_a(X) = X^{q+1} + X + a over GF(Q).

Four routes:

* F(a) = 0: p^d + 1 roots, built through the linearized-polynomial
  pipeline (G1, G2 over GF(q^N), then an Artin-Schreier completion).
* p odd, F(a) != 0: discriminant E = G^2 - 4aF^{q+1} in GF(p^d).
* p = 2, F(a) != 0: G(a) = 0 gives one root, otherwise the trace
  H = tr_d(Nr(a) / G^2) decides between 0 and 2.
* Explicit parametrization a(u) for u outside GF(p^{2d}).

Every route re-checks its roots by substitution before returning.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .gf import (
    FieldTooLarge,
    descend,
    embed,
    in_subfield,
    make_field,
    norm_rel,
    sqrt_in_subfield,
    trace_rel,
)
from .linpoly import artin_schreier_solve
from .sequence import (
    AZero,
    Instance,
    build_G1,
    build_G2,
    eval_B,
    eval_F,
    eval_G,
)

PD1_Q_LIMIT = 2**16


class SolverError(Exception):
    pass


class CasePd1(SolverError):
    """An N_a <= 2 route was called with F(a) = 0."""


class NotPd1Case(SolverError):
    pass


class InternalCheckFailed(SolverError):
    pass


class PipelineExhausted(SolverError):
    pass


class UInSmallField(SolverError, ValueError):
    pass


@dataclass
class Solution:
    count: int
    roots: list
    case: str
    diagnostics: dict = field(default_factory=dict)


def P(inst, x):
    return x ** (inst.q + 1) + x + inst.a


def _finish(inst, roots, case, diag):
    roots = sorted(set(roots), key=int)
    for x in roots:
        if x.ctx != inst.ctxQ or P(inst, x):
            raise InternalCheckFailed(f"{case}: {x!r} is not a root for {inst}")
    return Solution(len(roots), roots, case, diag)


def discriminant(inst):
    """E = G(a)^2 - 4 a F(a)^{q+1} (odd p)."""
    F, G = eval_F(inst), eval_G(inst)
    return G * G - 4 * inst.a * F ** (inst.q + 1)


def trace_H(inst):
    """H = tr_d(Nr^n_d(a) / G(a)^2) (p = 2, G(a) != 0)."""
    G = eval_G(inst)
    ratio = norm_rel(inst.a, inst.d, inst.m) / (G * G)
    if not in_subfield(ratio, inst.d):
        raise InternalCheckFailed(f"Nr(a)/G^2 not in GF(2^{inst.d}) for {inst}")
    return trace_rel(ratio, 1, inst.d)


def classify(inst):
    if not inst.a:
        raise AZero
    if not eval_F(inst):
        return inst.pd + 1
    if inst.p != 2:
        E = discriminant(inst)
        if not E:
            return 1
        return 2 if E ** ((inst.pd - 1) // 2) == inst.ctxQ.one else 0
    if not eval_G(inst):
        return 1
    return 0 if trace_H(inst) else 2


def solve(inst):
    if not eval_F(inst):
        return solve_pd1(inst)
    if inst.p == 2:
        return solve_le2_p2(inst)
    return solve_le2_oddp(inst)


def solve_le2_oddp(inst):
    if inst.p == 2:
        raise ValueError("odd characteristic only")
    F, G = eval_F(inst), eval_G(inst)
    if not F:
        raise CasePd1(repr(inst))
    E = discriminant(inst)
    if not in_subfield(E, inst.d):
        raise InternalCheckFailed(f"E not in GF(p^d) for {inst}")
    diag = {"F": F, "G": G, "E": E}
    two_F = 2 * F
    if not E:
        return _finish(inst, [-G / two_F], "le2_oddp", diag)
    if E ** ((inst.pd - 1) // 2) != inst.ctxQ.one:
        return _finish(inst, [], "le2_oddp", diag)
    r = sqrt_in_subfield(E, inst.d)
    diag["sqrtE"] = r
    return _finish(inst, [(r - G) / two_F, (-r - G) / two_F], "le2_oddp", diag)


def zeta(ctx2):
    """Fixed element of mu_{Q+1} minus {1} in GF(Q^2): g^{Q-1} for the primitive g."""
    Q = ctx2.p ** (ctx2.e // 2)
    return ctx2.primitive ** (Q - 1)


def solve_le2_p2(inst):
    if inst.p != 2:
        raise ValueError("characteristic 2 only")
    F, G = eval_F(inst), eval_G(inst)
    if not F:
        raise CasePd1(repr(inst))
    a, q, n = inst.a, inst.q, inst.n
    diag = {"F": F, "G": G}
    if not G:
        return _finish(inst, [(a * F ** (q - 1)) ** (2 ** (n - 1))], "le2_p2", diag)
    H = trace_H(inst)
    diag["H"] = H
    if H:
        return _finish(inst, [], "le2_p2", diag)
    E = a * F ** (q + 1) / (G * G)
    diag["E"] = E
    C, C2 = inst.ctxQ, inst.ctx_Q2
    z = zeta(C2)
    w = embed(C, C2, E) / (z + 1)
    T = C2.zero
    for i in range(n):
        T = T + w.frob(i)
    try:
        Tq = descend(C, C2, T)
    except ValueError as exc:
        raise InternalCheckFailed(f"T_n(E/(zeta+1)) outside GF(Q) for {inst}") from exc
    ratio = G / F
    x1 = ratio * Tq
    return _finish(inst, [x1, x1 + ratio], "le2_p2", diag)


def q1_root(inst, c):
    """Some beta in GF(Q)* with beta^{q-1} = c, by scanning (None if absent)."""
    for beta in inst.ctxQ.elements(1):
        if beta ** (inst.q - 1) == c:
            return beta
    return None


def complete_from_root(inst, x0):
    """All GF(Q)-roots from one root x0 when F(a) = 0.

    beta^{q-1} = x0^2/a, then w^q - w + 1/(beta x0) = 0 has p^d solutions
    w0 + GF(p^d), and the roots are x0 and (w0 + alpha)^{q-1} x0.
    Returns (roots, beta, w_solutions).
    """
    C = inst.ctxQ
    beta = q1_root(inst, x0 * x0 / inst.a)
    if beta is None:
        raise InternalCheckFailed(f"x0^2/a is not a (q-1)-th power for {inst}")
    ws = artin_schreier_solve((beta * x0).inv(), inst.q, C)
    if len(ws) != inst.pd:
        raise InternalCheckFailed(f"{len(ws)} Artin-Schreier solutions, expected {inst.pd}")
    w0 = ws[0]
    roots = [x0] + [(w0 + alpha) ** (inst.q - 1) * x0 for alpha in C.subfield_elements(inst.d)]
    return roots, beta, ws


def find_x0(inst):
    """Nonzero y = G1(G2(x')^s gamma delta) in ker(L_a); returns (x0 = y^{q-1}, witnesses)."""
    C, A = inst.ctxQ, inst.ctx_amb
    G1, G2 = build_G1(inst).embed(A), build_G2(inst).embed(A)
    gammas = [g for g in A.subfield_elements(inst.k) if g]
    deltas = [embed(C, A, x) for x in C.elements(1)]
    for xp in A.elements(1):
        z = G2(xp)
        if not z:
            continue
        zs = z**inst.s
        for gamma, delta in itertools.product(gammas, deltas):
            y = G1(zs * gamma * delta)
            if y:
                x0 = y ** (inst.q - 1)
                try:
                    x0 = descend(C, A, x0)
                except ValueError as exc:
                    raise InternalCheckFailed(f"x0 outside GF(Q) for {inst}") from exc
                return x0, {"x_prime": xp, "gamma": gamma, "delta": delta, "y": y}
    raise PipelineExhausted(repr(inst))


def solve_pd1(inst):
    if eval_F(inst):
        raise NotPd1Case(repr(inst))
    if inst.Q > PD1_Q_LIMIT:
        raise FieldTooLarge(f"GF({inst.p}^{inst.n}) beyond the p^d+1 pipeline limit")
    x0, wit = find_x0(inst)
    roots, beta, ws = complete_from_root(inst, x0)
    diag = {
        "F": eval_F(inst),
        "G": eval_G(inst),
        "B_m": eval_B(inst, inst.m),
        "N": inst.N,
        "s": inst.s,
        "ambient_degree": inst.ctx_amb.e,
        **wit,
        "x0": x0,
        "beta": beta,
        "w0": ws[0],
    }
    sol = _finish(inst, roots, "pd1", diag)
    if sol.count != inst.pd + 1:
        raise InternalCheckFailed(f"{sol.count} roots, expected {inst.pd + 1}")
    return sol


def excluded_degree(p, n, k):
    """Degree of GF(p^{2d}) intersected with GF(p^n)."""
    return math.gcd(2 * math.gcd(n, k), n)


def parametrize_a(p, n, k, u):
    """a(u) = (u-u^q)^{q^2+1}/(u-u^{q^2})^{q+1} and its p^d+1 listed roots."""
    C = u.ctx
    if C.p != p or C.e != n:
        raise ValueError(f"u must lie in GF({p}^{n})")
    q, d = p**k, math.gcd(n, k)
    if in_subfield(u, excluded_degree(p, n, k)):
        raise UInSmallField(repr(u))
    uq = u.frob(k)
    den = u - uq.frob(k)
    if not den:
        raise UInSmallField(repr(u))
    diff = u - uq
    a = diff ** (q * q + 1) / den ** (q + 1)
    base = C.one + diff ** (q - 1)
    if not base:
        raise UInSmallField(f"1 + (u-u^q)^(q-1) vanishes at {u!r}")
    x0 = -base.inv()
    xs = [-((u + alpha) ** (q * q - q)) / base for alpha in C.subfield_elements(d)]
    roots = [x0] + xs
    for x in roots:
        if x ** (q + 1) + x + a:
            raise InternalCheckFailed(f"parametrized root {x!r} fails for u={u!r}")
    return a, roots


def quadratic_residual(inst, x):
    """F(a) x^2 + G(a) x + a F(a)^q."""
    F, G = eval_F(inst), eval_G(inst)
    return F * x * x + G * x + inst.a * F.frob(inst.k)
