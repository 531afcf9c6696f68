"""Brute-force ground truth: roots by exhaustive evaluation and the M_i census.

Nothing here touches the sequence/linpoly machinery; P_a is evaluated
directly at every field element.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .gf import FieldTooLarge, make_field
from .sequence import Instance

ROOTS_LIMIT = 2**16
CENSUS_LIMIT = 2**14


@dataclass(frozen=True)
class CensusRow:
    i: int
    M: int


def brute_roots(inst):
    C = inst.ctxQ
    if C.order > ROOTS_LIMIT:
        raise FieldTooLarge(f"{C} too large for exhaustive roots")
    q, a = inst.q, inst.a
    return [x for x in C.elements() if not (x ** (q + 1) + x + a)]


def value_table(p, k, n, poly=None):
    """{v: [x with x^{q+1} + x = v]} over GF(p^n)."""
    C = make_field(p, n, poly)
    if C.order > CENSUS_LIMIT:
        raise FieldTooLarge(f"{C} too large for a census")
    q = p**k
    table = {}
    for x in C.elements():
        table.setdefault(x ** (q + 1) + x, []).append(x)
    return C, table


def census(p, k, n, poly=None, check_classify=True):
    """Exhaustive M_i table, sorted by i.

    With check_classify, classify() must agree with the oracle count for
    every a; a disagreement raises AssertionError.
    """
    from .solver import classify

    C, table = value_table(p, k, n, poly)
    counts = {}
    for a in C.elements(1):
        roots = table.get(-a, [])
        counts[len(roots)] = counts.get(len(roots), 0) + 1
        if check_classify:
            got = classify(Instance(p, n, k, a))
            assert got == len(roots), f"classify={got}, oracle={len(roots)} at a={int(a)}"
    return [CensusRow(i, counts[i]) for i in sorted(counts)]


@dataclass
class VerifyReport:
    params: dict
    a: int
    match: bool
    oracle_count: int
    solver_count: int | None
    classify_count: int | None
    oracle_roots: list
    solver_roots: list
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    case: str | None = None
    diagnostics: dict = field(default_factory=dict)
    error: str | None = None

    def as_dict(self):
        return {
            "params": self.params,
            "a": self.a,
            "status": "match" if self.match else "mismatch",
            "oracle_count": self.oracle_count,
            "solver_count": self.solver_count,
            "classify_count": self.classify_count,
            "oracle_roots": self.oracle_roots,
            "solver_roots": self.solver_roots,
            "missing": self.missing,
            "extra": self.extra,
            "case": self.case,
            "diagnostics": self.diagnostics,
            "error": self.error,
        }


def _enc(v):
    if hasattr(v, "ctx"):
        return int(v)
    return v


def verify(inst, solution=None):
    """Compare a solver result (computed unless given) with brute_roots."""
    from .solver import classify, solve

    oracle = sorted(int(x) for x in brute_roots(inst))
    params = {"p": inst.p, "n": inst.n, "k": inst.k}
    sol, cls, err = solution, None, None
    try:
        if sol is None:
            sol = solve(inst)
        cls = classify(inst)
    except Exception as exc:  # reported, not raised
        err = f"{type(exc).__name__}: {exc}"
    got = sorted(int(x) for x in sol.roots) if sol is not None else []
    match = err is None and got == oracle and cls == len(oracle) and sol.count == len(oracle)
    return VerifyReport(
        params=params,
        a=int(inst.a),
        match=match,
        oracle_count=len(oracle),
        solver_count=sol.count if sol is not None else None,
        classify_count=cls,
        oracle_roots=oracle,
        solver_roots=got,
        missing=sorted(set(oracle) - set(got)),
        extra=sorted(set(got) - set(oracle)),
        case=sol.case if sol is not None else None,
        diagnostics={k: _enc(v) for k, v in sol.diagnostics.items()} if sol is not None else {},
        error=err,
    )
