import numpy as np
import pytest

from bluher.gf import make_field
from bluher.oracle import value_table
from bluher.sequence import Instance, eval_F

# (p, k, n)
SUITE = [
    (2, 1, 3), (2, 1, 4), (2, 1, 6), (2, 2, 4), (2, 2, 6), (2, 3, 6),
    (3, 1, 2), (3, 1, 3), (3, 1, 4), (3, 2, 4), (5, 1, 2), (5, 1, 3),
]

ACCEPTANCE = {}


def suite_id(t):
    return "p{}k{}n{}".format(*t)


def instances(p, k, n):
    C = make_field(p, n)
    return [Instance(p, n, k, a) for a in C.elements(1)]


def pd1_instances(p, k, n):
    return [inst for inst in instances(p, k, n) if not eval_F(inst)]


def oracle_roots(p, k, n):
    """{encoding of a: sorted root list} from one pass over the field."""
    C, table = value_table(p, k, n)
    return {int(a): sorted(table.get(-a, []), key=int) for a in C.elements(1)}


def sample_a(p, k, n, count=100, seed=0):
    """Every a in GF(Q)* if there are at most `count`, else `count` random ones."""
    insts = instances(p, k, n)
    if len(insts) <= count:
        return insts
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(insts), size=count, replace=False)
    return [insts[i] for i in sorted(idx)]


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {msg}")
