"""Print the M_i census for a list of (p, k, n) triples and check the
solver against brute force for every a.

    python scripts/census_table.py                # default desk suite
    python scripts/census_table.py 2,1,5 3,2,6
"""
import math
import sys
import time

from bluher.gf import make_field
from bluher.oracle import census, verify
from bluher.sequence import Instance

SUITE = [
    (2, 1, 3), (2, 1, 4), (2, 1, 6), (2, 2, 4), (2, 2, 6), (2, 3, 6),
    (3, 1, 2), (3, 1, 3), (3, 1, 4), (3, 2, 4), (5, 1, 2), (5, 1, 3),
]


def main(argv):
    triples = [tuple(int(v) for v in s.split(",")) for s in argv] or SUITE
    print(f"{'p':>2} {'k':>2} {'n':>2} {'d':>2} | {'M_0':>5} {'M_1':>5} {'M_2':>5} {'M_pd+1':>7} | mismatches  time")
    for p, k, n in triples:
        t0 = time.perf_counter()
        d = math.gcd(n, k)
        rows = {r.i: r.M for r in census(p, k, n)}
        C = make_field(p, n)
        bad = sum(not verify(Instance(p, n, k, a)).match for a in C.elements(1))
        print(
            f"{p:>2} {k:>2} {n:>2} {d:>2} | {rows.get(0, 0):>5} {rows.get(1, 0):>5} {rows.get(2, 0):>5} "
            f"{rows.get(p**d + 1, 0):>7} | {bad:>10}  {time.perf_counter() - t0:.2f}s"
        )


if __name__ == "__main__":
    main(sys.argv[1:])
