"""Walk through the p^d+1 construction for every a with F(a) = 0 and print
the intermediate objects (B_m, G1, G2, kernel sizes, x0, beta, w0).

    python scripts/pipeline_trace.py 3 1 4
"""
import sys

from bluher.gf import make_field
from bluher.linpoly import lp_kernel
from bluher.sequence import Instance, build_G1, build_G2, build_La, eval_B, eval_F
from bluher.solver import solve


def main(p, k, n):
    C = make_field(p, n)
    print(repr(C))
    for a in C.elements(1):
        inst = Instance(p, n, k, a)
        if eval_F(inst):
            continue
        sol = solve(inst)
        dg = sol.diagnostics
        print(f"\na = {int(a)}  (d={inst.d}, m={inst.m}, N={inst.N}, s={inst.s}, ambient GF({p}^{inst.ctx_amb.e}))")
        print(f"  B_m(a) = {int(eval_B(inst, inst.m))}")
        print(f"  G1 = {build_G1(inst)!r}")
        print(f"  G2 = {build_G2(inst)!r}")
        print(f"  |ker L_a| in GF(Q) = {lp_kernel(build_La(inst)).size}, in ambient = {lp_kernel(build_La(inst), inst.ctx_amb).size}")
        print(f"  x' = {int(dg['x_prime'])}, x0 = {int(dg['x0'])}, beta = {int(dg['beta'])}, w0 = {int(dg['w0'])}")
        print(f"  roots = {[int(x) for x in sol.roots]}")


if __name__ == "__main__":
    args = [int(v) for v in sys.argv[1:4]] or [3, 1, 4]
    main(*args)
