import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bluher import linalg
from bluher.gf import make_field
from bluher.linpoly import (
    LinPoly,
    artin_schreier_solve,
    lp_compose,
    lp_eval,
    lp_image_basis,
    lp_kernel,
    lp_preimage,
)
from bluher.sequence import build_La, make_instance


def random_linpoly(F, rng, max_exp=None, nterms=3):
    max_exp = max_exp or 2 * F.e
    exps = rng.choice(max_exp, size=nterms, replace=False)
    return LinPoly(F, {int(j): F.random(rng) for j in exps})


def test_identity_and_zero():
    F = make_field(2, 4)
    I = LinPoly.identity(F)
    for x in F.elements():
        assert I(x) == x
    L = LinPoly(F, {0: F(3), 2: F(5)})
    assert L(F.zero) == F.zero
    assert lp_compose(I, L) == L and lp_compose(L, I) == L


def test_La_on_gf8():
    inst = make_instance(2, 3, 1, 1)
    t = inst.ctxQ.gen
    assert lp_eval(build_La(inst), t) == inst.ctxQ.zero


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 6), (3, 4), (5, 3)]), st.integers(0, 2**32 - 1))
def test_linearity(pe, seed):
    rng = np.random.default_rng(seed)
    F = make_field(*pe)
    L = random_linpoly(F, rng)
    x, y = F.random(rng), F.random(rng)
    lam = int(rng.integers(0, F.p))
    assert L(x + y) == L(x) + L(y)
    assert L(x * lam) == L(x) * lam


@pytest.mark.parametrize("pe", [(2, 6), (3, 4), (2, 10)])
def test_compose_matches_evaluation_everywhere(pe, rng):
    F = make_field(*pe)
    for _ in range(3):
        A, B = random_linpoly(F, rng), random_linpoly(F, rng)
        AB = lp_compose(A, B)
        for x in F.elements():
            assert AB(x) == A(B(x))


def test_compose_mixed_bases(rng):
    F = make_field(2, 12)
    A = LinPoly.from_coeffs(F, [F.random(rng) for _ in range(3)], base=2)
    B = LinPoly.from_coeffs(F, [F.random(rng) for _ in range(3)], base=3)
    AB = A @ B
    for _ in range(200):
        x = F.random(rng)
        assert AB(x) == A(B(x))


def test_eval_many_matches_pointwise(rng):
    F = make_field(3, 4)
    L = random_linpoly(F, rng)
    pts = linalg.all_vectors(3, 4)
    got = F.from_array(L.eval_many(pts))
    assert got == [L(x) for x in F.elements()]


def test_kernel_examples():
    for p, e in [(2, 5), (3, 3), (5, 2)]:
        F = make_field(p, e)
        K = lp_kernel(LinPoly(F, {1: F.one, 0: -F.one}))
        assert K.size == p
        assert K.elements == sorted(F.subfield_elements(1), key=int)
        K0 = lp_kernel(LinPoly.identity(F))
        assert K0.size == 1 and K0.elements == [F.zero]
        Kz = lp_kernel(LinPoly(F, {}))
        assert Kz.size == F.order


@pytest.mark.parametrize("pe", [(2, 8), (3, 5), (2, 12)])
def test_rank_nullity_and_preimage_cosets(pe, rng):
    F = make_field(*pe)
    for _ in range(3):
        L = random_linpoly(F, rng, nterms=2)
        K = lp_kernel(L)
        image = lp_image_basis(L)
        assert K.size * F.p ** len(image) == F.order
        brute_ker = sorted((x for x in F.elements() if not L(x)), key=int)
        assert K.elements == brute_ker
        for _ in range(10):
            y = F.random(rng)
            pre = lp_preimage(L, y)
            assert len(pre) in (0, K.size)
            assert all(L(x) == y for x in pre)
        # exhaustive coset structure of the image values
        counts = {}
        for x in F.elements():
            v = int(L(x))
            counts[v] = counts.get(v, 0) + 1
        assert set(counts.values()) == {K.size}
        assert lp_preimage(L, F.zero) == K.elements


def test_preimage_identity(rng):
    F = make_field(3, 3)
    I = LinPoly.identity(F)
    for _ in range(10):
        y = F.random(rng)
        assert lp_preimage(I, y) == [y]


@pytest.mark.parametrize("p,k,n", [(2, 1, 4), (2, 2, 6), (3, 1, 3), (3, 2, 4), (2, 3, 6), (5, 1, 2)])
def test_artin_schreier(p, k, n):
    F = make_field(p, n)
    q, d = p**k, np.gcd(n, k)
    sub = set(F.subfield_elements(int(d)))
    assert set(artin_schreier_solve(F.zero, q, F)) == sub
    for c in F.elements():
        sols = artin_schreier_solve(c, q, F)
        brute = sorted((w for w in F.elements() if w ** q - w + c == F.zero), key=int)
        assert sols == brute
        assert len(sols) in (0, p**d)
        if sols:
            assert {w - sols[0] for w in sols} == sub


def test_artin_schreier_rejects_non_power():
    F = make_field(3, 2)
    with pytest.raises(ValueError):
        artin_schreier_solve(F.one, 4, F)


def test_kernel_in_extension():
    inst = make_instance(2, 3, 1, 1)
    A = make_field(2, 6)
    K = lp_kernel(build_La(inst), A)
    assert K.size == 4  # q^2
