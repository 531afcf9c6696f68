"""Dense linear algebra over the prime field GF(p).

Matrices are numpy int64 arrays with entries in [0, p).  Sizes here are
tiny (at most a few dozen rows), so plain Gauss-Jordan elimination is
used throughout.
"""
import itertools

import numpy as np


def rref(A, p):
    """Reduced row echelon form of A over GF(p); returns (R, pivot_columns)."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        for j in range(rows):
            if j != r and R[j, c]:
                R[j] = (R[j] - R[j, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, p):
    return len(rref(A, p)[1])


def nullspace(A, p):
    """Basis of {x : A x = 0} as the rows of the returned array."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for r, pc in enumerate(pivots):
            basis[b, pc] = (-R[r, fc]) % p
    return basis


def column_space(A, p):
    """Basis of the column space of A, as rows."""
    R, pivots = rref(np.asarray(A, dtype=np.int64).T, p)
    return R[: len(pivots)]


def solve(A, b, p):
    """One solution x of A x = b over GF(p), or None if inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    rows, cols = A.shape
    aug = np.concatenate([A, np.asarray(b, dtype=np.int64).reshape(rows, 1)], axis=1)
    R, pivots = rref(aug, p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, cols]
    return x


def span(basis, p):
    """All p^len(basis) GF(p)-combinations of the basis rows."""
    basis = np.asarray(basis, dtype=np.int64)
    if basis.ndim != 2 or basis.shape[0] == 0:
        width = basis.shape[1] if basis.ndim == 2 else 0
        return np.zeros((1, width), dtype=np.int64)
    coeffs = np.array(list(itertools.product(range(p), repeat=basis.shape[0])), dtype=np.int64)
    return (coeffs @ basis) % p


def all_vectors(p, e):
    """Every vector of GF(p)^e, row i holding the base-p digits of i (LSB first)."""
    idx = np.arange(p**e, dtype=np.int64)
    return (idx[:, None] // (p ** np.arange(e, dtype=np.int64))[None, :]) % p
