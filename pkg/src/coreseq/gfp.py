"""Dense exact linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced mod p.  Everything is
plain deterministic Gaussian elimination with vectorized row updates; no
probabilistic shortcuts, so ranks and kernels are exact by construction.
Products stay far below int64 overflow for the small primes used here.
"""

from __future__ import annotations

import numpy as np


def normalize(A, p: int):
    return np.asarray(A, dtype=np.int64) % p


def identity(n: int):
    return np.eye(n, dtype=np.int64)


def matmul(A, B, p: int):
    # float64 BLAS is exact while every dot product stays below 2**53
    inner = A.shape[1] if A.ndim == 2 else A.shape[0]
    if (p - 1) * (p - 1) * max(inner, 1) < 2 ** 53:
        C = np.asarray(A, dtype=np.float64) @ np.asarray(B, dtype=np.float64)
        return C.astype(np.int64) % p
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % p


def matpow(A, k: int, p: int):
    n = A.shape[0]
    result = identity(n)
    base = np.asarray(A, dtype=np.int64) % p
    while k:
        if k & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p) if k > 1 else base
        k >>= 1
    return result


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def rref(A, p: int):
    """Reduced row-echelon form.

    Returns (R, pivot_cols); rank = len(pivot_cols).
    """
    R = normalize(A, p).copy()
    m, n = R.shape
    pivots = []
    prow = 0
    for col in range(n):
        if prow >= m:
            break
        nz = np.nonzero(R[prow:, col])[0]
        if nz.size == 0:
            continue
        sel = prow + int(nz[0])
        if sel != prow:
            R[[prow, sel]] = R[[sel, prow]]
        R[prow] = (R[prow] * _inv_mod(R[prow, col], p)) % p
        rows = np.nonzero(R[:, col])[0]
        rows = rows[rows != prow]
        if rows.size:
            R[rows] = (R[rows] - np.outer(R[rows, col], R[prow])) % p
        pivots.append(col)
        prow += 1
    return R, pivots


def rank(A, p: int) -> int:
    """Rank by forward elimination only (cheaper than full rref)."""
    R = normalize(A, p).copy()
    m, n = R.shape
    prow = 0
    for col in range(n):
        if prow >= m:
            break
        nz = np.nonzero(R[prow:, col])[0]
        if nz.size == 0:
            continue
        sel = prow + int(nz[0])
        if sel != prow:
            R[[prow, sel]] = R[[sel, prow]]
        R[prow] = (R[prow] * _inv_mod(R[prow, col], p)) % p
        below = prow + 1 + np.nonzero(R[prow + 1:, col])[0]
        if below.size:
            R[below] = (R[below] - np.outer(R[below, col], R[prow])) % p
        prow += 1
    return prow


def nullspace(A, p: int, with_free=False):
    """Columns form a basis of the right kernel (free columns set to 1).

    The rows of the basis at the free-column indices form an identity
    block, so coordinates of any kernel vector in this basis are just its
    entries at those indices; pass ``with_free=True`` to get them.
    """
    A = normalize(A, p)
    n = A.shape[1]
    R, pivots = rref(A, p)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    K = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        K[f, k] = 1
        for r, col in enumerate(pivots):
            K[col, k] = (-R[r, f]) % p
    if with_free:
        return K, free
    return K


def solve_right(A, B, p: int):
    """Canonical X with A X = B (free variables zero), or None."""
    A = normalize(A, p)
    B = normalize(B, p)
    if B.ndim == 1:
        B = B[:, None]
    n = A.shape[1]
    aug = np.hstack([A, B])
    R, pivots = rref(aug, p)
    if any(c >= n for c in pivots):
        return None
    X = np.zeros((n, B.shape[1]), dtype=np.int64)
    for r, col in enumerate(pivots):
        X[col] = R[r, n:]
    return X


def inv(A, p: int):
    X = solve_right(A, identity(A.shape[0]), p)
    if X is None:
        raise ValueError("matrix is singular mod p")
    return X
