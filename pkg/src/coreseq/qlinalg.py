"""Small exact linear-algebra kernel over the rationals.

Row operations on lists of Fraction; deterministic pivoting (first nonzero
in column order) so every caller gets reproducible canonical output.  A
mod-p nullity prescreen is provided for the guessing sweeps: for an integer
matrix, zero nullity mod p certifies zero nullity over Q, which lets the
expensive exact elimination be skipped on candidates that cannot match.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Q = Fraction

# fixed prime for the nullity prescreen (fits comfortably in native ints)
PRESCREEN_PRIME = 2147483647


def rref(rows):
    """Reduced row-echelon form.

    Args:
        rows: list of rows (lists of Fraction); consumed as a copy.

    Returns:
        (R, pivots): the RREF rows and the list of pivot column indices.
    """
    R = [list(map(Q, r)) for r in rows]
    if not R:
        return R, []
    ncols = len(R[0])
    pivots = []
    prow = 0
    for col in range(ncols):
        sel = None
        for r in range(prow, len(R)):
            if R[r][col]:
                sel = r
                break
        if sel is None:
            continue
        R[prow], R[sel] = R[sel], R[prow]
        inv = 1 / R[prow][col]
        R[prow] = [v * inv for v in R[prow]]
        for r in range(len(R)):
            if r != prow and R[r][col]:
                f = R[r][col]
                R[r] = [a - f * b for a, b in zip(R[r], R[prow])]
        pivots.append(col)
        prow += 1
        if prow == len(R):
            break
    return R, pivots


def solve(A, b):
    """Canonical solution of A x = b over Q, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if not A:
        return []
    ncols = len(A[0])
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Q(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = R[r][ncols]
    return x


def nullspace(A, ncols=None):
    """Canonical nullspace basis of A (list of column vectors).

    Basis vectors correspond to free columns in ascending order, each with a
    1 in its free position.
    """
    if not A:
        n = ncols or 0
        return [[Q(1) if i == j else Q(0) for i in range(n)] for j in range(n)]
    ncols = len(A[0]) if ncols is None else ncols
    R, pivots = rref(A)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for r, col in enumerate(pivots):
            v[col] = -R[r][f]
        basis.append(v)
    return basis


def nullity_is_zero_mod_p(int_rows, ncols, p=PRESCREEN_PRIME):
    """True when the integer matrix has full column rank mod p.

    Sound one-way certificate: rank mod p never exceeds rank over Q, so full
    column rank mod p implies a trivial rational nullspace.  A False return
    is inconclusive.
    """
    R = [[v % p for v in row] for row in int_rows]
    rank = 0
    rows_left = list(range(len(R)))
    for col in range(ncols):
        sel = None
        for idx, r in enumerate(rows_left):
            if R[r][col]:
                sel = idx
                break
        if sel is None:
            return False
        r = rows_left.pop(sel)
        inv = pow(R[r][col], p - 2, p)
        prow = [(v * inv) % p for v in R[r]]
        for rr in rows_left:
            f = R[rr][col]
            if f:
                R[rr] = [(a - f * b) % p for a, b in zip(R[rr], prow)]
        rank += 1
        if rank == ncols:
            return True
    return rank == ncols


def integer_rows(rows):
    """Clear denominators row by row; returns integer rows (list of lists).

    Used to feed the prescreen; each row is scaled independently, which
    preserves both the row space and the nullspace.
    """
    out = []
    for row in rows:
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def primitive_integer_vector(vec, sign_index=None):
    """Scale a rational vector to coprime integers with a deterministic sign.

    The entry at ``sign_index`` (default: first nonzero) is made positive.
    """
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    if sign_index is None:
        sign_index = next((i for i, v in enumerate(ints) if v), None)
    if sign_index is not None and ints[sign_index] < 0:
        ints = [-v for v in ints]
    return ints


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[Q(0)] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if not a:
                continue
            Bt = B[t]
            for j in range(m):
                row[j] += a * Bt[j]
    return out


def identity(n):
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def kron(A, B):
    if not A or not B:
        return []
    n, m = len(A), len(A[0])
    p, q = len(B), len(B[0])
    out = [[Q(0)] * (m * q) for _ in range(n * p)]
    for i in range(n):
        for j in range(m):
            a = A[i][j]
            if not a:
                continue
            for r in range(p):
                for c in range(q):
                    out[i * p + r][j * q + c] = a * B[r][c]
    return out


def charpoly(A):
    """Monic characteristic polynomial of a rational square matrix by the
    Faddeev-LeVerrier recurrence; coefficients returned lowest degree first
    (length n+1, leading 1)."""
    n = len(A)
    if n == 0:
        return [Q(1)]
    coeffs = [Q(0)] * (n + 1)
    coeffs[n] = Q(1)
    M = [row[:] for row in A]
    c = -sum(M[i][i] for i in range(n))
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        for i in range(n):
            M[i][i] += coeffs[n - k + 1]
        M = mat_mul(A, M)
        c = -sum(M[i][i] for i in range(n)) / k
        coeffs[n - k] = c
    return coeffs
