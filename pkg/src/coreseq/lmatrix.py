"""Square matrices over the Laurent-polynomial ring.

Products, powers, row-vector advancement, characteristic polynomials via the
Faddeev-LeVerrier recurrence (which only ever divides by the integers
1..size, staying inside the ring with rational coefficients), and a direct
Cayley-Hamilton verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SizeMismatchError
from .ring import LaurentPoly

Q = Fraction


def _as_entry(v) -> LaurentPoly:
    if isinstance(v, LaurentPoly):
        return v
    return LaurentPoly.const(v)


class LMatrix:
    """A square matrix with LaurentPoly entries; immutable by convention."""

    __slots__ = ("size", "entries")

    def __init__(self, entries):
        rows = [[_as_entry(v) for v in row] for row in entries]
        s = len(rows)
        for row in rows:
            if len(row) != s:
                raise SizeMismatchError("matrix must be square")
        self.size = s
        self.entries = rows

    @classmethod
    def identity(cls, s: int) -> "LMatrix":
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return cls([[one if i == j else zero for j in range(s)] for i in range(s)])

    @classmethod
    def zero(cls, s: int) -> "LMatrix":
        z = LaurentPoly.zero()
        return cls([[z] * s for _ in range(s)])

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, LMatrix):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __repr__(self):
        rows = ["[" + ", ".join(e.to_text() for e in row) + "]" for row in self.entries]
        return "LMatrix([" + "; ".join(rows) + "])"

    def at_one(self):
        """Entrywise substitution w -> 1; returns rows of Fractions."""
        return [[e.eval_one() for e in row] for row in self.entries]

    def trace(self) -> LaurentPoly:
        t = LaurentPoly.zero()
        for i in range(self.size):
            t = t + self.entries[i][i]
        return t

    def scale(self, k) -> "LMatrix":
        return LMatrix([[e.scale(k) for e in row] for row in self.entries])

    def add(self, other: "LMatrix") -> "LMatrix":
        if self.size != other.size:
            raise SizeMismatchError(f"sizes {self.size} and {other.size} differ")
        return LMatrix([[a + b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.entries, other.entries)])

    def add_scalar_diag(self, c: LaurentPoly) -> "LMatrix":
        rows = [row[:] for row in self.entries]
        for i in range(self.size):
            rows[i][i] = rows[i][i] + c
        return LMatrix(rows)


def mat_mul(A: LMatrix, B: LMatrix) -> LMatrix:
    if A.size != B.size:
        raise SizeMismatchError(f"sizes {A.size} and {B.size} differ")
    s = A.size
    out = []
    for i in range(s):
        row = []
        for j in range(s):
            acc = LaurentPoly.zero()
            for k in range(s):
                a = A.entries[i][k]
                if a.is_zero:
                    continue
                b = B.entries[k][j]
                if b.is_zero:
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return LMatrix(out)


def mat_pow(A: LMatrix, n: int) -> LMatrix:
    """A**n by binary exponentiation; n = 0 gives the identity."""
    if n < 0:
        raise ValueError("negative matrix power")
    result = LMatrix.identity(A.size)
    base = A
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if n > 1 else base
        n >>= 1
    return result


def row_advance(v, A: LMatrix):
    """One step of v -> v . A for a row vector of LaurentPoly.

    Iterating n times from the i-th unit row yields row i of A**n; this is
    the cheap path when every intermediate power is needed.
    """
    v = [_as_entry(x) for x in v]
    if len(v) != A.size:
        raise SizeMismatchError(f"row length {len(v)} does not match size {A.size}")
    out = []
    for j in range(A.size):
        acc = LaurentPoly.zero()
        for k in range(A.size):
            x = v[k]
            if x.is_zero:
                continue
            a = A.entries[k][j]
            if a.is_zero:
                continue
            acc = acc + x * a
        out.append(acc)
    return out


@dataclass(frozen=True)
class LCharPoly:
    """Monic characteristic polynomial; coeffs[k] multiplies x^k."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> LaurentPoly:
        return self.coeffs[k]

    def at_one(self):
        """List of Fractions: the characteristic polynomial at w = 1."""
        return [c.eval_one() for c in self.coeffs]

    def to_text(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            xpart = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c == LaurentPoly.one() and k > 0:
                body = xpart
            else:
                body = f"({c.to_text()})" + (f"*{xpart}" if xpart else "")
            parts.append(body)
        return " + ".join(parts) if parts else "0"


def char_poly(A: LMatrix) -> LCharPoly:
    """Characteristic polynomial by Faddeev-LeVerrier.

    Only exact divisions by the integers 1..size occur, so no
    rational-function arithmetic is ever needed.
    """
    s = A.size
    coeffs = [LaurentPoly.zero() for _ in range(s + 1)]
    coeffs[s] = LaurentPoly.one()
    if s == 0:
        return LCharPoly(tuple(coeffs))
    M = A
    coeffs[s - 1] = M.trace().scale(-1)
    for k in range(2, s + 1):
        M = mat_mul(A, M.add_scalar_diag(coeffs[s - k + 1]))
        coeffs[s - k] = M.trace().scale(Q(-1, k))
    return LCharPoly(tuple(coeffs))


def cayley_hamilton_check(A: LMatrix) -> bool:
    """Substitute A into char_poly(A) and test for the zero matrix."""
    cp = char_poly(A)
    s = A.size
    acc = LMatrix.zero(s)
    # Horner evaluation: (((1*A + c_{s-1}) * A + c_{s-2}) * A + ...) + c_0
    acc = acc.add_scalar_diag(cp.coeffs[s])
    for k in range(s - 1, -1, -1):
        acc = mat_mul(acc, A).add_scalar_diag(cp.coeffs[k])
    return acc.is_zero()
