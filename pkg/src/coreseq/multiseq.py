"""Bivariate sequences and generating functions.

Two representations are exercised against each other:

* ``RatBiSeries``  -- a rational function P(t1,t2)/Q(t1,t2) with Q(0,0) = 1,
  expanded exactly by truncated division with a cached block;
* ``CFinite2Seq``  -- a doubly recursive array: one recurrence per axis plus
  an initial block that seeds everything.

Hadamard products of rational bivariate series are deliberately contracted
only on finite blocks: such a product need not be rational at all, and the
diagonal extracted from the block is exactly how the non-rational examples
(central binomial coefficients and friends) are produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qlinalg
from .cfinite import CFiniteSeq, HilbertSeries, _reduced_hilbert
from .errors import BudgetError, IntegrityError, PreconditionError, SingularSubstitutionError
from .ring import BiPoly, UniPoly, bipoly_gcd, bipoly_divmod

Q = Fraction

BLOCK_CAP = 256


def _check_cap(n, cap):
    if n > cap:
        raise BudgetError(f"requested block extent {n} exceeds cap {cap}")


@dataclass(frozen=True)
class RatBiSeries:
    """Reduced bivariate rational function with denominator(0,0) = 1."""

    num: BiPoly
    den: BiPoly

    def __post_init__(self):
        if self.den.coeff(0, 0) != 1:
            raise ValueError("denominator must have constant term 1")
        object.__setattr__(self, "_cache", {})

    @classmethod
    def make(cls, num: BiPoly, den: BiPoly) -> "RatBiSeries":
        """Reduce the fraction and normalize the constant term."""
        if den.coeff(0, 0) == 0:
            raise ValueError("denominator must not vanish at the origin")
        g = bipoly_gcd(num, den)
        if not g.is_zero and (g.degree(0) > 0 or g.degree(1) > 0):
            num = bipoly_divmod(num, g)[0]
            den = bipoly_divmod(den, g)[0]
        c = den.coeff(0, 0)
        return cls(num.scale(1 / c), den.scale(1 / c))

    def coeff(self, m: int, n: int) -> Fraction:
        cache = self._cache
        key = (m, n)
        if key in cache:
            return cache[key]
        for i in range(m + 1):
            for j in range(n + 1):
                if (i, j) in cache:
                    continue
                v = self.num.coeff(i, j)
                for (a, b), qc in self.den.items():
                    if (a, b) != (0, 0) and a <= i and b <= j:
                        v -= qc * cache[(i - a, j - b)]
                cache[(i, j)] = v
        return cache[key]

    def to_text(self) -> str:
        return f"({self.num.to_text()}) / ({self.den.to_text()})"


def ratbiseries_parse(text: str) -> RatBiSeries:
    """Parse ``(P) / (Q)`` with bivariate literals in t1, t2."""
    from .errors import ParseError
    from .ring import bipoly_parse
    stripped = text.strip()
    depth = 0
    split_at = None
    for i, ch in enumerate(stripped):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            split_at = i
            break
    if split_at is None:
        raise ParseError("expected '(numerator) / (denominator)'")

    def unwrap(part):
        part = part.strip()
        if not (part.startswith("(") and part.endswith(")")):
            raise ParseError(f"expected a parenthesized polynomial, got {part!r}")
        return part[1:-1]

    num = bipoly_parse(unwrap(stripped[:split_at]))
    den = bipoly_parse(unwrap(stripped[split_at + 1:]))
    return RatBiSeries.make(num, den)


@dataclass(frozen=True)
class CFinite2Seq:
    """Per-axis recurrences with thresholds, plus a seeding block.

    ``coeffs1`` drives a[m][n] = sum(c[i] * a[m-i][n]) for m >= valid1 (any
    n), ``coeffs2`` the same along the second axis.  The block must span at
    least max(valid, order) in each direction; construction verifies both
    recurrences inside the block and on a cross-extension band, so an
    inconsistent block is rejected immediately.
    """

    coeffs1: tuple
    valid1: int
    coeffs2: tuple
    valid2: int
    block: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs1", tuple(Q(c) for c in self.coeffs1))
        object.__setattr__(self, "coeffs2", tuple(Q(c) for c in self.coeffs2))
        object.__setattr__(self, "block",
                           tuple(tuple(Q(v) for v in row) for row in self.block))
        r1, r2 = len(self.coeffs1), len(self.coeffs2)
        H = len(self.block)
        W = len(self.block[0]) if H else 0
        if any(len(row) != W for row in self.block):
            raise ValueError("block must be rectangular")
        if H < max(self.valid1, r1) or W < max(self.valid2, r2):
            raise ValueError("block too small for the declared recurrences")
        for m in range(self.valid1, H):
            for n in range(W):
                want = sum((c * self.block[m - i][n]
                            for i, c in enumerate(self.coeffs1, 1)), Q(0))
                if self.block[m][n] != want:
                    raise IntegrityError("axis-1 recurrence fails inside block")
        for m in range(H):
            for n in range(self.valid2, W):
                want = sum((c * self.block[m][n - j]
                            for j, c in enumerate(self.coeffs2, 1)), Q(0))
                if self.block[m][n] != want:
                    raise IntegrityError("axis-2 recurrence fails inside block")
        # cross-extension consistency: both fill orders must agree
        probe = self.expand(H + r1 + 2, W + r2 + 2)
        for m in range(len(probe)):
            for n in range(self.valid2, len(probe[0])):
                want = sum((c * probe[m][n - j]
                            for j, c in enumerate(self.coeffs2, 1)), Q(0))
                if probe[m][n] != want:
                    raise IntegrityError("axis recurrences disagree on extension")

    @property
    def order1(self) -> int:
        return len(self.coeffs1)

    @property
    def order2(self) -> int:
        return len(self.coeffs2)

    def expand(self, rows: int, cols: int):
        """Dense block of values, rows x cols, extended row-first."""
        H = len(self.block)
        W = len(self.block[0]) if H else 0
        out = [list(r[:cols]) for r in self.block[:rows]]
        for row in out:
            while len(row) < cols:
                n = len(row)
                row.append(sum((c * row[n - j]
                                for j, c in enumerate(self.coeffs2, 1)), Q(0)))
        for m in range(len(out), rows):
            row = [sum((c * out[m - i][n] for i, c in enumerate(self.coeffs1, 1)), Q(0))
                   for n in range(cols)]
            out.append(row)
        return out

    def coeff(self, m: int, n: int) -> Fraction:
        return self.expand(m + 1, n + 1)[m][n]


def _term_source(x):
    if isinstance(x, (RatBiSeries, CFinite2Seq)):
        return x.coeff
    raise TypeError("expected a RatBiSeries or CFinite2Seq")


def bi_coeff(h, m: int, n: int) -> Fraction:
    """Coefficient of t1^m t2^n in the power-series expansion."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    return _term_source(h)(m, n)


def block_of(h, rows: int, cols: int, cap: int = BLOCK_CAP):
    _check_cap(max(rows, cols), cap)
    if isinstance(h, CFinite2Seq):
        return h.expand(rows, cols)
    return [[h.coeff(m, n) for n in range(cols)] for m in range(rows)]


def cf2_to_rational(a: CFinite2Seq) -> RatBiSeries:
    """Separable-denominator rational form P / (Q1(t1) Q2(t2)).

    Q1, Q2 are the reversed axis characteristic polynomials; multiplying the
    series by them kills everything past the thresholds, which bounds the
    numerator support and is verified on a surrounding margin.
    """
    q1 = UniPoly((Q(1),) + tuple(-c for c in a.coeffs1))
    q2 = UniPoly((Q(1),) + tuple(-c for c in a.coeffs2))
    mbound, nbound = max(a.valid1, 1), max(a.valid2, 1)
    rows = mbound + a.order1 + 2
    cols = nbound + a.order2 + 2
    vals = a.expand(rows, cols)
    terms = {}
    for m in range(rows):
        for n in range(cols):
            v = Q(0)
            for i in range(min(m, q1.degree) + 1):
                qi = q1.coeff(i)
                if not qi:
                    continue
                for j in range(min(n, q2.degree) + 1):
                    qj = q2.coeff(j)
                    if qj:
                        v += qi * qj * vals[m - i][n - j]
            if v:
                if m >= mbound or n >= nbound:
                    raise IntegrityError("numerator support exceeds thresholds")
                terms[(m, n)] = v
    den = BiPoly({(i, 0): q1.coeff(i) for i in range(q1.degree + 1)}) * \
        BiPoly({(0, j): q2.coeff(j) for j in range(q2.degree + 1)})
    out = RatBiSeries.make(BiPoly(terms), den)
    got = block_of(out, 20, 20)
    want = a.expand(20, 20)
    if got != want:
        raise IntegrityError("cf2_to_rational: expansion mismatch")
    return out


def bi_hadamard(a, b, n: int, cap: int = BLOCK_CAP):
    """Termwise product on an n x n block.

    Returns (block, certified) where ``certified`` is a CFinite2Seq built by
    per-axis Kronecker companion constructions when both inputs are
    CFinite2Seq, and None otherwise (the product of merely rational series
    need not be rational, so only block values are contracted).
    """
    _check_cap(n, cap)
    A = block_of(a, n, n, cap)
    B = block_of(b, n, n, cap)
    block = [[x * y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]
    certified = None
    if isinstance(a, CFinite2Seq) and isinstance(b, CFinite2Seq):
        certified = _hadamard_cf2(a, b)
    return block, certified


def _axis_kron(coeffs_a, valid_a, coeffs_b, valid_b):
    sa = _companion(coeffs_a)
    sb = _companion(coeffs_b)
    if not sa or not sb:
        return (), max(valid_a, valid_b)
    K = qlinalg.kron(sa, sb)
    char = qlinalg.charpoly(K)
    R = len(char) - 1
    coeffs = tuple(-char[R - i] for i in range(1, R + 1))
    m0 = max(valid_a - len(coeffs_a), valid_b - len(coeffs_b))
    return coeffs, m0 + R


def _companion(coeffs):
    r = len(coeffs)
    M = [[Q(0)] * r for _ in range(r)]
    for i in range(r - 1):
        M[i][i + 1] = Q(1)
    for i, c in enumerate(coeffs, 1):
        M[r - 1][r - i] = c
    return M


def _hadamard_cf2(a: CFinite2Seq, b: CFinite2Seq) -> CFinite2Seq:
    c1, v1 = _axis_kron(a.coeffs1, a.valid1, b.coeffs1, b.valid1)
    c2, v2 = _axis_kron(a.coeffs2, a.valid2, b.coeffs2, b.valid2)
    H = max(v1, len(c1), 1)
    W = max(v2, len(c2), 1)
    A = a.expand(H + len(c1) + 2, W + len(c2) + 2)
    B = b.expand(H + len(c1) + 2, W + len(c2) + 2)
    prod = [[x * y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]
    block = tuple(tuple(row[:W]) for row in prod[:H])
    return CFinite2Seq(c1, v1, c2, v2, block)


def substitute_one(h: RatBiSeries, axis: int) -> HilbertSeries:
    """Row (or column) sums as a univariate rational function.

    The caller asserts finite support along the summed axis; when the
    reduced denominator vanishes at the origin the series of row sums does
    not exist and a SingularSubstitutionError is raised.
    """
    if axis not in (0, 1):
        raise ValueError("axis must be 0 (set t1 = 1) or 1 (set t2 = 1)")
    num = h.num.substitute_one(axis)
    den = h.den.substitute_one(axis)
    if den.is_zero:
        raise SingularSubstitutionError("denominator vanishes identically at 1")
    from .ring import unipoly_gcd
    g = unipoly_gcd(num, den)
    if not g.is_zero and g.degree > 0:
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
    if not den.coeff(0):
        raise SingularSubstitutionError(
            "substitution is singular: reduced denominator vanishes at 0")
    return _reduced_hilbert(num, den)


def matrix_product(a, row_bound, b: CFiniteSeq, count: int,
                   cap: int = BLOCK_CAP):
    """c[m] = sum_n a[m][n] * b[n] using a caller-supplied row support bound.

    ``a`` may be a CFinite2Seq or a RatBiSeries; ``row_bound(m)`` must bound
    the nonzero support of row m.  A nonzero entry detected shortly past the
    bound raises an IntegrityError, since finiteness of rows is undecidable
    from either representation alone.
    """
    term = _term_source(a)
    slack = a.order2 + 4 if isinstance(a, CFinite2Seq) else 8
    out = []
    for m in range(count):
        bound = int(row_bound(m))
        _check_cap(max(m + 1, bound + slack + 1), cap)
        row = [term(m, n) for n in range(bound + slack + 1)]
        for n in range(bound + 1, bound + slack + 1):
            if row[n]:
                raise IntegrityError(
                    f"row {m}: nonzero entry at column {n} past declared bound {bound}")
        bs = b.terms(bound + 1)
        out.append(sum((row[n] * bs[n] for n in range(bound + 1)), Q(0)))
    return out


def diagonal(h, count: int, cap: int = BLOCK_CAP):
    """First ``count`` diagonal coefficients a[n][n]."""
    _check_cap(count, cap)
    block = block_of(h, count, count, cap)
    return [block[n][n] for n in range(count)]


def algebraic_substitute_one(y_coeffs, axis: int):
    """Set one t-variable to 1 in an algebraic equation sum P_j(t1,t2) y^j.

    The coefficient polynomials are assumed to share no common factor; if
    every coefficient dies under the substitution that assumption was
    violated and a PreconditionError is raised.
    """
    out = [p.substitute_one(axis) for p in y_coeffs]
    if all(p.is_zero for p in out):
        raise PreconditionError(
            "all coefficients vanish at 1; the equation's coefficients share "
            "a common factor")
    return out
