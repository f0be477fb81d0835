"""Eventually linearly recursive sequences with exact closure operations.

A sequence is stored as a recurrence x[n] = c1*x[n-1] + ... + cr*x[n-r]
valid from an explicit threshold, together with the full list of terms
below that threshold (the exception prefix plus the seed window).  The
"eventually" part is therefore literal data, not an inhomogeneous trick.

Closure operations (sum, Hadamard product, partial sums, dilation) build a
certified recurrence first -- product of characteristic polynomials, or the
characteristic polynomial of a Kronecker/power companion matrix -- then run
an exact minimization pass.  The minimization is not heuristic: a smaller
candidate recurrence is accepted only when a finite window check proves it
is implied by the certified one (the difference sequence solves the big
recurrence, so vanishing on one full window forces it to vanish forever).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qlinalg
from .errors import IntegrityError, ParseError
from .ring import UniPoly, unipoly_gcd

Q = Fraction

_MIN_MARGIN = 8


@dataclass(frozen=True)
class CFiniteSeq:
    """Recurrence coefficients (c1..cr), threshold, and explicit prefix.

    Invariants: len(prefix) == valid_from >= order, so term(n) for
    n >= valid_from is fully determined by the recurrence.
    """

    coeffs: tuple
    valid_from: int
    prefix: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))
        object.__setattr__(self, "prefix", tuple(Q(v) for v in self.prefix))
        if self.valid_from != len(self.prefix):
            raise ValueError("prefix must list exactly the terms below valid_from")
        if self.valid_from < self.order:
            raise ValueError("valid_from must be at least the order")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_recurrence(cls, coeffs, prefix, valid_from=None) -> "CFiniteSeq":
        prefix = tuple(prefix)
        if valid_from is None:
            valid_from = len(prefix)
        return cls(tuple(coeffs), valid_from, prefix)

    @classmethod
    def constant(cls, v) -> "CFiniteSeq":
        return cls((Q(1),), 1, (Q(v),))

    @classmethod
    def geometric(cls, ratio, first=1) -> "CFiniteSeq":
        return cls((Q(ratio),), 1, (Q(first),))

    @classmethod
    def delta(cls) -> "CFiniteSeq":
        """1, 0, 0, ... (an eventually-zero sequence of order 0)."""
        return cls((), 1, (Q(1),))

    @classmethod
    def zero(cls) -> "CFiniteSeq":
        return cls((), 0, ())

    def term(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("negative index")
        if n < self.valid_from:
            return self.prefix[n]
        window = list(self.prefix[self.valid_from - self.order:self.valid_from]) \
            if self.order else []
        for _ in range(self.valid_from, n + 1):
            nxt = sum((c * window[-i] for i, c in enumerate(self.coeffs, 1)), Q(0))
            window.append(nxt)
            if len(window) > self.order:
                window.pop(0)
        return window[-1] if window else Q(0)

    def terms(self, count: int):
        out = list(self.prefix[:count])
        if self.order == 0:
            out.extend([Q(0)] * (count - len(out)))
            return out
        while len(out) < count:
            n = len(out)
            out.append(sum((c * out[n - i] for i, c in enumerate(self.coeffs, 1)), Q(0)))
        return out

    def char_poly(self) -> UniPoly:
        """x^r - c1 x^(r-1) - ... - cr, lowest degree first."""
        cs = [-c for c in reversed(self.coeffs)] + [Q(1)]
        return UniPoly(cs)

    def companion(self):
        """Matrix advancing the state (x[n], ..., x[n+r-1])."""
        r = self.order
        M = [[Q(0)] * r for _ in range(r)]
        for i in range(r - 1):
            M[i][i + 1] = Q(1)
        for i, c in enumerate(self.coeffs, 1):
            M[r - 1][r - i] = c
        return M

    def agrees_with(self, other: "CFiniteSeq", count: int) -> bool:
        return self.terms(count) == other.terms(count)

    def to_text(self) -> str:
        rec = ",".join(str(c) for c in self.coeffs)
        pre = ",".join(str(v) for v in self.prefix)
        return f"rec: {rec}; from: {self.valid_from}; prefix: {pre}"


def parse_cfinite(text: str) -> CFiniteSeq:
    """Parse the phrase form ``rec: c1,c2; from: k; prefix: v0,v1,...``."""
    fields = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise ParseError(f"expected 'key: values' in {part!r}")
        key, _, val = part.partition(":")
        fields[key.strip()] = val.strip()
    missing = {"rec", "from", "prefix"} - set(fields)
    if missing:
        raise ParseError(f"missing fields {sorted(missing)} in sequence literal")

    def csv(s):
        s = s.strip()
        if not s:
            return []
        return [Q(tok.strip()) for tok in s.split(",")]

    return CFiniteSeq(tuple(csv(fields["rec"])), int(fields["from"]),
                      tuple(csv(fields["prefix"])))


# ---------------------------------------------------------------------------
# minimization with an exact implication certificate
# ---------------------------------------------------------------------------

def _certified(seq: CFiniteSeq, cand_coeffs, cand_valid_from: int) -> bool:
    """Prove the candidate recurrence holds for all n >= cand_valid_from.

    The defect sequence y[m] = x[m+s] - sum(cand) solves seq's certified
    recurrence, so checking y on one window of length order(seq) past both
    thresholds proves it vanishes identically.
    """
    s = len(cand_coeffs)
    w0 = max(cand_valid_from - s, 0)
    hi = max(w0, seq.valid_from) + seq.order
    need = hi + s + 1
    xs = seq.terms(need)
    for m in range(w0, hi + 1):
        y = xs[m + s] - sum((c * xs[m + s - i] for i, c in enumerate(cand_coeffs, 1)),
                            Q(0))
        if y:
            return False
    return True


def minimize(seq: CFiniteSeq) -> CFiniteSeq:
    """Smaller recurrence provably generating the same sequence.

    Finds the minimal order that fits past the current threshold, walks the
    threshold down while those coefficients keep holding, and accepts only
    with the implication certificate; soundness never rests on the window
    size.
    """
    if seq.order == 0:
        return seq
    from .guessing import _consistent_recurrence
    count = seq.valid_from + 2 * seq.order + _MIN_MARGIN + 4
    data = seq.terms(count)
    vf = seq.valid_from
    found = None
    for r in range(1, seq.order + 1):
        sol = _consistent_recurrence(data, r, vf)
        if sol is not None:
            found = (r, tuple(sol))
            break
    if found is None:
        return seq
    r, sol = found
    n = vf + r
    while n - 1 >= r and data[n - 1] == sum(
            (c * data[n - 1 - i] for i, c in enumerate(sol, 1)), Q(0)):
        n -= 1
    cand_vf = max(n, r)
    if (r, cand_vf) >= (seq.order, seq.valid_from):
        return seq
    if not _certified(seq, sol, cand_vf):
        return seq
    return CFiniteSeq(sol, cand_vf, tuple(data[:cand_vf]))


def _verify_against(result: CFiniteSeq, reference_terms, what: str):
    got = result.terms(len(reference_terms))
    if got != list(reference_terms):
        raise IntegrityError(f"{what}: constructed recurrence disagrees with "
                             f"direct computation")


# ---------------------------------------------------------------------------
# closure operations
# ---------------------------------------------------------------------------

def add(a: CFiniteSeq, b: CFiniteSeq) -> CFiniteSeq:
    """Termwise sum; certified by the product of characteristic polynomials."""
    qa, qb = a.char_poly(), b.char_poly()
    qprod = qa * qb
    R = qprod.degree
    m0 = max(a.valid_from - a.order, b.valid_from - b.order)
    vf = m0 + R
    need = vf + 4 * max(R, 1) + 4
    ref = [x + y for x, y in zip(a.terms(need), b.terms(need))]
    out = CFiniteSeq(_rec_from_char(qprod), vf, tuple(ref[:vf]))
    _verify_against(out, ref, "add")
    return minimize(out)


def hadamard(a: CFiniteSeq, b: CFiniteSeq) -> CFiniteSeq:
    """Termwise product; certified by the Kronecker-product companion matrix."""
    if a.order == 0 or b.order == 0:
        vf = a.valid_from if a.order == 0 else b.valid_from
        need = vf + 8
        ref = [x * y for x, y in zip(a.terms(need), b.terms(need))]
        out = CFiniteSeq((), vf, tuple(ref[:vf]))
        _verify_against(out, ref, "hadamard")
        return minimize_zero_tail(out)
    K = qlinalg.kron(a.companion(), b.companion())
    qk = UniPoly(qlinalg.charpoly(K))
    R = qk.degree
    m0 = max(a.valid_from - a.order, b.valid_from - b.order)
    vf = m0 + R
    need = vf + 4 * R + 4
    ref = [x * y for x, y in zip(a.terms(need), b.terms(need))]
    out = CFiniteSeq(_rec_from_char(qk), vf, tuple(ref[:vf]))
    _verify_against(out, ref, "hadamard")
    return minimize(out)


def partial_sums(a: CFiniteSeq) -> CFiniteSeq:
    """b[n] = a[0] + ... + a[n]; multiplies the Hilbert series by 1/(1-t)."""
    qnew = a.char_poly() * UniPoly((-1, 1))
    R = qnew.degree
    vf = max(a.valid_from, R)
    need = vf + 4 * R + 4
    accum, ref = Q(0), []
    for v in a.terms(need):
        accum += v
        ref.append(accum)
    out = CFiniteSeq(_rec_from_char(qnew), vf, tuple(ref[:vf]))
    _verify_against(out, ref, "partial_sums")
    return minimize(out)


def dilate(a: CFiniteSeq, d: int) -> CFiniteSeq:
    """b[n] = a[d*n]; certified by the d-th power of the companion matrix."""
    if d < 1:
        raise ValueError("dilation step must be >= 1")
    if d == 1:
        return a
    if a.order == 0:
        vf = -(-a.valid_from // d)
        src = a.terms(d * (vf + 7) + 1)
        ref = src[::d][:vf + 8]
        out = CFiniteSeq((), vf, tuple(ref[:vf]))
        _verify_against(out, ref, "dilate")
        return minimize_zero_tail(out)
    M = a.companion()
    P = qlinalg.identity(a.order)
    for _ in range(d):
        P = qlinalg.mat_mul(P, M)
    qd = UniPoly(qlinalg.charpoly(P))
    R = qd.degree
    m0 = -(-max(a.valid_from - a.order, 0) // d)
    vf = m0 + R
    need = vf + 4 * R + 4
    ref = a.terms(d * (need - 1) + 1)[::d]
    out = CFiniteSeq(_rec_from_char(qd), vf, tuple(ref[:vf]))
    _verify_against(out, ref, "dilate")
    return minimize(out)


def shift(a: CFiniteSeq, k: int) -> CFiniteSeq:
    """b[n] = a[n+k]."""
    if k < 0:
        raise ValueError("shift must be >= 0")
    vf = max(a.valid_from - k, a.order)
    prefix = tuple(a.term(n + k) for n in range(vf))
    return minimize(CFiniteSeq(a.coeffs, vf, prefix))


def minimize_zero_tail(seq: CFiniteSeq) -> CFiniteSeq:
    """Canonicalize an order-0 sequence by trimming trailing zeros."""
    vf = seq.valid_from
    prefix = list(seq.prefix)
    while prefix and not prefix[-1]:
        prefix.pop()
        vf -= 1
    return CFiniteSeq((), vf, tuple(prefix))


def _rec_from_char(q: UniPoly):
    """Recurrence coefficients (c1..cR) from a monic characteristic poly."""
    if not q.is_zero and q.leading() != 1:
        q = q.scale(1 / q.leading())
    R = q.degree
    return tuple(-q.coeff(R - i) for i in range(1, R + 1))


# ---------------------------------------------------------------------------
# rational generating functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HilbertSeries:
    """Reduced rational generating function with denominator(0) = 1."""

    num: UniPoly
    den: UniPoly

    def __post_init__(self):
        if self.den.is_zero or self.den.coeff(0) != 1:
            raise ValueError("denominator must have constant term 1")

    def expand(self, count: int):
        """First ``count`` power-series coefficients."""
        out = []
        r = self.den.degree
        for n in range(count):
            v = self.num.coeff(n)
            for i in range(1, min(n, r) + 1):
                v -= self.den.coeff(i) * out[n - i]
            out.append(v)
        return out

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        num = self.num * other.den + other.num * self.den
        return _reduced_hilbert(num, self.den * other.den)

    def to_text(self) -> str:
        return f"({self.num.to_text('t')}) / ({self.den.to_text('t')})"


def _reduced_hilbert(num: UniPoly, den: UniPoly) -> HilbertSeries:
    g = unipoly_gcd(num, den)
    if not g.is_zero and g.degree > 0:
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
    c = den.coeff(0)
    if not c:
        raise ValueError("denominator constant term vanished during reduction")
    return HilbertSeries(num.scale(1 / c), den.scale(1 / c))


def hilbert_series(a: CFiniteSeq) -> HilbertSeries:
    """Reduced P/Q whose expansion reproduces every term of ``a``."""
    qden = UniPoly((Q(1),) + tuple(-c for c in a.coeffs))
    bound = max(a.valid_from, 1)
    src = a.terms(bound + a.order)
    # numerator = Q * series; every coefficient at or past the threshold is 0
    pcoeffs = []
    for n in range(bound):
        v = src[n]
        for i in range(1, min(n, qden.degree) + 1):
            v += qden.coeff(i) * src[n - i]
        pcoeffs.append(v)
    h = _reduced_hilbert(UniPoly(pcoeffs), qden)
    check = a.valid_from + 2 * a.order + 4
    if h.expand(check) != a.terms(check):
        raise IntegrityError("hilbert_series: expansion mismatch")
    return h


def from_hilbert(h: HilbertSeries) -> CFiniteSeq:
    """Sequence of power-series coefficients of a reduced rational function."""
    r = h.den.degree
    coeffs = tuple(-h.den.coeff(i) for i in range(1, r + 1))
    vf = max(h.num.degree + 1, r, 0)
    prefix = tuple(h.expand(vf))
    out = CFiniteSeq(coeffs, vf, prefix)
    check = vf + 2 * r + 4
    if out.terms(check) != h.expand(check):
        raise IntegrityError("from_hilbert: expansion mismatch")
    return minimize(out)
