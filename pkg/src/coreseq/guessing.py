"""Exact structure detection from finite data.

Three guessers share one shape: sweep candidate sizes in a fixed minimality
order, set up an exact linear system over Q, and accept a candidate only if
the relation holds on every supplied index.  A candidate is *eligible* only
when the number of equations exceeds the number of unknowns by at least
``margin``: with no surplus an underdetermined or square system can "fit"
pure noise, so the margin is what makes a found verdict meaningful.  Reports
carry both the fitted and the surplus window so callers can demand more.

not-found is a value, not an error: several of the pipelines feeding these
guessers are only guaranteed to produce algebraic (or P-recursive) data, so
a failed C-finite search is an expected, informative outcome.

All sweeps and normalizations are deterministic: identical input yields an
identical report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import qlinalg
from .errors import InsufficientTermsError
from .ring import UniPoly

Q = Fraction

DEFAULT_MARGIN = 8


def _fractions(terms):
    return [t if isinstance(t, Fraction) else Fraction(t) for t in terms]


@dataclass(frozen=True)
class GuessReport:
    """Outcome of one guessing run.

    ``fit_window``/``verify_window`` are half-open index ranges: the solve
    window that determined the parameters, and the surplus indices on which
    the relation was additionally confirmed.  When status is ``found`` the
    relation holds exactly on both.
    """

    kind: str                       # cfinite | algebraic | precursive
    status: str                     # found | not-found-within-bounds
    order: int = 0                  # cfinite / precursive
    offset: int = 0                 # cfinite
    coeffs: tuple = ()              # cfinite: (c1..cr)
    deg_y: int = 0                  # algebraic
    deg_t: int = 0                  # algebraic
    y_coeffs: tuple = ()            # algebraic: UniPoly per power of y
    poldeg: int = 0                 # precursive
    polys: tuple = ()               # precursive: UniPoly p_v, v = 0..order
    fit_window: tuple = (0, 0)
    verify_window: tuple = (0, 0)

    @property
    def found(self) -> bool:
        return self.status == "found"

    def relation_text(self) -> str:
        if not self.found:
            return "(no relation found within bounds)"
        if self.kind == "cfinite":
            return cfinite_relation_text(self.coeffs)
        if self.kind == "algebraic":
            return algebraic_relation_text(self.y_coeffs)
        return precursive_relation_text(self.polys)

    def machine_line(self) -> str:
        if not self.found:
            return f"#none {self.kind} not-found-within-bounds"
        if self.kind == "algebraic":
            return "#eq " + self.relation_text()
        return "#rec " + self.relation_text()

    def describe(self) -> str:
        head = f"{self.kind}: {self.status}"
        if self.found:
            head += f"; {self.relation_text()}"
            if self.kind == "cfinite" and self.offset:
                head += f" (for n >= {self.offset + self.order})"
        head += (f"; fit window [{self.fit_window[0]},{self.fit_window[1]})"
                 f", verify window [{self.verify_window[0]},{self.verify_window[1]})")
        return head


def cfinite_relation_text(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs, start=1):
        if not c:
            continue
        mag = -c if c < 0 else c
        body = f"x[n-{i}]" if mag == 1 else f"{mag}*x[n-{i}]"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    rhs = " ".join(parts) if parts else "0"
    return f"x[n] = {rhs}"


def algebraic_relation_text(y_coeffs) -> str:
    parts = []
    for j in range(len(y_coeffs) - 1, -1, -1):
        p = y_coeffs[j]
        if p.is_zero:
            continue
        ypart = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
        body = f"({p.to_text('t')})"
        parts.append(body + (f"*{ypart}" if ypart else ""))
    lhs = " + ".join(parts) if parts else "0"
    return f"{lhs} = 0"


def precursive_relation_text(polys) -> str:
    parts = []
    for v, p in enumerate(polys):
        if p.is_zero:
            continue
        shift = "x[n]" if v == 0 else f"x[n-{v}]"
        parts.append(f"({p.to_text('n')})*{shift}")
    lhs = " + ".join(parts) if parts else "0"
    return f"{lhs} = 0"


# ---------------------------------------------------------------------------
# C-finite recurrences
# ---------------------------------------------------------------------------

def guess_cfinite(terms, max_order: int, max_offset: int = 0,
                  margin: int = DEFAULT_MARGIN) -> GuessReport:
    """Search for the minimal recurrence x[n] = sum(c[i] * x[n-i]).

    Candidates are swept by (order, offset) lexicographically, so the result
    is the minimal-order, then minimal-offset relation that holds at every
    supplied index >= offset + order.

    Args:
        terms: exact sequence values x[0], x[1], ...
        max_order: largest recurrence order tried.
        max_offset: largest exception-prefix length tried.
        margin: required surplus of equations over unknowns; candidates
            without it are skipped, and if no candidate at all is eligible an
            InsufficientTermsError is raised.
    """
    terms = _fractions(terms)
    L = len(terms)
    any_eligible = False
    for r in range(1, max_order + 1):
        for off in range(max_offset + 1):
            if L - off - 2 * r < margin:
                continue
            any_eligible = True
            sol = _consistent_recurrence(terms, r, off)
            if sol is None:
                continue
            return GuessReport(
                kind="cfinite", status="found", order=r, offset=off,
                coeffs=tuple(sol),
                fit_window=(off, min(off + 2 * r, L)),
                verify_window=(min(off + 2 * r, L), L),
            )
    if not any_eligible:
        raise InsufficientTermsError(
            f"{L} terms cannot support any candidate up to order {max_order} "
            f"with offset {max_offset} and margin {margin}")
    return GuessReport(kind="cfinite", status="not-found-within-bounds",
                       fit_window=(0, L), verify_window=(L, L))


def _consistent_recurrence(terms, r, off):
    """Coefficients satisfying x[n] = sum c[i] x[n-i] on every index
    n >= off + r, or None.

    Fast path: solve the square system from the first r equations, then
    verify the rest with early exit; if that block is singular, fall back to
    one full consistency elimination (same answer by uniqueness).
    """
    L = len(terms)
    aug = [[terms[n - i] for i in range(1, r + 1)] + [terms[n]]
           for n in range(off + r, off + 2 * r)]
    R, pivots = qlinalg.rref(aug)
    if r in pivots:
        return None  # the leading square subsystem is already inconsistent
    if pivots == list(range(r)):
        sol = [R[i][r] for i in range(r)]
        for n in range(off + 2 * r, L):
            if terms[n] != sum((c * terms[n - i] for i, c in enumerate(sol, 1)), Q(0)):
                return None
        return sol
    # singular leading block: decide on the full system in one elimination
    rows = [[terms[n - i] for i in range(1, r + 1)] for n in range(off + r, L)]
    rhs = [terms[n] for n in range(off + r, L)]
    return qlinalg.solve(rows, rhs)


# ---------------------------------------------------------------------------
# Algebraic equations for the Hilbert series
# ---------------------------------------------------------------------------

def _series_powers(terms, top):
    """Truncated powers H^0..H^top of the series with the given coefficients."""
    L = len(terms)
    pows = [[Q(0)] * L for _ in range(top + 1)]
    pows[0][0] = Q(1)
    for d in range(1, top + 1):
        prev = pows[d - 1]
        cur = pows[d]
        for a in range(L):
            pa = prev[a]
            if not pa:
                continue
            for b in range(L - a):
                tb = terms[b]
                if tb:
                    cur[a + b] += pa * tb
    return pows


def _canonical_nullvector(rows, ncols):
    """First canonical nullspace vector as primitive integers, or None.

    A mod-p full-column-rank prescreen skips the exact elimination whenever
    it already certifies a trivial nullspace.
    """
    int_rows = qlinalg.integer_rows(rows)
    if qlinalg.nullity_is_zero_mod_p(int_rows, ncols):
        return None
    basis = qlinalg.nullspace(rows, ncols)
    if not basis:
        return None
    return qlinalg.primitive_integer_vector(basis[0])


def guess_algebraic(terms, deg_t: int, deg_y: int,
                    margin: int = DEFAULT_MARGIN) -> GuessReport:
    """Search for a polynomial equation satisfied by the Hilbert series.

    Finds integer-coefficient E(t, y) = sum_j P_j(t) y^j, content 1, with
    E(t, H(t)) = 0 to the full supplied precision, minimal under the
    (deg_y, deg_t) lexicographic sweep.  Sign convention: the first nonzero
    coefficient in (y-power, t-power) order is positive.
    """
    terms = _fractions(terms)
    L = len(terms)
    pows = _series_powers(terms, deg_y)
    any_eligible = False
    for dy in range(1, deg_y + 1):
        for dt in range(deg_t + 1):
            unknowns = (dt + 1) * (dy + 1)
            if L - unknowns < margin:
                continue
            any_eligible = True
            # column order: (j, i) = (y-power, t-power), ascending
            rows = []
            for n in range(L):
                row = []
                for j in range(dy + 1):
                    pj = pows[j]
                    for i in range(dt + 1):
                        row.append(pj[n - i] if i <= n else Q(0))
                rows.append(row)
            vec = _canonical_nullvector(rows, unknowns)
            if vec is None:
                continue
            y_coeffs = []
            for j in range(dy + 1):
                cs = vec[j * (dt + 1):(j + 1) * (dt + 1)]
                y_coeffs.append(UniPoly(cs))
            return GuessReport(
                kind="algebraic", status="found", deg_y=dy, deg_t=dt,
                y_coeffs=tuple(y_coeffs),
                fit_window=(0, min(unknowns, L)),
                verify_window=(min(unknowns, L), L),
            )
    if not any_eligible:
        raise InsufficientTermsError(
            f"{L} terms cannot support any candidate up to bidegree "
            f"({deg_t}, {deg_y}) with margin {margin}")
    return GuessReport(kind="algebraic", status="not-found-within-bounds",
                       fit_window=(0, L), verify_window=(L, L))


# ---------------------------------------------------------------------------
# P-recurrences (polynomial coefficients)
# ---------------------------------------------------------------------------

def guess_precursive(terms, max_order: int, max_poldeg: int,
                     margin: int = DEFAULT_MARGIN) -> GuessReport:
    """Search for sum_v p_v(n) x[n-v] = 0 with polynomial p_v.

    Minimal under (order, then coefficient degree); the relation must hold
    at every supplied index n >= order.
    """
    terms = _fractions(terms)
    L = len(terms)
    any_eligible = False
    for r in range(1, max_order + 1):
        for d in range(max_poldeg + 1):
            unknowns = (r + 1) * (d + 1)
            if (L - r) - unknowns < margin:
                continue
            any_eligible = True
            rows = []
            for n in range(r, L):
                row = []
                npow = [Q(n) ** k for k in range(d + 1)]
                for v in range(r + 1):
                    av = terms[n - v]
                    for k in range(d + 1):
                        row.append(av * npow[k])
                rows.append(row)
            vec = _canonical_nullvector(rows, unknowns)
            if vec is None:
                continue
            polys = []
            for v in range(r + 1):
                cs = vec[v * (d + 1):(v + 1) * (d + 1)]
                polys.append(UniPoly(cs))
            return GuessReport(
                kind="precursive", status="found", order=r, poldeg=d,
                polys=tuple(polys),
                fit_window=(r, min(r + unknowns, L)),
                verify_window=(min(r + unknowns, L), L),
            )
    if not any_eligible:
        raise InsufficientTermsError(
            f"{L} terms cannot support any candidate up to order {max_order}, "
            f"degree {max_poldeg}, margin {margin}")
    return GuessReport(kind="precursive", status="not-found-within-bounds",
                       fit_window=(0, L), verify_window=(L, L))


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def cfinite_report(coeffs, offset: int = 0) -> GuessReport:
    """Wrap an externally known recurrence so it can be verified."""
    coeffs = tuple(_fractions(coeffs))
    return GuessReport(kind="cfinite", status="found", order=len(coeffs),
                       offset=offset, coeffs=coeffs)


def verify_relation(terms, report: GuessReport) -> bool:
    """True iff the report's relation holds at every checkable index."""
    if not report.found:
        return False
    terms = _fractions(terms)
    L = len(terms)
    if report.kind == "cfinite":
        r = report.order
        for n in range(report.offset + r, L):
            if terms[n] != sum((c * terms[n - i] for i, c in enumerate(report.coeffs, 1)),
                               Q(0)):
                return False
        return True
    if report.kind == "precursive":
        r = report.order
        for n in range(r, L):
            acc = Q(0)
            for v, p in enumerate(report.polys):
                acc += p.eval(n) * terms[n - v]
            if acc:
                return False
        return True
    # algebraic
    pows = _series_powers(terms, len(report.y_coeffs) - 1)
    for n in range(L):
        acc = Q(0)
        for j, p in enumerate(report.y_coeffs):
            pj = pows[j]
            for i, c in enumerate(p.coeffs):
                if c and i <= n:
                    acc += c * pj[n - i]
        if acc:
            return False
    return True
