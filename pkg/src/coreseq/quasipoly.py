"""Quasipolynomials: periodically interleaved polynomial values.

A quasipolynomial of quasiperiod T is given by polynomials P_0..P_{T-1} and
a validity threshold: value(n) = P_{n mod T}(n) for n >= start.  This is the
shape taken by the dimension channels of syzygy towers, so exact fitting
from finite data and conversion to C-finite form are the two operations
that matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qlinalg
from .cfinite import CFiniteSeq
from .errors import IntegrityError
from .ring import UniPoly

Q = Fraction


@dataclass(frozen=True)
class QuasiPoly:
    """Quasiperiod, one polynomial per residue class, validity threshold."""

    period: int
    polys: tuple
    start: int = 0

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("quasiperiod must be >= 1")
        if len(self.polys) != self.period:
            raise ValueError("need exactly one polynomial per residue class")
        if self.start < 0:
            raise ValueError("start must be >= 0")

    @classmethod
    def constant(cls, v) -> "QuasiPoly":
        return cls(1, (UniPoly.const(v),), 0)


def qp_eval(q: QuasiPoly, n: int) -> Fraction:
    if n < q.start:
        raise ValueError(f"index {n} below quasipolynomial threshold {q.start}")
    return q.polys[n % q.period].eval(n)


def qp_to_cfinite(q: QuasiPoly) -> CFiniteSeq:
    """C-finite form with characteristic polynomial (t^T - 1)^(D+1).

    The polynomials are evaluated below ``start`` as well, which pins a
    definite extension; the result agrees with qp_eval wherever the
    quasipolynomial is defined.
    """
    T = q.period
    D = max(0, max(p.degree for p in q.polys))
    char = UniPoly((-1,) + (0,) * (T - 1) + (1,)) ** (D + 1)
    R = char.degree
    coeffs = tuple(-char.coeff(R - i) for i in range(1, R + 1))
    prefix = tuple(q.polys[n % T].eval(n) for n in range(R))
    out = CFiniteSeq(coeffs, R, prefix)
    window = 3 * T * (D + 2)
    got = out.terms(max(window, q.start + 1))
    for n in range(q.start, len(got)):
        if got[n] != qp_eval(q, n):
            raise IntegrityError("qp_to_cfinite: recurrence deviates from values")
    return out


def qp_fit(samples, t_max: int, d_max: int, n0_max: int):
    """Fit the lexicographically minimal (T, degree, start) quasipolynomial.

    Args:
        samples: (index, value) pairs at consecutive indices.
        t_max, d_max, n0_max: search bounds; the data never fixes these on
            its own, so they are caller parameters.

    Returns:
        The minimal QuasiPoly matching every sample at index >= start, or
        None when nothing within bounds fits.  A candidate is only
        considered when at least T*(degree+2) samples lie at or past its
        threshold, so every residue class retains a consistency check.
    """
    pts = [(int(n), Q(v)) for n, v in samples]
    if not pts:
        return None
    for (n1, _), (n2, _) in zip(pts, pts[1:]):
        if n2 != n1 + 1:
            raise ValueError("samples must sit at consecutive indices")
    first = pts[0][0]
    for T in range(1, t_max + 1):
        for d in range(d_max + 1):
            for n0 in range(n0_max + 1):
                lo = max(n0, first)
                usable = [(n, v) for n, v in pts if n >= lo]
                if len(usable) < T * (d + 2):
                    continue
                polys = _fit_classes(usable, T, d)
                if polys is not None:
                    return QuasiPoly(T, tuple(polys), n0)
    return None


def _fit_classes(usable, T, d):
    polys = []
    for r in range(T):
        cls_pts = [(n, v) for n, v in usable if n % T == r]
        if len(cls_pts) < d + 2:
            return None
        rows = [[Q(n) ** k for k in range(d + 1)] for n, _ in cls_pts]
        rhs = [v for _, v in cls_pts]
        sol = qlinalg.solve(rows, rhs)
        if sol is None:
            return None
        polys.append(UniPoly(sol))
    return polys
