"""Substitution of sequence terms for powers of x in recursive polynomial
sequences (the triangle operation), in three flavors.

* plain:   ordinary polynomials; a_k replaces x^k.
* laurent: a_k replaces x^k for k >= 0, b_k replaces x^(-k-1) for k >= 0.
* multi:   up to three variables; a(s1,..,sl) replaces x1^s1...xl^sl.

Polynomial sequences are represented by their recurrence
P[n+T] = c[T-1] P[n+T-1] + ... + c[0] P[n], valid from a threshold, plus the
initial polynomials; terms are memoized.  Degrees can only grow linearly
along such a recurrence, so each sequence carries a precomputed linear
envelope on its exponent range and a term that escapes it trips an
integrity error rather than silently producing garbage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import BudgetError, IntegrityError, NotOrdinaryError
from .guessing import guess_algebraic, guess_cfinite, guess_precursive
from .ring import LaurentPoly

Q = Fraction

MULTI_TERM_CAP = 500_000


def _term_fn(a):
    """Uniform cached term access: CFiniteSeq-likes, callables, or lists.

    Sequence generators typically cost O(n) per isolated lookup, and the
    substitution sums revisit the same indices constantly, so lookups go
    through a grow-once cache.
    """
    if hasattr(a, "terms"):
        cache = []

        def fn(n):
            if n >= len(cache):
                cache[:] = a.terms(max(n + 1, 2 * len(cache) + 8))
            return cache[n]
        return fn
    if hasattr(a, "term"):
        base, cache = a.term, {}
    elif callable(a):
        base, cache = a, {}
    else:
        base, cache = (lambda n: Q(a[n])), {}

    def fn(n):
        if n not in cache:
            cache[n] = Q(base(n))
        return cache[n]
    return fn


@dataclass(frozen=True)
class PolySeqRec:
    """Laurent-polynomial sequence given by recurrence and initial terms.

    ``coeffs[i]`` multiplies P[n+i] in the step producing P[n+T]; the
    recurrence is used from ``threshold`` on, and ``initials`` must supply
    P[0] .. P[threshold+T-1].
    """

    coeffs: tuple
    initials: tuple
    threshold: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "initials", tuple(self.initials))
        if not self.coeffs:
            raise ValueError("recurrence order must be at least 1")
        if len(self.initials) != self.threshold + len(self.coeffs):
            raise ValueError("need exactly threshold + order initial polynomials")
        object.__setattr__(self, "_cache", list(self.initials))
        object.__setattr__(self, "_envelope", self._compute_envelope())

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def _compute_envelope(self):
        T = self.order
        dup = 0
        dlo = 0
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            dup = max(dup, ceil(c.max_exp() / (T - i)))
            dlo = min(dlo, floor(c.min_exp() / (T - i)))
        eup = max((p.max_exp() - dup * j for j, p in enumerate(self.initials)
                   if not p.is_zero), default=0)
        elo = min((p.min_exp() - dlo * j for j, p in enumerate(self.initials)
                   if not p.is_zero), default=0)
        return dup, eup, dlo, elo

    def term(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative index")
        cache = self._cache
        T = self.order
        while len(cache) <= n:
            m = len(cache) - T  # next term is P[m+T]
            nxt = LaurentPoly.zero()
            for i, c in enumerate(self.coeffs):
                if not c.is_zero:
                    nxt = nxt + c * cache[m + i]
            dup, eup, dlo, elo = self._envelope
            k = len(cache)
            if not nxt.is_zero and (nxt.max_exp() > dup * k + eup
                                    or nxt.min_exp() < dlo * k + elo):
                raise IntegrityError("polynomial term escaped its degree envelope")
            cache.append(nxt)
        return cache[n]

    def is_ordinary(self) -> bool:
        """True when no term can carry a negative exponent."""
        dup, eup, dlo, elo = self._envelope
        return dlo >= 0 and elo >= 0


def polyseq_term(ps: PolySeqRec, n: int) -> LaurentPoly:
    return ps.term(n)


def tri_plain(ps: PolySeqRec, a, count: int):
    """b[n] = sum_k coeff_k(P[n]) * a[k]; ordinary polynomials only."""
    at = _term_fn(a)
    out = []
    for n in range(count):
        poly = ps.term(n)
        if not poly.is_zero and poly.min_exp() < 0:
            raise NotOrdinaryError(
                f"term {n} has a negative exponent; use the Laurent form")
        out.append(sum((c * at(e) for e, c in poly.items()), Q(0)))
    return out


def tri_laurent(ps: PolySeqRec, a, b, count: int):
    """c[n] = sum_{k>=0} coeff_k * a[k] + sum_{k<0} coeff_k * b[-k-1]."""
    at, bt = _term_fn(a), _term_fn(b)
    out = []
    for n in range(count):
        acc = Q(0)
        for e, c in ps.term(n).items():
            acc += c * (at(e) if e >= 0 else bt(-e - 1))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# multi-variable form (up to three variables, ordinary exponents)
# ---------------------------------------------------------------------------

def _mp(terms):
    """Canonical tuple-of-items form of a multivariate polynomial dict."""
    items = terms.items() if hasattr(terms, "items") else terms
    d = {}
    for exps, v in items:
        v = Q(v)
        if v:
            key = tuple(int(e) for e in exps)
            d[key] = d.get(key, Q(0)) + v
            if not d[key]:
                del d[key]
    return tuple(sorted(d.items()))


def _mp_mul(a, b, cap):
    out = {}
    for ea, va in a:
        for eb, vb in b:
            k = tuple(x + y for x, y in zip(ea, eb))
            out[k] = out.get(k, Q(0)) + va * vb
    if len(out) > cap:
        raise BudgetError(f"polynomial with {len(out)} terms exceeds the cap")
    return _mp(out)


def _mp_add(a, b):
    out = dict(a)
    for e, v in b:
        out[e] = out.get(e, Q(0)) + v
    return _mp(out)


def _mp_scale(a, k):
    k = Q(k)
    return _mp({e: v * k for e, v in a}) if k else ()


@dataclass(frozen=True)
class MultiPolySeqRec:
    """Recursive sequence of polynomials in up to three variables."""

    nvars: int
    coeffs: tuple    # each a canonical _mp form
    initials: tuple
    threshold: int = 0
    term_cap: int = MULTI_TERM_CAP

    def __post_init__(self):
        if not 1 <= self.nvars <= 3:
            raise ValueError("between one and three variables are supported")
        object.__setattr__(self, "coeffs", tuple(_mp(c) for c in self.coeffs))
        object.__setattr__(self, "initials", tuple(_mp(p) for p in self.initials))
        if not self.coeffs:
            raise ValueError("recurrence order must be at least 1")
        if len(self.initials) != self.threshold + len(self.coeffs):
            raise ValueError("need exactly threshold + order initial polynomials")
        for poly in self.coeffs + self.initials:
            for exps, _ in poly:
                if len(exps) != self.nvars:
                    raise ValueError("exponent arity mismatch")
                if any(e < 0 for e in exps):
                    raise ValueError("multi-variable form takes ordinary exponents")
        object.__setattr__(self, "_cache", list(self.initials))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def term(self, n: int):
        if n < 0:
            raise ValueError("negative index")
        cache = self._cache
        T = self.order
        while len(cache) <= n:
            m = len(cache) - T
            nxt = ()
            for i, c in enumerate(self.coeffs):
                if c:
                    nxt = _mp_add(nxt, _mp_mul(c, cache[m + i], self.term_cap))
            cache.append(nxt)
        return cache[n]


def tri_multi(ps: MultiPolySeqRec, source, count: int):
    """b[n] = sum over monomials of coeff * source(exponent tuple)."""
    out = []
    for n in range(count):
        acc = Q(0)
        for exps, c in ps.term(n):
            acc += c * Q(source(exps))
        out.append(acc)
    return out


def diagonal_delta(nvars: int, weight=None):
    """Source that is 1 (or weight(i)) on the diagonal and 0 elsewhere."""
    def src(exps):
        first = exps[0]
        if any(e != first for e in exps):
            return Q(0)
        return Q(1) if weight is None else Q(weight(first))
    return src


# ---------------------------------------------------------------------------
# compute-then-guess pipelines
# ---------------------------------------------------------------------------

def tri_then_guess(ps, a, b=None, count: int = 60, kind: str = "cfinite",
                   **bounds):
    """Run the appropriate triangle operation, then the requested guesser.

    ``bounds`` are passed through (max_order, max_offset, deg_t, deg_y,
    max_poldeg, margin) with conservative defaults.
    """
    if isinstance(ps, MultiPolySeqRec):
        terms = tri_multi(ps, a, count)
    elif b is not None:
        terms = tri_laurent(ps, a, b, count)
    elif ps.is_ordinary():
        terms = tri_plain(ps, a, count)
    else:
        raise NotOrdinaryError("Laurent coefficients need an explicit b sequence")
    return guess_terms(terms, kind, **bounds)


def guess_terms(terms, kind: str, **bounds):
    margin = bounds.get("margin", 8)
    if kind == "cfinite":
        return guess_cfinite(terms, bounds.get("max_order", 12),
                             bounds.get("max_offset", 0), margin)
    if kind == "algebraic":
        return guess_algebraic(terms, bounds.get("deg_t", 10),
                               bounds.get("deg_y", 4), margin)
    if kind in ("prec", "precursive"):
        return guess_precursive(terms, bounds.get("max_order", 3),
                                bounds.get("max_poldeg", 3), margin)
    raise ValueError(f"unknown guess kind {kind!r}")
