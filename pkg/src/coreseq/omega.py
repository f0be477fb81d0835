"""The tensor calculus for syzygy-algebraic modules.

A tensor system is a list of orbit representatives, a square matrix T over
N[w^+-1] describing what tensoring does to each representative (row i lists
core(M (x) N_i) in the orbit basis, with w standing for the syzygy
operator), and an initial row expressing core(M) itself in that basis.  The
n-th invariant row is initial . T^(n-1), accumulated by row advancement so
every intermediate power comes out of one sweep.

Numeric invariants then contract each row against per-orbit dimension
channels: channel value at exponent e is the dimension (or socle length,
or length) of the e-th syzygy shift of that orbit.  Channels are explicit
data -- a finite prefix plus an optional quasipolynomial tail -- and asking
for an exponent outside their coverage is a hard error, never an
extrapolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import qlinalg
from .cfinite import CFiniteSeq
from .convolve import PolySeqRec, tri_laurent, tri_plain
from .errors import CoverageError, PositivityError
from .guessing import GuessReport, guess_algebraic, guess_cfinite, guess_precursive
from .lmatrix import LMatrix, row_advance
from .quasipoly import QuasiPoly, qp_eval
from .ring import LaurentPoly

Q = Fraction


@dataclass(frozen=True)
class DimensionChannel:
    """Values of one functor along the syzygy tower of one orbit.

    ``forward_prefix[e]`` is the value at shift e >= 0; ``backward_prefix``
    lists shifts -1, -2, ... in order.  Tails, when present, must agree with
    the prefix wherever both apply.
    """

    forward_prefix: tuple = ()
    backward_prefix: tuple = ()
    forward_tail: QuasiPoly | None = None
    backward_tail: QuasiPoly | None = None

    def __post_init__(self):
        object.__setattr__(self, "forward_prefix",
                           tuple(int(v) for v in self.forward_prefix))
        object.__setattr__(self, "backward_prefix",
                           tuple(int(v) for v in self.backward_prefix))
        for v in self.forward_prefix + self.backward_prefix:
            if v < 0:
                raise ValueError("channel values must be nonnegative")
        for prefix, tail, base in ((self.forward_prefix, self.forward_tail, 0),
                                   (self.backward_prefix, self.backward_tail, 1)):
            if tail is None:
                continue
            for k, v in enumerate(prefix):
                idx = base + k
                if idx >= tail.start and qp_eval(tail, idx) != v:
                    raise ValueError("tail disagrees with prefix on their overlap")

    def value(self, e: int, who: str = "orbit") -> int:
        if e >= 0:
            if e < len(self.forward_prefix):
                return self.forward_prefix[e]
            tail = self.forward_tail
            if tail is not None and e >= tail.start:
                return _int_value(qp_eval(tail, e), who, e)
        else:
            k = -e
            if k <= len(self.backward_prefix):
                return self.backward_prefix[k - 1]
            tail = self.backward_tail
            if tail is not None and k >= tail.start:
                return _int_value(qp_eval(tail, k), who, e)
        raise CoverageError(f"{who}: no channel value at shift exponent {e}")


def _int_value(v: Fraction, who: str, e: int) -> int:
    if v.denominator != 1 or v < 0:
        raise CoverageError(f"{who}: tail value {v} at exponent {e} is not a "
                            f"nonnegative integer")
    return int(v)


@dataclass(frozen=True)
class OrbitRep:
    """One syzygy orbit: identifier, display name, named channels."""

    ident: str
    name: str = ""
    channels: dict = field(default_factory=dict)

    def channel(self, name: str) -> DimensionChannel | None:
        return self.channels.get(name)


_KIND_CHANNEL = {"c": "dim", "d": "soc", "l": "len"}

INVARIANT_KINDS = ("c", "s", "d", "l")


@dataclass(frozen=True)
class TensorSystem:
    """Orbit representatives, the tensoring matrix T, and the initial row."""

    orbits: tuple
    matrix: LMatrix
    initial: tuple

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(self.orbits))
        object.__setattr__(self, "initial", tuple(self.initial))
        s = len(self.orbits)
        if self.matrix.size != s or len(self.initial) != s:
            raise ValueError("orbit count, matrix size and initial row must agree")
        for i, row in enumerate(self.matrix.entries):
            for j, e in enumerate(row):
                if not e.is_natural():
                    raise PositivityError(
                        f"matrix entry ({i + 1},{j + 1}) = {e.to_text()} is not in "
                        f"N[w^+-1]")
        for j, e in enumerate(self.initial):
            if not e.is_natural():
                raise PositivityError(
                    f"initial entry {j + 1} = {e.to_text()} is not in N[w^+-1]")
        for orb in self.orbits:
            dim = orb.channel("dim")
            if dim is None:
                raise ValueError(f"orbit {orb.ident}: missing dim channel")
            if dim.value(0, orb.ident) <= 0:
                raise ValueError(f"orbit {orb.ident}: dim at shift 0 must be positive")

    @property
    def size(self) -> int:
        return len(self.orbits)


def core_rows(sys: TensorSystem, count: int):
    """Rows for n = 1..count, by iterated row advancement from the initial."""
    row = [e for e in sys.initial]
    out = [list(row)]
    for _ in range(count - 1):
        row = row_advance(row, sys.matrix)
        out.append(list(row))
    return out


def core_row(sys: TensorSystem, n: int):
    if n < 1:
        raise ValueError("tensor powers are indexed from 1")
    return core_rows(sys, n)[-1]


def invariant_seq(sys: TensorSystem, kind: str, count: int):
    """Invariant values for n = 1..count as plain integers.

    c contracts the dim channel, d the soc channel, l the len channel; s
    needs no channel at all, being the row sum at w = 1 (the syzygy operator
    preserves indecomposability, so every monomial counts one summand).
    """
    if kind not in INVARIANT_KINDS:
        raise ValueError(f"unknown invariant kind {kind!r}")
    rows = core_rows(sys, count)
    if kind == "s":
        return [int(sum((e.eval_one() for e in row), Q(0))) for row in rows]
    channel_name = _KIND_CHANNEL[kind]
    for orb in sys.orbits:
        if orb.channel(channel_name) is None:
            raise CoverageError(
                f"orbit {orb.ident}: kind {kind!r} needs a {channel_name!r} channel")
    out = []
    for row in rows:
        total = 0
        for orb, entry in zip(sys.orbits, row):
            ch = orb.channel(channel_name)
            for e, coeff in entry.items():
                total += int(coeff) * ch.value(e, orb.ident)
        out.append(total)
    return out


def s_recurrence(sys: TensorSystem) -> CFiniteSeq:
    """Certified recurrence for the summand counts, no guessing involved.

    Substituting 1 for the syzygy symbol turns T into an integer matrix A;
    Cayley-Hamilton for A yields a recurrence that provably holds from
    n = size + 1 on.  The returned sequence is 0-based: entry i is the count
    at tensor power i + 1.
    """
    A = sys.matrix.at_one()
    s = sys.size
    char = qlinalg.charpoly(A)
    coeffs = tuple(-char[s - i] for i in range(1, s + 1))
    svals = invariant_seq(sys, "s", max(s, 1))
    return CFiniteSeq(coeffs, s, tuple(Q(v) for v in svals[:s]))


def omega_classify(sys: TensorSystem) -> str:
    """plus / minus / neither, by the exponent signs in T and the initial."""
    exps = []
    for row in sys.matrix.entries:
        for e in row:
            exps.extend(e.support())
    for e in sys.initial:
        exps.extend(e.support())
    if all(x >= 0 for x in exps):
        return "plus"
    if all(x <= 0 for x in exps):
        return "minus"
    return "neither"


def invariant_guess(sys: TensorSystem, kind: str, count: int,
                    guess_kind: str = "cfinite", **bounds) -> GuessReport:
    """Compute the invariant sequence, then delegate to the guesser.

    For a plus- or minus-classified system a found C-finite report is the
    expected outcome for the dimension invariant; otherwise only an
    algebraic equation is promised, so a C-finite not-found is meaningful
    information rather than a failure.
    """
    terms = invariant_seq(sys, kind, count)
    margin = bounds.get("margin", 8)
    if guess_kind == "cfinite":
        return guess_cfinite(terms, bounds.get("max_order", 12),
                             bounds.get("max_offset", 0), margin)
    if guess_kind == "algebraic":
        return guess_algebraic(terms, bounds.get("deg_t", 10),
                               bounds.get("deg_y", 4), margin)
    if guess_kind in ("prec", "precursive"):
        return guess_precursive(terms, bounds.get("max_order", 3),
                                bounds.get("max_poldeg", 3), margin)
    raise ValueError(f"unknown guess kind {guess_kind!r}")


class _ChannelSeq:
    """Adapter exposing one direction of a channel as a term source."""

    def __init__(self, channel: DimensionChannel, direction: int, who: str):
        self._ch = channel
        self._dir = direction
        self._who = who

    def term(self, k: int) -> Fraction:
        e = k if self._dir >= 0 else -(k + 1)
        return Q(self._ch.value(e, self._who))


def channel_pipeline(channel: DimensionChannel, ps: PolySeqRec, count: int,
                     guess_kind: str = "cfinite", who: str = "channel",
                     **bounds) -> GuessReport:
    """Functor values along a polynomial schedule of syzygy shifts.

    Computes n -> sum of channel values prescribed by the n-th polynomial
    (forward values for nonnegative exponents, backward for negative), then
    guesses structure.  Ordinary schedules expect a C-finite result; Laurent
    ones only an algebraic one.
    """
    fwd = _ChannelSeq(channel, +1, who)
    if ps.is_ordinary():
        terms = tri_plain(ps, fwd, count)
    else:
        terms = tri_laurent(ps, fwd, _ChannelSeq(channel, -1, who), count)
    margin = bounds.get("margin", 8)
    if guess_kind == "cfinite":
        return guess_cfinite(terms, bounds.get("max_order", 12),
                             bounds.get("max_offset", 0), margin)
    if guess_kind == "algebraic":
        return guess_algebraic(terms, bounds.get("deg_t", 10),
                               bounds.get("deg_y", 4), margin)
    return guess_precursive(terms, bounds.get("max_order", 3),
                            bounds.get("max_poldeg", 3), margin)


@dataclass(frozen=True)
class GammaEstimate:
    """Growth-rate report: float ratio plus the exact witness matrix."""

    ratio: float
    ratios: tuple
    matrix_at_one: tuple
    char_at_one: tuple

    def describe(self) -> str:
        mono = all(a <= b for a, b in zip(self.ratios, self.ratios[1:])) or \
            all(a >= b for a, b in zip(self.ratios, self.ratios[1:]))
        return (f"ratio {self.ratio:.6f} ({'monotone' if mono else 'not monotone'} "
                f"over the last {len(self.ratios)} steps)")


def gamma_estimate(sys: TensorSystem, count: int) -> GammaEstimate:
    """Successive-ratio growth estimate for the summand counts.

    Only the matrix and its characteristic polynomial are exact; the ratio
    is a plain float and no convergence is claimed beyond reporting the
    recent ratios.
    """
    if count < 4:
        raise ValueError("need at least four terms for a ratio estimate")
    svals = invariant_seq(sys, "s", count)
    ratios = tuple(svals[i] / svals[i - 1] for i in range(1, count)
                   if svals[i - 1])
    A = sys.matrix.at_one()
    char = qlinalg.charpoly(A)
    return GammaEstimate(
        ratio=svals[-1] / svals[-2],
        ratios=ratios[-6:],
        matrix_at_one=tuple(tuple(int(v) for v in row) for row in A),
        char_at_one=tuple(char),
    )


def multiplicity_seq(sys: TensorSystem, orbit_index: int = 0, exponent: int = 0,
                     count: int = 30):
    """Coefficient of one monomial of one row entry across all powers.

    Exposed for inspection: for the worked 3x3 system this is the
    multiplicity of the module itself inside the n-th core, a sequence that
    resists bounded-order recurrence guessing.
    """
    rows = core_rows(sys, count)
    return [int(row[orbit_index].coeff(exponent)) for row in rows]
