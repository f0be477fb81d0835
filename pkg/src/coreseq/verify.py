"""The pinned verification suite behind ``coreseq verify paper``.

Ten checks covering the bundled datasets end to end: the cyclic order-7
oracle run, oracle/engine agreement, the 3x3 elementary-abelian system with
its closed-form matrix powers, published prefix recovery, the closure and
triangle-operation property suites, quasipolynomial channel fitting, the
plus-classified recurrence property, and the bivariate suite.  Each check
returns a CheckResult and never raises; the CLI and the pytest acceptance
module both consume this list.

Check 4 records a known failure honestly: the published six-term s10 prefix
is degenerate (it admits an exact order-2 recurrence, x[n] = 6x[n-1] -
5x[n-2], which generates the same infinite sequence as the published
order-3 one from the published seeds), so a minimal-order guesser cannot
return the published coefficients.  The check asserts the published form
anyway and reports the discrepancy rather than loosening the comparison.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import cfinite, convolve, guessing, modrep, multiseq, omega, qlinalg
from .cfinite import CFiniteSeq
from .guessing import cfinite_report, guess_algebraic, guess_cfinite, guess_precursive, verify_relation
from .lmatrix import char_poly, mat_pow
from .quasipoly import qp_fit
from .ring import BiPoly, LaurentPoly, UniPoly, laurent_parse
from .scenario import load_scenario, z3z3_induced_module, z3z3_module

Q = Fraction

C7_C = [2, 4, 8, 16, 32, 57, 114, 193, 386, 639, 1278, 2094, 4188, 6829]
C7_S = [1, 2, 3, 6, 10, 19, 33, 61, 108, 197, 352, 638, 1145, 2069]
PUBLISHED_REC = (Q(0), Q(5), Q(0), Q(-6), Q(0), Q(1))  # x[n] = 5x[n-2] - 6x[n-4] + x[n-6]
S10_TERMS = [1, 4, 19, 94, 469, 2344]
S10_REC = (Q(1), Q(25), Q(-25))
S9_TERMS = [1, 4, 35, 310, 2789, 25096]
S9_REC = (Q(9), Q(1), Q(-9))


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    seconds: float
    lines: list = field(default_factory=list)

    def summary(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag}  {self.number:2d}. {self.title}  [{self.seconds:.2f}s]"


def _run(number, title, fn):
    t0 = time.perf_counter()
    lines = []
    try:
        passed = fn(lines)
    except Exception as exc:  # a crash is a failure, not a stop
        lines.append(f"raised {type(exc).__name__}: {exc}")
        passed = False
    return CheckResult(number, title, bool(passed), time.perf_counter() - t0, lines)


def _char_divides(small: CFiniteSeq | tuple, big: tuple) -> bool:
    """True when the small recurrence's characteristic polynomial divides
    the big one's (so the big relation is an exact consequence)."""
    def char(coeffs):
        return UniPoly([-c for c in reversed(coeffs)] + [Q(1)])
    q_small = char(small.coeffs if hasattr(small, "coeffs") else small)
    q_big = char(big)
    _, rem = q_big.divmod(q_small)
    return rem.is_zero


# ---------------------------------------------------------------------------
# 1. cyclic order-7 end to end
# ---------------------------------------------------------------------------

def check_1(lines) -> bool:
    t0 = time.perf_counter()
    inv = modrep.oracle_invariants(modrep.jordan_module(7, 2), 14, kinds=("c", "s"))
    ok = inv["c"] == C7_C and inv["s"] == C7_S
    lines.append(f"oracle c: {inv['c']}")
    lines.append(f"oracle s: {inv['s']}")
    lines.append(f"pinned lists match (n=13 slot = {inv['c'][12]}): {ok}")
    rep = cfinite_report(PUBLISHED_REC)
    vc = verify_relation(inv["c"], rep)
    vs = verify_relation(inv["s"], rep)
    lines.append(f"published recurrence verifies on all 14 terms: c={vc} s={vs}")
    ok = ok and vc and vs
    gc = guess_cfinite(inv["c"], max_order=6, margin=2)
    exact_c = gc.found and gc.coeffs == PUBLISHED_REC and gc.offset == 0
    lines.append(f"guessed c recurrence: {gc.relation_text()} (exact match: {exact_c})")
    ok = ok and exact_c
    gs = guess_cfinite(inv["s"], max_order=6, margin=2)
    lines.append(f"guessed s recurrence: {gs.relation_text()}")
    implies = gs.found and _char_divides(gs, PUBLISHED_REC)
    lines.append(f"guessed s recurrence implies the published one exactly: {implies}")
    ok = ok and implies
    elapsed = time.perf_counter() - t0
    lines.append(f"runtime {elapsed:.2f}s (< 10s required)")
    return ok and elapsed < 10.0


# ---------------------------------------------------------------------------
# 2. symbolic / oracle agreement for the cyclic system
# ---------------------------------------------------------------------------

def check_2(lines) -> bool:
    sys7 = load_scenario("builtin:c7").system
    eng_c = omega.invariant_seq(sys7, "c", 14)
    eng_s = omega.invariant_seq(sys7, "s", 14)
    inv = modrep.oracle_invariants(modrep.jordan_module(7, 2), 14, kinds=("c", "s"))
    okc, oks = eng_c == inv["c"], eng_s == inv["s"]
    lines.append(f"engine c == oracle c for n <= 14: {okc}")
    lines.append(f"engine s == oracle s for n <= 14: {oks}")
    return okc and oks


# ---------------------------------------------------------------------------
# 3. the 3x3 elementary-abelian system, certified
# ---------------------------------------------------------------------------

def _alpha_table(nmax: int):
    """Third-column coefficient recursion with its initial conditions."""
    alpha = {}
    for k in range(1, nmax + 1):
        for t in range(0, k):
            alpha[(t, k)] = Q(0)
        alpha[(k, k)] = Q(1)
        for n in range(k + 1, nmax + 1):
            acc = Q(0)
            for i in range(0, k + 1):
                w = Q(math.comb(k + 1, i + 1) + 2 * math.comb(k, i))
                prev = alpha.get((n - 1 - i, k), Q(0))
                acc += (-1) ** i * w * prev
            alpha[(n, k)] = acc
    return alpha


def _closed_form_a(m: int) -> LaurentPoly:
    return LaurentPoly({m - 4 * i: math.comb(m, 2 * i)
                        for i in range(m // 2 + 1)})


def _closed_form_b(m: int) -> LaurentPoly:
    return LaurentPoly({m - (4 * i + 2): math.comb(m, 2 * i + 1)
                        for i in range(m // 2 + 1)})


def check_3(lines) -> bool:
    t0 = time.perf_counter()
    scn = load_scenario("builtin:z3z3")
    sysz = scn.system
    ok = True

    cp = char_poly(sysz.matrix)
    expected = [laurent_parse("3*w^-1 - 3*w^3"), laurent_parse("7*w^2 - 1*w^-2"),
                laurent_parse("0 - 5*w"), laurent_parse("1")]
    cp_ok = list(cp.coeffs) == expected
    lines.append(f"characteristic polynomial matches the published cubic: {cp_ok}")
    ok = ok and cp_ok

    P = sysz.matrix
    power = mat_pow(P, 0)
    rows_ok = True
    alpha = _alpha_table(10)
    c_ok = True
    for m in range(0, 13):
        row = power.entries[0]
        if row[0] != _closed_form_a(m) or row[1] != _closed_form_b(m):
            rows_ok = False
        if m <= 10:
            want_c = LaurentPoly({m - (2 * k - 1): alpha[(m, k)]
                                  for k in range(1, m + 1)})
            if row[2] != want_c:
                c_ok = False
        power = mat_pow(P, m + 1)
    lines.append(f"first-row entries match both closed forms for n <= 12: {rows_ok}")
    lines.append(f"third entry satisfies the coefficient recursion for n <= 10: {c_ok}")
    ok = ok and rows_ok and c_ok

    s_vals = omega.invariant_seq(sysz, "s", 8)
    s_ok = s_vals == [3 ** (n - 1) for n in range(1, 9)]
    rec = omega.s_recurrence(sysz)
    rec_ok = [int(v) for v in rec.terms(8)] == s_vals
    lines.append(f"summand counts are 3^(n-1) for n <= 8: {s_ok}; certified "
                 f"recurrence agrees: {rec_ok}")
    ok = ok and s_ok and rec_ok

    M = z3z3_module()
    N = z3z3_induced_module()
    oracle_c = modrep.oracle_invariants(M, 5, kinds=("c",))["c"]
    chans = {"M": modrep.channel_harvest(M, 6),
             "Mdual": modrep.channel_harvest(modrep.dual(M), 6),
             "N": modrep.channel_harvest(N, 6)}
    orbits = []
    for orb in sysz.orbits:
        harvested = chans[orb.ident]
        orbits.append(omega.OrbitRep(ident=orb.ident, name=orb.name,
                                     channels=harvested))
        for cname in ("dim", "soc"):
            want = [orb.channel(cname).value(e) for e in range(-6, 7)]
            got = [harvested[cname].value(e) for e in range(-6, 7)]
            if want != got:
                lines.append(f"builtin {orb.ident}/{cname} disagrees with "
                             f"harvest: {want} vs {got}")
                ok = False
    live = omega.TensorSystem(tuple(orbits), sysz.matrix, sysz.initial)
    eng_c = omega.invariant_seq(live, "c", 5)
    agree = eng_c == oracle_c
    lines.append(f"engine (oracle-harvested channels) c: {eng_c}")
    lines.append(f"oracle c:                            {oracle_c}")
    lines.append(f"exact agreement for n <= 5: {agree}")
    ok = ok and agree

    elapsed = time.perf_counter() - t0
    lines.append(f"runtime {elapsed:.1f}s (< 120s required)")
    return ok and elapsed < 120.0


# ---------------------------------------------------------------------------
# 4. published prefix recovery
# ---------------------------------------------------------------------------

def check_4(lines) -> bool:
    g10 = guess_cfinite(S10_TERMS, max_order=3, margin=0)
    ok10 = g10.found and g10.coeffs == S10_REC
    lines.append(f"s10 prefix guess: {g10.relation_text()}")
    lines.append(f"exact match with the published order-3 coefficients: {ok10}")
    if not ok10 and g10.found:
        rep = cfinite_report(S10_REC)
        lines.append("note: the six published terms are degenerate; they satisfy "
                     "the guessed lower-order recurrence exactly, the published "
                     f"relation also verifies ({verify_relation(S10_TERMS, rep)}), "
                     "and both generate the same infinite sequence from the "
                     "published seeds "
                     f"({_same_extension(g10.coeffs, S10_REC, S10_TERMS)}); a "
                     "minimal-order guesser therefore cannot return the published "
                     "coefficients")
    g9 = guess_cfinite(S9_TERMS, max_order=3, margin=0)
    ok9 = g9.found and g9.coeffs == S9_REC
    lines.append(f"s9 prefix guess: {g9.relation_text()}")
    lines.append(f"exact match with the published order-3 coefficients: {ok9}")
    return ok10 and ok9


def _same_extension(coeffs_a, coeffs_b, seeds, horizon: int = 60) -> bool:
    def extend(coeffs):
        xs = [Q(v) for v in seeds]
        r = len(coeffs)
        while len(xs) < horizon:
            n = len(xs)
            xs.append(sum((c * xs[n - i] for i, c in enumerate(coeffs, 1)), Q(0)))
        return xs
    return extend(coeffs_a) == extend(coeffs_b)


# ---------------------------------------------------------------------------
# 5. closure-operation suite
# ---------------------------------------------------------------------------

def _random_cfinite(rng, max_order=4, rational=True) -> CFiniteSeq:
    r = rng.randint(1, max_order)
    coeffs = []
    for _ in range(r):
        num = rng.randint(-9, 9)
        den = rng.randint(1, 9) if rational else 1
        coeffs.append(Q(num, den))
    if all(c == 0 for c in coeffs):
        coeffs[rng.randrange(r)] = Q(1)
    vf = r + rng.randint(0, 2)
    prefix = [Q(rng.randint(-6, 6)) for _ in range(vf)]
    return CFiniteSeq(tuple(coeffs), vf, tuple(prefix))


def check_5(lines) -> bool:
    rng = random.Random(20260811)
    failures = 0
    for trial in range(100):
        a = _random_cfinite(rng)
        b = _random_cfinite(rng)
        d = rng.randint(1, 3)
        a_long = a.terms(199 * d + 1)
        want_h = [x * y for x, y in zip(a_long[:200], b.terms(200))]
        want_p = []
        acc = Q(0)
        for v in a_long[:200]:
            acc += v
            want_p.append(acc)
        want_d = a_long[::d][:200]
        got_h = cfinite.hadamard(a, b).terms(200)
        got_p = cfinite.partial_sums(a).terms(200)
        got_d = cfinite.dilate(a, d).terms(200)
        if got_h != want_h or got_p != want_p or got_d != want_d:
            failures += 1
    lines.append(f"100 random pairs, order <= 4: hadamard/partial_sums/dilate vs "
                 f"naive on 200 terms; failures = {failures}")
    return failures == 0


# ---------------------------------------------------------------------------
# 6. triangle-operation suites
# ---------------------------------------------------------------------------

def _random_ordinary_polyseq(rng) -> convolve.PolySeqRec:
    order = rng.randint(1, 2)
    def rand_poly(max_terms=2, max_exp=2):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            terms[rng.randint(0, max_exp)] = Q(rng.randint(1, 2))
        return LaurentPoly(terms)
    coeffs = [rand_poly() for _ in range(order)]
    initials = [rand_poly(max_terms=2, max_exp=1) for _ in range(order)]
    return convolve.PolySeqRec(tuple(coeffs), tuple(initials), 0)


def check_6(lines) -> bool:
    rng = random.Random(20260812)
    ok = True
    found_all = True
    for trial in range(50):
        ps = _random_ordinary_polyseq(rng)
        a = _random_cfinite(rng, max_order=3, rational=False)
        data = convolve.tri_plain(ps, a, 100)
        rep = guess_cfinite(data[:60], max_order=16, margin=4)
        if not (rep.found and verify_relation(data, rep)):
            found_all = False
            lines.append(f"trial {trial}: no verified recurrence")
    lines.append(f"50 random ordinary schedules x C-finite inputs: guessed and "
                 f"verified on 40 held-out terms: {found_all}")
    ok = ok and found_all

    ps = convolve.PolySeqRec((laurent_parse("w^-1 + w"),), (laurent_parse("1"),), 0)
    delta = CFiniteSeq.delta()
    zero = CFiniteSeq.zero()
    nine = convolve.tri_laurent(ps, delta, zero, 9)
    want = [Q(v) for v in (1, 0, 2, 0, 6, 0, 20, 0, 70)]
    first_ok = nine == want
    lines.append(f"alternating Laurent schedule against the point mass: first 9 "
                 f"terms = {[int(v) for v in nine]} (expected: {first_ok})")
    data = convolve.tri_laurent(ps, delta, zero, 40)
    rep = guess_algebraic(data, deg_t=2, deg_y=2, margin=2)
    eq_ok = rep.found and _same_equation(rep.y_coeffs,
                                         (UniPoly((-1,)), UniPoly(()),
                                          UniPoly((1, 0, -4))))
    lines.append(f"algebraic guess: {rep.relation_text()} "
                 f"(matches (1 - 4t^2) y^2 - 1 up to scale: {eq_ok})")
    return ok and first_ok and eq_ok


def _same_equation(got, want) -> bool:
    """Equality of y-coefficient lists up to one overall rational scale."""
    got = list(got) + [UniPoly()] * (len(want) - len(got))
    want = list(want) + [UniPoly()] * (len(got) - len(want))
    scale = None
    for g, w in zip(got, want):
        if g.is_zero != w.is_zero:
            return False
        if g.is_zero:
            continue
        if g.degree != w.degree:
            return False
        for cg, cw in zip(g.coeffs, w.coeffs):
            if (cg == 0) != (cw == 0):
                return False
            if cg == 0:
                continue
            s = cg / cw
            if scale is None:
                scale = s
            elif s != scale:
                return False
    return scale is not None


# ---------------------------------------------------------------------------
# 7. multi-variable substitution examples
# ---------------------------------------------------------------------------

def check_7(lines) -> bool:
    ok = True
    sq2 = convolve.MultiPolySeqRec(
        2, ({(2, 0): 1, (1, 1): 2, (0, 2): 1},), ({(0, 0): 1},))
    got = convolve.tri_multi(sq2, convolve.diagonal_delta(2), 13)
    central = [math.comb(2 * n, n) for n in range(13)]
    ok1 = got == [Q(v) for v in central]
    lines.append(f"two-variable diagonal substitution gives the central binomials "
                 f"for n <= 12: {ok1}")

    cube3 = convolve.MultiPolySeqRec(
        3, (_power_poly_3(),), ({(0, 0, 0): 1},))
    got3 = convolve.tri_multi(cube3, convolve.diagonal_delta(3), 13)
    multinom = [math.comb(3 * n, n) * math.comb(2 * n, n) for n in range(13)]
    ok2 = got3 == [Q(v) for v in multinom]
    lines.append(f"three-variable diagonal substitution gives the central "
                 f"multinomials for n <= 12: {ok2}")

    gotsq = convolve.tri_multi(
        sq2, convolve.diagonal_delta(2, weight=lambda i: math.comb(2 * i, i)), 13)
    squares = [math.comb(2 * n, n) ** 2 for n in range(13)]
    ok3 = gotsq == [Q(v) for v in squares]
    lines.append(f"weighted diagonal gives the squared central binomials for "
                 f"n <= 12: {ok3}")
    ok = ok1 and ok2 and ok3

    long_mult = [math.comb(3 * n, n) * math.comb(2 * n, n) for n in range(92)]
    long_sq = [math.comb(2 * n, n) ** 2 for n in range(92)]
    for name, seq in (("central multinomials", long_mult),
                      ("squared central binomials", long_sq)):
        pr = guess_precursive(seq[:30], max_order=2, max_poldeg=2, margin=8)
        pok = pr.found and verify_relation(seq, pr)
        lines.append(f"{name}: verified P-recurrence {pr.relation_text()}: {pok}")
        cf = guess_cfinite(seq[:30], max_order=8, margin=8)
        alg = guess_algebraic(seq, deg_t=8, deg_y=8, margin=8)
        nok = (not cf.found) and (not alg.found)
        lines.append(f"{name}: C-finite (order 8) and algebraic (8,8) searches "
                     f"return not-found: {nok}")
        ok = ok and pok and nok
    pr = guess_precursive(central, max_order=2, max_poldeg=2, margin=4)
    pok = pr.found and verify_relation(central, pr)
    lines.append(f"central binomials: verified P-recurrence "
                 f"{pr.relation_text()}: {pok}")
    return ok and pok


def _power_poly_3():
    out = {}
    for i in range(4):
        for j in range(4 - i):
            k = 3 - i - j
            out[(i, j, k)] = math.factorial(3) // (
                math.factorial(i) * math.factorial(j) * math.factorial(k))
    return out


# ---------------------------------------------------------------------------
# 8. quasipolynomial channels
# ---------------------------------------------------------------------------

def check_8(lines) -> bool:
    t0 = time.perf_counter()
    ch = modrep.channel_harvest(modrep.jordan_module(7, 2), 6)
    dim = ch["dim"]
    fwd, bwd = dim.forward_tail, dim.backward_tail
    ok1 = (fwd is not None and fwd.period == 2
           and all(p.degree <= 0 for p in fwd.polys)
           and [p.eval(0) for p in fwd.polys] == [2, 5])
    ok2 = (bwd is not None and bwd.period == 2
           and all(p.degree <= 0 for p in bwd.polys)
           and sorted(int(p.eval(0)) for p in bwd.polys) == [2, 5])
    lines.append(f"order-7 two-dim module: constant period-2 fits in both "
                 f"directions: {ok1 and ok2}")

    chz = modrep.channel_harvest(z3z3_module(), 8)
    fz, bz = chz["dim"].forward_tail, chz["dim"].backward_tail
    ok3 = (fz is not None and bz is not None
           and max(p.degree for p in fz.polys) <= 1
           and max(p.degree for p in bz.polys) <= 1)
    lines.append(f"six-dim module (depth 8): exact quasipolynomial fits of "
                 f"degree <= 1 both directions: {ok3} "
                 f"(forward fit: T={getattr(fz, 'period', None)})")
    refit = qp_fit(list(enumerate(chz["dim"].forward_prefix)), 4, 1, 8)
    ok4 = refit is not None
    lines.append(f"direct qp_fit on the forward dims succeeds with degree <= 1: "
                 f"{ok4}")
    elapsed = time.perf_counter() - t0
    lines.append(f"runtime {elapsed:.1f}s (< 60s required)")
    return ok1 and ok2 and ok3 and ok4 and elapsed < 60.0


# ---------------------------------------------------------------------------
# 9. plus-classified systems have recursive dimension sequences
# ---------------------------------------------------------------------------

def _random_plus_system(rng) -> omega.TensorSystem:
    from .quasipoly import QuasiPoly
    s = rng.randint(1, 3)
    entries = []
    for i in range(s):
        row = []
        for j in range(s):
            terms = {}
            budget = rng.randint(0, 3)
            while budget > 0:
                e = rng.randint(0, 2)
                c = rng.randint(1, budget)
                terms[e] = terms.get(e, 0) + c
                budget -= c
                if rng.random() < 0.5:
                    break
            row.append(LaurentPoly(terms))
        entries.append(row)
    # keep the system alive: ensure at least one nonzero entry per row
    for i, row in enumerate(entries):
        if all(e.is_zero for e in row):
            entries[i][rng.randrange(s)] = LaurentPoly.one()
    orbits = []
    for j in range(s):
        T = rng.randint(1, 2)
        polys = tuple(UniPoly((rng.randint(1, 4), rng.randint(0, 2)))
                      for _ in range(T))
        fwd = QuasiPoly(T, polys, 0)
        bwd = QuasiPoly(T, polys, 1)
        ch = omega.DimensionChannel(forward_prefix=(), backward_prefix=(),
                                    forward_tail=fwd, backward_tail=bwd)
        orbits.append(omega.OrbitRep(ident=f"N{j+1}", channels={"dim": ch}))
    initial = [LaurentPoly.zero()] * s
    initial[rng.randrange(s)] = LaurentPoly.one()
    from .lmatrix import LMatrix
    return omega.TensorSystem(tuple(orbits), LMatrix(entries), tuple(initial))


def check_9(lines) -> bool:
    rng = random.Random(20260813)
    all_ok = True
    for trial in range(25):
        sysr = _random_plus_system(rng)
        if omega.omega_classify(sysr) != "plus":
            lines.append(f"trial {trial}: generator produced a non-plus system")
            all_ok = False
            continue
        rep = omega.invariant_guess(sysr, "c", 100, "cfinite",
                                    max_order=24, margin=8)
        longer = omega.invariant_seq(sysr, "c", 140)
        ok = rep.found and verify_relation(longer, rep)
        if not ok:
            lines.append(f"trial {trial}: "
                         f"{'no recurrence found' if not rep.found else 'verification failed'} "
                         f"(size {sysr.size})")
            all_ok = False
    lines.append(f"25 random plus-classified systems (size <= 3, quasipolynomial "
                 f"channels): dimension sequence guessed C-finite and verified on "
                 f"40 extra terms: {all_ok}")
    return all_ok


# ---------------------------------------------------------------------------
# 10. bivariate suite
# ---------------------------------------------------------------------------

def _random_cf2(rng) -> multiseq.CFinite2Seq:
    # sum of up to two separable products of short C-finite sequences
    us = [_random_cfinite(rng, max_order=2, rational=False) for _ in range(2)]
    vs = [_random_cfinite(rng, max_order=2, rational=False) for _ in range(2)]
    q1 = us[0].char_poly() * us[1].char_poly()
    q2 = vs[0].char_poly() * vs[1].char_poly()
    c1 = tuple(-q1.coeff(q1.degree - i) for i in range(1, q1.degree + 1))
    c2 = tuple(-q2.coeff(q2.degree - i) for i in range(1, q2.degree + 1))
    v1 = max(u.valid_from - u.order for u in us) + q1.degree
    v2 = max(v.valid_from - v.order for v in vs) + q2.degree
    H = max(v1, len(c1), 1) + 1
    W = max(v2, len(c2), 1) + 1
    urows = [u.terms(H + 8) for u in us]
    vrows = [v.terms(W + 8) for v in vs]
    block = tuple(tuple(urows[0][m] * vrows[0][n] + urows[1][m] * vrows[1][n]
                        for n in range(W)) for m in range(H))
    return multiseq.CFinite2Seq(c1, v1, c2, v2, block)


def check_10(lines) -> bool:
    one = BiPoly.const(1)
    ha = multiseq.RatBiSeries.make(one, BiPoly({(0, 0): 1, (1, 0): -1, (0, 1): -1}))
    hb = multiseq.RatBiSeries.make(one, BiPoly({(0, 0): 1, (1, 1): -1}))
    block, _ = multiseq.bi_hadamard(ha, hb, 26)
    diag = [block[n][n] for n in range(26)]
    off = all(block[m][n] == 0 for m in range(8) for n in range(8) if m != n)
    want5 = [int(v) for v in diag[:5]] == [1, 2, 6, 20, 70]
    lines.append(f"hadamard of the two standard series: diagonal starts "
                 f"{[int(v) for v in diag[:5]]}, off-diagonal zero: {off}")
    rep = guess_algebraic(diag, deg_t=1, deg_y=2, margin=2)
    eq_ok = rep.found and _same_equation(rep.y_coeffs,
                                         (UniPoly((-1,)), UniPoly(()),
                                          UniPoly((1, -4))))
    lines.append(f"diagonal equation: {rep.relation_text()} (matches "
                 f"(1 - 4t) y^2 - 1 up to scale: {eq_ok})")
    hs = multiseq.substitute_one(hb, axis=1)
    sub_ok = hs.num == UniPoly((1,)) and hs.den == UniPoly((1, -1))
    lines.append(f"row sums of the diagonal delta series: {hs.to_text()} "
                 f"(equals 1/(1 - t1): {sub_ok})")
    rng = random.Random(20260814)
    rt_ok = True
    for trial in range(25):
        a = _random_cf2(rng)
        h = multiseq.cf2_to_rational(a)
        got = multiseq.block_of(h, 20, 20)
        want = a.expand(20, 20)
        if got != want:
            rt_ok = False
            lines.append(f"trial {trial}: round trip mismatch")
    lines.append(f"25 random doubly recursive arrays: rational round trip exact "
                 f"on 20x20 blocks: {rt_ok}")
    return want5 and off and eq_ok and sub_ok and rt_ok


CHECKS = [
    (1, "cyclic order-7 oracle end to end", check_1),
    (2, "symbolic engine agrees with the oracle (cyclic system)", check_2),
    (3, "3x3 elementary-abelian system certification", check_3),
    (4, "published prefix recovery (s10, s9)", check_4),
    (5, "closure operations vs naive termwise computation", check_5),
    (6, "triangle-operation pipelines (ordinary and Laurent)", check_6),
    (7, "multi-variable substitution examples and bounded-search outcomes", check_7),
    (8, "quasipolynomial channel fitting", check_8),
    (9, "plus-classified systems yield verified C-finite dimensions", check_9),
    (10, "bivariate suite: hadamard, diagonal, row sums, round trip", check_10),
]


def run_all():
    return [_run(num, title, fn) for num, title, fn in CHECKS]


def run_one(number: int) -> CheckResult:
    for num, title, fn in CHECKS:
        if num == number:
            return _run(num, title, fn)
    raise ValueError(f"no check numbered {number}")
