import random
from fractions import Fraction as Q
from math import comb, factorial

import pytest

from coreseq.cfinite import CFiniteSeq, add
from coreseq.convolve import (MultiPolySeqRec, PolySeqRec, diagonal_delta,
                              polyseq_term, tri_laurent, tri_multi, tri_plain,
                              tri_then_guess)
from coreseq.errors import NotOrdinaryError
from coreseq.guessing import verify_relation
from coreseq.ring import LaurentPoly, laurent_parse

w = laurent_parse

ALT = PolySeqRec((w("w^-1 + w"),), (w("1"),))        # (x + 1/x)^n
FIB = CFiniteSeq.from_recurrence((1, 1), (0, 1))


def test_polyseq_term_powers_of_binomial():
    for n in range(8):
        assert polyseq_term(ALT, n) == w("w^-1 + w") ** n


def test_polyseq_term_monomial_schedule():
    ps = PolySeqRec((w("w^2"),), (w("1"),))
    assert polyseq_term(ps, 3) == w("w^6")


def test_polyseq_with_threshold():
    # exception prefix: P0 irregular, recurrence kicks in afterwards
    ps = PolySeqRec((w("w"),), (w("5"), w("1 + w")), threshold=1)
    assert polyseq_term(ps, 0) == w("5")
    assert polyseq_term(ps, 2) == w("w + w^2")


def test_multi_polyseq_term():
    sq = MultiPolySeqRec(2, ({(2, 0): 1, (1, 1): 2, (0, 2): 1},),
                         ({(0, 0): 1},))
    got = dict(sq.term(2))
    want = {(i, 4 - i): comb(4, i) for i in range(5)}
    assert got == {k: Q(v) for k, v in want.items()}


def test_tri_plain_substitution_identity():
    ps = PolySeqRec((w("w"),), (w("1"),))  # P_n = x^n
    got = tri_plain(ps, FIB, 12)
    assert got == FIB.terms(12)


def test_tri_plain_binomial_row_sums():
    ps = PolySeqRec((w("1 + w"),), (w("1"),))
    got = tri_plain(ps, CFiniteSeq.constant(1), 10)
    assert got == [Q(2) ** n for n in range(10)]


def test_tri_plain_binomial_transform_of_fibonacci():
    ps = PolySeqRec((w("1 + w"),), (w("1"),))
    rep = tri_then_guess(ps, FIB, count=30, kind="cfinite", max_order=4, margin=6)
    assert rep.found and rep.coeffs == (Q(3), Q(-1))


def test_tri_plain_rejects_laurent_terms():
    with pytest.raises(NotOrdinaryError):
        tri_plain(ALT, FIB, 4)


def test_tri_laurent_interleaved_central_binomials():
    got = tri_laurent(ALT, CFiniteSeq.delta(), CFiniteSeq.zero(), 9)
    assert got == [1, 0, 2, 0, 6, 0, 20, 0, 70]


def test_tri_laurent_shifted_pickoff():
    ps = PolySeqRec((w("w"),), (w("w^-1"),))  # P_n = x^(n-1)
    got = tri_laurent(ps, FIB, CFiniteSeq.zero(), 8)
    assert got[0] == 0  # x^-1 picks b_0 = 0
    assert got[1:] == FIB.terms(7)


def test_tri_laurent_negative_side_all_ones():
    ps = PolySeqRec((w("w^-1"),), (w("1"),))  # P_n = x^(-n)
    got = tri_laurent(ps, CFiniteSeq.zero(), CFiniteSeq.constant(1), 8)
    # P_0 = 1 picks a_0 = 0; every later term picks b_(n-1) = 1
    assert got == [0] + [1] * 7


def test_tri_multi_examples():
    sq = MultiPolySeqRec(2, ({(2, 0): 1, (1, 1): 2, (0, 2): 1},), ({(0, 0): 1},))
    assert tri_multi(sq, diagonal_delta(2), 8) == [comb(2 * n, n) for n in range(8)]
    cube = MultiPolySeqRec(3, (_cube_coeff(),), ({(0, 0, 0): 1},))
    want = [factorial(3 * n) // factorial(n) ** 3 for n in range(8)]
    assert tri_multi(cube, diagonal_delta(3), 8) == want
    weighted = diagonal_delta(2, weight=lambda i: comb(2 * i, i))
    assert tri_multi(sq, weighted, 8) == [comb(2 * n, n) ** 2 for n in range(8)]


def _cube_coeff():
    out = {}
    for i in range(4):
        for j in range(4 - i):
            k = 3 - i - j
            out[(i, j, k)] = factorial(3) // (
                factorial(i) * factorial(j) * factorial(k))
    return out


def test_tri_then_guess_laurent_algebraic():
    rep = tri_then_guess(ALT, CFiniteSeq.delta(), CFiniteSeq.zero(),
                         count=40, kind="algebraic", deg_t=2, deg_y=2, margin=4)
    assert rep.found and rep.deg_y == 2
    mags = [tuple(abs(c) for c in p.coeffs) for p in rep.y_coeffs]
    assert mags == [(1,), (), (1, 0, 4)]


def test_tri_then_guess_multinomial_outcomes():
    cube = MultiPolySeqRec(3, (_cube_coeff(),), ({(0, 0, 0): 1},))
    cf = tri_then_guess(cube, diagonal_delta(3), count=26, kind="cfinite",
                        max_order=8, margin=8)
    assert not cf.found
    alg = tri_then_guess(cube, diagonal_delta(3), count=40, kind="algebraic",
                         deg_t=3, deg_y=3, margin=8)
    assert not alg.found
    pr = tri_then_guess(cube, diagonal_delta(3), count=26, kind="prec",
                        max_order=2, max_poldeg=2, margin=6)
    assert pr.found


def test_linearity_in_the_sequence_argument():
    rng = random.Random(41)
    ps = PolySeqRec((w("1 + 2*w"), w("w^2")), (w("1"), w("w")))
    for _ in range(10):
        a = CFiniteSeq((Q(rng.randint(-2, 2)),), 1, (Q(rng.randint(-3, 3)),))
        b = CFiniteSeq((Q(rng.randint(-2, 2)),), 1, (Q(rng.randint(-3, 3)),))
        left = tri_plain(ps, add(a, b), 25)
        right = [x + y for x, y in zip(tri_plain(ps, a, 25), tri_plain(ps, b, 25))]
        assert left == right


def test_laurent_schedules_yield_algebraic_series():
    rng = random.Random(20260815)

    def random_laurent_ps():
        def rand_poly(lo=-1, hi=1):
            terms = {}
            for _ in range(rng.randint(1, 2)):
                terms[rng.randint(lo, hi)] = Q(rng.randint(1, 2))
            return LaurentPoly(terms)
        return PolySeqRec((rand_poly(),), (rand_poly(0, 1),), 0)

    def random_small_seq():
        r = rng.randint(1, 2)
        coeffs = [Q(rng.randint(-2, 2)) for _ in range(r)]
        if all(c == 0 for c in coeffs):
            coeffs[0] = Q(1)
        prefix = [Q(rng.randint(0, 3)) for _ in range(r)]
        return CFiniteSeq(tuple(coeffs), r, tuple(prefix))

    from coreseq.guessing import guess_algebraic
    for _ in range(20):
        ps = random_laurent_ps()
        data = tri_laurent(ps, random_small_seq(), random_small_seq(), 80)
        rep = guess_algebraic(data, 10, 4, margin=8)
        assert rep.found
        assert verify_relation(data, rep)


def test_ordinary_schedule_composed_with_cfinite_is_cfinite():
    rng = random.Random(42)
    from coreseq.verify import _random_cfinite, _random_ordinary_polyseq
    for _ in range(12):
        ps = _random_ordinary_polyseq(rng)
        a = _random_cfinite(rng, max_order=3, rational=False)
        data = tri_plain(ps, a, 90)
        rep = tri_then_guess(ps, a, count=60, kind="cfinite",
                             max_order=16, margin=4)
        assert rep.found
        assert verify_relation(data, rep)
