import random
from fractions import Fraction as Q
from math import comb

import pytest

from coreseq.cfinite import CFiniteSeq, HilbertSeries
from coreseq.errors import (BudgetError, IntegrityError, PreconditionError,
                            SingularSubstitutionError)
from coreseq.multiseq import (CFinite2Seq, RatBiSeries, algebraic_substitute_one,
                              bi_coeff, bi_hadamard, block_of, cf2_to_rational,
                              diagonal, matrix_product, substitute_one)
from coreseq.ring import BiPoly, UniPoly, bipoly_parse


def rbs(num: str, den: str) -> RatBiSeries:
    return RatBiSeries.make(bipoly_parse(num), bipoly_parse(den))


DELTA = rbs("1", "1 - t1*t2")        # 1 on the diagonal
BINOM = rbs("1", "1 - t1 - t2")      # C(m+n, n)


def test_bi_coeff_diagonal_delta():
    for m in range(6):
        for n in range(6):
            assert bi_coeff(DELTA, m, n) == (1 if m == n else 0)


def test_bi_coeff_binomials():
    for m in range(8):
        for n in range(8):
            assert bi_coeff(BINOM, m, n) == comb(m + n, n)


def test_bi_coeff_row_delta():
    h = rbs("1", "1 - t1")
    for m in range(5):
        for n in range(5):
            assert bi_coeff(h, m, n) == (1 if n == 0 else 0)


def _cf2_constant_one():
    return CFinite2Seq((Q(1),), 1, (Q(1),), 1, ((Q(1),),))


def test_cf2_to_rational_constant():
    h = cf2_to_rational(_cf2_constant_one())
    assert h.num == BiPoly.const(1)
    assert h.den == bipoly_parse("1 - t1 - t2 + t1*t2")


def test_cf2_to_rational_product_of_geometrics():
    a = CFinite2Seq((Q(2),), 1, (Q(3),), 1, ((Q(1),),))
    h = cf2_to_rational(a)
    assert h.den == bipoly_parse("1 - 2*t1 - 3*t2 + 6*t1*t2")
    for m in range(6):
        for n in range(6):
            assert bi_coeff(h, m, n) == 2 ** m * 3 ** n


def test_cf2_to_rational_polynomial_plus_linear():
    # a[m][n] = C(m, 2) + n: order 3 along m ((1-t)^3), order 2 along n
    block = tuple(tuple(Q(comb(m, 2) + n) for n in range(4)) for m in range(5))
    a = CFinite2Seq((Q(3), Q(-3), Q(1)), 3, (Q(2), Q(-1)), 2, block)
    h = cf2_to_rational(a)
    assert h.den.degree(0) == 3 and h.den.degree(1) == 2
    got = block_of(h, 12, 12)
    for m in range(12):
        for n in range(12):
            assert got[m][n] == comb(m, 2) + n


def test_cf2_inconsistent_block_rejected():
    with pytest.raises(IntegrityError):
        CFinite2Seq((Q(1),), 1, (Q(1),), 1, ((Q(1), Q(2)), (Q(1), Q(1))))


def test_bi_hadamard_picks_out_the_diagonal():
    block, certified = bi_hadamard(BINOM, DELTA, 8)
    assert certified is None
    for m in range(8):
        for n in range(8):
            want = comb(2 * n, n) if m == n else 0
            assert block[m][n] == want


def test_bi_hadamard_with_all_ones_is_identity():
    ones = rbs("1", "1 - t1 - t2 + t1*t2")
    block, _ = bi_hadamard(BINOM, ones, 7)
    assert block == block_of(BINOM, 7, 7)


def test_bi_hadamard_certifies_doubly_recursive_products():
    a = CFinite2Seq((Q(2),), 1, (Q(3),), 1, ((Q(1),),))
    b = CFinite2Seq((Q(3),), 1, (Q(2),), 1, ((Q(1),),))
    block, certified = bi_hadamard(a, b, 10)
    assert certified is not None
    assert certified.expand(10, 10) == block
    for m in range(6):
        for n in range(6):
            assert block[m][n] == 6 ** (m + n)


def test_block_cap_enforced():
    with pytest.raises(BudgetError):
        diagonal(DELTA, 10, cap=5)


def test_substitute_one_examples():
    assert substitute_one(DELTA, 1) == HilbertSeries(UniPoly((1,)), UniPoly((1, -1)))
    h = rbs("t2", "1 - t1*t2^2")
    assert substitute_one(h, 1) == HilbertSeries(UniPoly((1,)), UniPoly((1, -1)))
    with pytest.raises(SingularSubstitutionError):
        substitute_one(BINOM, 1)


PASCAL = rbs("1", "1 - t1 - t1*t2")  # C(m, n), rows finitely supported
LOWER = rbs("1", "1 - t1 - t1*t2 + t1^2*t2")  # (1-t1)(1-t1 t2): 1 iff n <= m


def test_matrix_product_examples():
    b = CFiniteSeq.geometric(2)
    got = matrix_product(DELTA, lambda m: m, b, 8)
    assert got == b.terms(8)
    got = matrix_product(LOWER, lambda m: m, b, 10)
    assert got == [2 ** (m + 1) - 1 for m in range(10)]
    got = matrix_product(PASCAL, lambda m: m, CFiniteSeq.constant(1), 12)
    assert got == [2 ** m for m in range(12)]


def test_matrix_product_binomial_transform_matches_direct_sum():
    fib = CFiniteSeq.from_recurrence((1, 1), (0, 1))
    got = matrix_product(PASCAL, lambda m: m, fib, 30)
    fib_terms = fib.terms(30)
    want = [sum(comb(m, n) * fib_terms[n] for n in range(m + 1)) for m in range(30)]
    assert got == want


def test_matrix_product_flags_support_violation():
    with pytest.raises(IntegrityError):
        matrix_product(PASCAL, lambda m: max(m - 1, 0),
                       CFiniteSeq.constant(1), 6)


def test_diagonal_examples():
    assert diagonal(BINOM, 5) == [comb(2 * n, n) for n in range(5)]
    assert diagonal(DELTA, 5) == [1] * 5
    sep = rbs("1", "1 - t1 - t2 + t1*t2")
    assert diagonal(sep, 5) == [1] * 5


def test_algebraic_substitute_one():
    eq = [BiPoly.const(-1), BiPoly.zero(),
          bipoly_parse("1 - 4*t1*t2")]  # (1 - 4 t1 t2) y^2 - 1
    got = algebraic_substitute_one(eq, axis=1)
    assert got[2] == UniPoly((1, -4)) and got[0] == UniPoly((-1,))
    lin = [bipoly_parse("0 - t1"), bipoly_parse("1 - t1 - t2")]
    got = algebraic_substitute_one(lin, axis=1)
    assert got[1] == UniPoly((0, -1)) and got[0] == UniPoly((0, -1))
    common = bipoly_parse("t2 - 1")
    with pytest.raises(PreconditionError):
        algebraic_substitute_one([common, common * bipoly_parse("t1")], axis=1)


def test_pascal_series_really_is_the_binomial_triangle():
    for m in range(8):
        for n in range(8):
            assert bi_coeff(PASCAL, m, n) == comb(m, n)
            assert bi_coeff(LOWER, m, n) == (1 if n <= m else 0)


def test_round_trip_on_random_doubly_recursive_arrays():
    from coreseq.verify import _random_cf2
    rng = random.Random(31)
    for _ in range(10):
        a = _random_cf2(rng)
        h = cf2_to_rational(a)
        assert block_of(h, 20, 20) == a.expand(20, 20)


def test_rat_biseries_reduces_common_factors():
    h = RatBiSeries.make(bipoly_parse("1 + t2") * bipoly_parse("1 + t1"),
                         bipoly_parse("1 + t2") * bipoly_parse("1 - t1"))
    assert h.num == bipoly_parse("1 + t1")
    assert h.den == bipoly_parse("1 - t1")
