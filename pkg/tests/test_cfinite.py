import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coreseq.cfinite import (CFiniteSeq, HilbertSeries, add, dilate, from_hilbert,
                             hadamard, hilbert_series, minimize, parse_cfinite,
                             partial_sums, shift)
from coreseq.ring import UniPoly

FIB = CFiniteSeq.from_recurrence((1, 1), (0, 1))


def _random_seq(rng, max_order=4):
    r = rng.randint(1, max_order)
    coeffs = [Q(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(r)]
    if all(c == 0 for c in coeffs):
        coeffs[0] = Q(1)
    vf = r + rng.randint(0, 2)
    prefix = [Q(rng.randint(-5, 5)) for _ in range(vf)]
    return CFiniteSeq(tuple(coeffs), vf, tuple(prefix))


def test_term_geometric():
    assert CFiniteSeq.geometric(2).term(10) == 1024


def test_term_fibonacci():
    assert FIB.term(10) == 55


def test_term_six_step_seeded_recurrence():
    seq = CFiniteSeq.from_recurrence((0, 5, 0, -6, 0, 1), (1, 2, 3, 6, 10, 19))
    assert seq.term(12) == 1145


def test_invalid_construction():
    with pytest.raises(ValueError):
        CFiniteSeq((1, 1), 1, (0,))  # threshold below the order


def test_add_zero_is_identity():
    a = _random_seq(random.Random(0))
    z = CFiniteSeq.zero()
    assert add(a, z).terms(60) == a.terms(60)


def test_add_two_geometrics():
    s = add(CFiniteSeq.geometric(2), CFiniteSeq.geometric(3))
    assert s.coeffs == (Q(5), Q(-6))
    want = [2 ** n + 3 ** n for n in range(10)]
    assert s.terms(10) == want


def test_add_fib_to_itself_stays_order_two():
    s = add(FIB, FIB)
    assert s.order == 2
    assert s.terms(10) == [2 * v for v in FIB.terms(10)]


def test_hadamard_geometrics():
    s = hadamard(CFiniteSeq.geometric(2), CFiniteSeq.geometric(3))
    assert s.order == 1 and s.coeffs == (Q(6),)


def test_hadamard_squares_linear_sequence():
    n_seq = CFiniteSeq.from_recurrence((2, -1), (0, 1))  # 0,1,2,3,...
    s = hadamard(n_seq, n_seq)
    assert s.coeffs == (Q(3), Q(-3), Q(1))
    assert s.terms(10) == [Q(n * n) for n in range(10)]


def test_hadamard_fibonacci_squared():
    s = hadamard(FIB, FIB)
    assert s.order <= 4
    assert s.term(10) == 3025


def test_partial_sums_examples():
    ones = CFiniteSeq.constant(1)
    assert partial_sums(ones).terms(6) == [1, 2, 3, 4, 5, 6]
    assert partial_sums(CFiniteSeq.geometric(2)).terms(6) == [1, 3, 7, 15, 31, 63]
    fib_sums = partial_sums(FIB)
    want = [FIB.term(n + 2) - 1 for n in range(10)]
    assert fib_sums.terms(10) == want


def test_dilate_examples():
    assert dilate(CFiniteSeq.geometric(2), 3).coeffs == (Q(8),)
    halved = dilate(FIB, 2)
    assert halved.coeffs == (Q(3), Q(-1))
    assert halved.terms(5) == [0, 1, 3, 8, 21]
    a = _random_seq(random.Random(1))
    assert dilate(a, 1) is a
    with pytest.raises(ValueError):
        dilate(a, 0)


def test_shift_examples():
    a = _random_seq(random.Random(2))
    assert shift(a, 0).terms(40) == a.terms(40)
    assert shift(FIB, 1).terms(5) == [1, 1, 2, 3, 5]
    c_like = CFiniteSeq.from_recurrence((0, 5, 0, -6, 0, 1), (2, 4, 8, 16, 32, 57))
    assert shift(c_like, 2).terms(3) == [8, 16, 32]


def test_hilbert_series_examples():
    assert hilbert_series(CFiniteSeq.constant(1)) == HilbertSeries(
        UniPoly((1,)), UniPoly((1, -1)))
    assert hilbert_series(CFiniteSeq.geometric(2)) == HilbertSeries(
        UniPoly((1,)), UniPoly((1, -2)))
    assert hilbert_series(FIB) == HilbertSeries(
        UniPoly((0, 1)), UniPoly((1, -1, -1)))


def test_from_hilbert_examples():
    ones = from_hilbert(HilbertSeries(UniPoly((1,)), UniPoly((1, -1))))
    assert ones.terms(5) == [1, 1, 1, 1, 1]
    fib = from_hilbert(HilbertSeries(UniPoly((0, 1)), UniPoly((1, -1, -1))))
    assert fib.terms(10) == FIB.terms(10)
    odds = from_hilbert(HilbertSeries(UniPoly((1, 1)), UniPoly((1, -2, 1))))
    assert odds.terms(5) == [1, 3, 5, 7, 9]


def test_round_trip_random_sequences():
    rng = random.Random(3)
    for _ in range(30):
        a = _random_seq(rng, max_order=5)
        back = from_hilbert(hilbert_series(a))
        assert back.terms(100) == a.terms(100)


def test_hilbert_series_is_additive():
    rng = random.Random(4)
    for _ in range(20):
        a, b = _random_seq(rng), _random_seq(rng)
        assert hilbert_series(add(a, b)) == hilbert_series(a) + hilbert_series(b)


def test_dilate_composes():
    rng = random.Random(5)
    for _ in range(10):
        a = _random_seq(rng, max_order=3)
        d, e = rng.randint(1, 3), rng.randint(1, 3)
        assert dilate(dilate(a, d), e).terms(100) == dilate(a, d * e).terms(100)


def test_minimize_certified_reduction():
    # an order-4 presentation of the Fibonacci numbers
    fat = CFiniteSeq.from_recurrence((2, 0, -1, 0), tuple(FIB.terms(4)))
    slim = minimize(fat)
    assert slim.order == 2
    assert slim.terms(40) == FIB.terms(40)


@given(st.integers(0, 30), st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_shift_then_index(n, k):
    assert shift(FIB, k).term(n) == FIB.term(n + k)


def test_text_round_trip():
    a = CFiniteSeq((Q(1, 2), Q(-3)), 3, (Q(1), Q(2), Q(5)))
    assert parse_cfinite(a.to_text()) == a
    b = parse_cfinite("rec: 1,1; from: 2; prefix: 0,1")
    assert b.terms(6) == [0, 1, 1, 2, 3, 5]
