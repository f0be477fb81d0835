import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coreseq.errors import ParseError
from coreseq.ring import (BiPoly, LaurentPoly, UniPoly, bipoly_divmod, bipoly_gcd,
                          bipoly_parse, laurent_parse, unipoly_gcd, unipoly_parse)

w = laurent_parse


def test_parse_single_symbol():
    assert w("w") == LaurentPoly({1: 1})


def test_parse_mixed_terms():
    assert w("2*w^-1 + w^3") == LaurentPoly({-1: 2, 3: 1})


def test_parse_signed_sum():
    assert w("3*w^3 - 3*w^-1") == LaurentPoly({3: 3, -1: -3})
    assert w("0 - 3*w^-1") == LaurentPoly({-1: -3})
    assert w("-w + 2") == LaurentPoly({1: -1, 0: 2})


def test_parse_rational_coefficients():
    assert w("1/2*w^2 - 3/4") == LaurentPoly({2: Q(1, 2), 0: Q(-3, 4)})


@pytest.mark.parametrize("bad", ["", "w^", "2*", "* w", "w + ", "q^2", "1//2"])
def test_parse_errors_carry_position(bad):
    with pytest.raises(ParseError):
        w(bad)


def test_mul_inverse_pair():
    assert w("w") * w("w^-1") == LaurentPoly.one()


def test_mul_binomial_square():
    assert (w("w + w^-1")) ** 2 == w("w^2 + 2 + w^-2")


def _closed_even(n):
    from math import comb
    return LaurentPoly({n - 4 * i: comb(n, 2 * i) for i in range(n // 2 + 1)})


def _closed_odd(n):
    from math import comb
    return LaurentPoly({n - 4 * i - 2: comb(n, 2 * i + 1) for i in range(n // 2 + 1)})


def test_iterated_binomial_splits_by_exponent_parity():
    base = w("w + w^-1")
    power = LaurentPoly.one()
    for n in range(13):
        assert power == _closed_even(n) + _closed_odd(n)
        power = power * base


def test_eval_one():
    assert w("w^3 + 2*w^-1").eval_one() == 3
    assert LaurentPoly.zero().eval_one() == 0
    assert w("3*w^3 - 3*w^-1").eval_one() == 0


def _random_laurent(rng):
    return LaurentPoly({rng.randint(-4, 4): Q(rng.randint(-5, 5), rng.randint(1, 4))
                        for _ in range(rng.randint(0, 4))})


def _random_unipoly(rng):
    return UniPoly([Q(rng.randint(-5, 5), rng.randint(1, 4))
                    for _ in range(rng.randint(0, 5))])


def _random_bipoly(rng):
    return BiPoly({(rng.randint(0, 3), rng.randint(0, 3)):
                   Q(rng.randint(-5, 5), rng.randint(1, 4))
                   for _ in range(rng.randint(0, 4))})


@pytest.mark.parametrize("make", [_random_laurent, _random_unipoly, _random_bipoly])
def test_ring_axioms_on_random_triples(make):
    rng = random.Random(hash(make.__name__) & 0xFFFF)
    for _ in range(1000):
        a, b, c = make(rng), make(rng), make(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a


def test_eval_one_is_a_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(300):
        a, b = _random_laurent(rng), _random_laurent(rng)
        assert (a * b).eval_one() == a.eval_one() * b.eval_one()
        assert (a + b).eval_one() == a.eval_one() + b.eval_one()


@given(st.dictionaries(st.integers(-9, 9),
                       st.fractions(min_value=-20, max_value=20), max_size=6))
@settings(max_examples=120, deadline=None)
def test_laurent_text_round_trip(terms):
    x = LaurentPoly(terms)
    assert laurent_parse(x.to_text()) == x


@given(st.lists(st.fractions(min_value=-20, max_value=20), max_size=6))
@settings(max_examples=120, deadline=None)
def test_unipoly_text_round_trip(coeffs):
    x = UniPoly(coeffs)
    assert unipoly_parse(x.to_text("n"), symbol="n") == x


def test_bipoly_text_round_trip():
    rng = random.Random(11)
    for _ in range(200):
        x = _random_bipoly(rng)
        assert bipoly_parse(x.to_text()) == x


def test_unipoly_divmod_and_gcd():
    a = UniPoly((1, 2, 1))          # (1 + t)^2
    b = UniPoly((1, 1))             # 1 + t
    q, r = a.divmod(b)
    assert q == b and r.is_zero
    assert unipoly_gcd(a, UniPoly((1, 3, 3, 1))) == UniPoly((1, 2, 1))


def test_bipoly_gcd_of_constructed_product():
    f = bipoly_parse("1 + t1*t2")
    g = bipoly_parse("1 - t1 - t2")
    h = bipoly_parse("1 + t2")
    got = bipoly_gcd(f * h, g * h)
    # normalized so the first term in (i, j) order has coefficient 1
    assert got == h
    q, r = bipoly_divmod(f * h, h)
    assert r.is_zero and q == f


def test_unipoly_eval_and_shift():
    p = unipoly_parse("2 + 3*n", symbol="n")
    assert p.eval(5) == 17
    assert p.shift_up(2) == UniPoly((0, 0, 2, 3))
