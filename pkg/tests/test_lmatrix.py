import random
from fractions import Fraction as Q
from math import comb

import pytest

from coreseq import qlinalg
from coreseq.errors import SizeMismatchError
from coreseq.lmatrix import (LMatrix, cayley_hamilton_check, char_poly, mat_mul,
                             mat_pow, row_advance)
from coreseq.ring import LaurentPoly, laurent_parse

w = laurent_parse


def z3z3_matrix():
    return LMatrix([[w("w"), w("w^-1"), w("1")],
                    [w("w^-1"), w("w"), w("1")],
                    [w("0"), w("0"), w("3*w")]])


def _random_matrix(rng, size, natural=False):
    def entry():
        terms = {}
        for _ in range(rng.randint(0, 3)):
            lo = 0 if natural else -2
            c = rng.randint(1, 3) if natural else rng.randint(-3, 3)
            terms[rng.randint(lo, 2)] = c
        return LaurentPoly(terms)
    return LMatrix([[entry() for _ in range(size)] for _ in range(size)])


def test_identity_is_neutral():
    rng = random.Random(1)
    A = _random_matrix(rng, 3)
    assert mat_mul(LMatrix.identity(3), A) == A
    assert mat_mul(A, LMatrix.identity(3)) == A


def test_square_of_worked_matrix_entry():
    T2 = mat_mul(z3z3_matrix(), z3z3_matrix())
    assert T2.entry(0, 2) == w("4*w + w^-1")


def test_diagonal_square():
    D = LMatrix([[w("w"), w("0")], [w("0"), w("w")]])
    assert mat_mul(D, D) == LMatrix([[w("w^2"), w("0")], [w("0"), w("w^2")]])


def test_size_mismatch_rejected():
    with pytest.raises(SizeMismatchError):
        mat_mul(LMatrix.identity(2), LMatrix.identity(3))


def test_pow_zero_and_one():
    T = z3z3_matrix()
    assert mat_pow(T, 0) == LMatrix.identity(3)
    assert mat_pow(T, 1) == T


def _closed_a(m):
    return LaurentPoly({m - 4 * i: comb(m, 2 * i) for i in range(m // 2 + 1)})


def _closed_b(m):
    return LaurentPoly({m - 4 * i - 2: comb(m, 2 * i + 1) for i in range(m // 2 + 1)})


def test_powers_match_closed_forms():
    T = z3z3_matrix()
    for n in range(13):
        P = mat_pow(T, n)
        assert P.entry(0, 0) == _closed_a(n)
        assert P.entry(0, 1) == _closed_b(n)
        # the lower-right block is just (3w)^n
        assert P.entry(2, 2) == LaurentPoly({n: 3 ** n})


def test_row_advance_examples():
    T = z3z3_matrix()
    e1 = [w("1"), w("0"), w("0")]
    assert row_advance(e1, LMatrix.identity(3)) == e1
    once = row_advance(e1, T)
    assert once == [w("w"), w("w^-1"), w("1")]
    twice = row_advance(once, T)
    assert twice == [w("w^2 + w^-2"), w("2"), w("4*w + w^-1")]


def test_row_advance_matches_matrix_power():
    rng = random.Random(2)
    A = _random_matrix(rng, 3)
    row = [w("1"), w("0"), w("0")]
    for n in range(1, 7):
        row = row_advance(row, A)
        assert row == mat_pow(A, n).entries[0]


def test_char_poly_of_worked_matrix():
    cp = char_poly(z3z3_matrix())
    assert cp.coeffs[3] == LaurentPoly.one()
    assert cp.coeffs[2] == w("0 - 5*w")
    assert cp.coeffs[1] == w("7*w^2 - w^-2")
    assert cp.coeffs[0] == w("3*w^-1 - 3*w^3")


def test_char_poly_identity_and_diagonal():
    cp = char_poly(LMatrix.identity(2))
    assert [c.eval_one() for c in cp.coeffs] == [1, -2, 1]
    D = LMatrix([[w("w"), w("0")], [w("0"), w("w^-1")]])
    cp = char_poly(D)
    assert cp.coeffs[2] == LaurentPoly.one()
    assert cp.coeffs[1] == w("0 - w - w^-1")
    assert cp.coeffs[0] == LaurentPoly.one()


def test_cayley_hamilton_on_worked_and_identity():
    assert cayley_hamilton_check(z3z3_matrix())
    assert cayley_hamilton_check(LMatrix.identity(3))


def test_cayley_hamilton_on_random_matrices():
    rng = random.Random(3)
    for trial in range(200):
        size = rng.randint(2, 4)
        assert cayley_hamilton_check(_random_matrix(rng, size, natural=True))


def test_power_addition_law():
    rng = random.Random(4)
    for _ in range(10):
        A = _random_matrix(rng, rng.randint(2, 3))
        m, n = rng.randint(0, 4), rng.randint(0, 4)
        assert mat_pow(A, m + n) == mat_mul(mat_pow(A, m), mat_pow(A, n))


def test_char_poly_specializes_at_one():
    rng = random.Random(5)
    for _ in range(15):
        A = _random_matrix(rng, rng.randint(2, 4))
        got = [c.eval_one() for c in char_poly(A).coeffs]
        assert got == qlinalg.charpoly(A.at_one())
