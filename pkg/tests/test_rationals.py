import random
from fractions import Fraction
from math import comb

import pytest

from pqzeta.rationals import (
    BernoulliTable,
    PolyRational,
    bernoulli,
    bernoulli_polynomial,
    bernoulli_table,
    binomial,
    binomial_poly,
    rising_factorial,
    zeta_neg,
    zeta_one_minus,
)


def test_binomial_basics():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(4, 9) == 0
    assert binomial(4, -1) == 0


def test_pascal_identity():
    for n in range(1, 25):
        for k in range(1, n):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_poly():
    assert binomial_poly(-1, 2) == 1  # (-1)(-2)/2
    assert binomial_poly(Fraction(9, 7), 0) == 1
    assert binomial_poly(3, 2) == binomial(3, 2)
    # integer-valued on negative integers too
    assert binomial_poly(-3, 4) == comb(6, 4)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    for k in range(3, 40, 2):
        assert bernoulli(k) == 0


def test_bernoulli_recurrence_closure():
    for m in range(1, 60):
        total = sum(binomial(m + 1, j) * bernoulli(j) for j in range(m + 1))
        assert total == 0


def test_bernoulli_cache_determinism():
    shared = bernoulli_table()
    shared.extend(80)
    fresh = BernoulliTable()
    fresh.extend(80)
    assert fresh.values(80) == shared.values(80)


def test_bernoulli_polynomial_values():
    assert bernoulli_polynomial(0).coeffs == [Fraction(1)]
    assert bernoulli_polynomial(1).coeffs == [Fraction(-1, 2), Fraction(1)]
    assert bernoulli_polynomial(2).coeffs == [Fraction(1, 6), Fraction(-1), Fraction(1)]
    for k in range(12):
        poly = bernoulli_polynomial(k)
        assert poly(0) == bernoulli(k)
        at_one = poly(1)
        if k == 1:
            assert at_one == Fraction(1, 2)
        else:
            assert at_one == bernoulli(k)


def test_zeta_neg_values():
    assert zeta_neg(0) == Fraction(-1, 2)
    assert zeta_neg(1) == Fraction(-1, 12)
    assert zeta_neg(2) == 0
    for k in range(2, 30):
        assert zeta_one_minus(k) == zeta_neg(k - 1)
    with pytest.raises(ValueError):
        zeta_one_minus(1)
    assert zeta_one_minus(3) == 0


def test_rising_factorial():
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    assert rising_factorial(Fraction(22, 7), 0) == 1
    assert rising_factorial(3, 3) == 60


def test_poly_arithmetic():
    p = PolyRational([1, 2])  # 1 + 2t
    q = PolyRational([0, 0, 3])  # 3t^2
    assert (p * q).coeffs == [Fraction(0), Fraction(0), Fraction(3), Fraction(6)]
    assert (p + q).degree == 2
    assert p.derivative().coeffs == [Fraction(2)]
    assert PolyRational([1, 0, 0]).coeffs == [Fraction(1)]
    assert not PolyRational([0, 0])


def test_poly_random_ring_identities():
    rng = random.Random(11)
    for _ in range(20):
        a = PolyRational([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)])
        b = PolyRational([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)])
        x = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        assert (a * b)(x) == a(x) * b(x)
        assert (a + b)(x) == a(x) + b(x)
