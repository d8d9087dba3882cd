import random
from fractions import Fraction

import pytest

from pqzeta.padics import (
    PadicNumber,
    PrecisionError,
    angle_bracket,
    crt_pair,
    digits,
    double_teichmuller,
    ideal_shadow,
    padic_norm,
    padic_of_rational,
    padic_reduce_abs,
    padic_valuation,
    teichmuller,
    teichmuller_total,
)


def test_of_rational_examples():
    x = padic_of_rational(Fraction(1, 3), 5, 3)
    assert (x.valuation, x.unit) == (0, 42)  # 3 * 42 = 126 = 1 mod 125
    zero = padic_of_rational(0, 7, 4)
    assert zero.is_exact_zero
    y = padic_of_rational(50, 5, 2)
    assert (y.valuation, y.unit) == (2, 2)


def test_norm():
    assert padic_norm(padic_of_rational(50, 5, 2)) == Fraction(1, 25)
    assert padic_norm(padic_of_rational(0, 5, 2)) == 0
    assert padic_norm(padic_of_rational(Fraction(1, 3), 3, 2)) == 3


def test_digits():
    x = padic_of_rational(Fraction(1, 3), 5, 3)
    assert digits(x, 3) == [2, 3, 1]
    assert digits(padic_of_rational(7, 5, 2), 2) == [2, 1]
    assert digits(padic_of_rational(0, 5, 4), 3) == [0, 0, 0]
    with pytest.raises(PrecisionError):
        digits(padic_of_rational(7, 5, 2), 9)


def test_ring_homomorphism_against_exact_arithmetic():
    rng = random.Random(5)
    for p in (3, 5, 7):
        N = 6
        mod = p**N
        for _ in range(40):
            a = Fraction(rng.randint(-200, 200), rng.choice([1, 2, 3, 7, 11]))
            b = Fraction(rng.randint(-200, 200), rng.choice([1, 2, 3, 7, 11]))
            if a.denominator % p == 0 or b.denominator % p == 0:
                continue
            xa, xb = padic_of_rational(a, p, N), padic_of_rational(b, p, N)
            for op, exact in (("add", a + b), ("mul", a * b)):
                got = xa + xb if op == "add" else xa * xb
                want = padic_reduce_abs(exact, p, min(got.abs_precision, N))
                if got.unit == 0 or want.unit == 0 or got.is_exact_zero or want.is_exact_zero:
                    continue
                keep = min(got.abs_precision, want.abs_precision, N)
                assert got.residue(keep) == want.residue(keep)


def test_subtraction_cancellation_is_tracked():
    p, N = 5, 4
    x = padic_of_rational(1 + 5**3, p, N)
    y = padic_of_rational(1, p, N)
    d = x - y
    assert (d.valuation, d.unit) == (3, 1)
    assert d.precision == 1  # only one digit of the difference survives
    z = x - x
    assert z.unit == 0 and z.valuation == N  # inexact zero mod p^4


def test_ultrametric_norm():
    rng = random.Random(9)
    p = 5
    for _ in range(60):
        a = rng.randint(-500, 500)
        b = rng.randint(-500, 500)
        if a == 0 or b == 0 or a + b == 0:
            continue
        xa, xb = padic_of_rational(a, p, 8), padic_of_rational(b, p, 8)
        s = xa + xb
        if s.unit == 0:
            continue
        assert s.norm() <= max(xa.norm(), xb.norm())
        if xa.norm() != xb.norm():
            assert s.norm() == max(xa.norm(), xb.norm())
        prod = xa * xb
        assert prod.norm() == xa.norm() * xb.norm()


def test_division_rules():
    p = 5
    x = padic_of_rational(7, p, 4)
    u = padic_of_rational(3, p, 4)
    assert (x / u * u).residue(4) == x.residue(4)
    nonunit = padic_of_rational(10, p, 4)
    with pytest.raises(PrecisionError):
        x / nonunit
    with pytest.raises(ZeroDivisionError):
        x / padic_of_rational(0, p, 4)


def test_teichmuller_examples():
    assert teichmuller(1, 5, 3).unit == 1
    w = teichmuller(2, 5, 3)
    assert w.unit == 57
    assert pow(57, 4, 125) == 1
    v = teichmuller(2, 3, 4)
    assert v.unit == 80  # i.e. -1 mod 81
    with pytest.raises(ValueError):
        teichmuller(10, 5, 3)
    assert teichmuller_total(10, 5, 3).is_exact_zero


def test_teichmuller_characterization():
    for p in (3, 5, 7, 11):
        N = 4
        for n in range(1, 25):
            if n % p == 0:
                continue
            w = teichmuller(n, p, N)
            assert w.unit % p == n % p
            assert pow(w.unit, p - 1, p**N) == 1
    # fixed on roots of unity already present
    assert teichmuller(pow(2, 4, 125) and 57, 5, 3).unit == 57


def test_crt_pair():
    assert crt_pair(2, 9, 3, 25) == 128
    assert crt_pair(0, 9, 0, 25) == 0
    assert crt_pair(1, 9, 1, 25) == 1
    with pytest.raises(ValueError):
        crt_pair(1, 10, 1, 4)


def test_double_teichmuller():
    assert double_teichmuller(1, 3, 5, 2, 2) == 1
    x = double_teichmuller(2, 3, 5, 2, 2)
    assert x == 107
    assert pow(107, 2, 9) == 1 and pow(107, 4, 25) == 1
    assert double_teichmuller(4, 3, 5, 1, 1) == 4
    for n, p, q in ((7, 3, 5), (8, 5, 7), (11, 5, 7)):
        w = double_teichmuller(n, p, q, 3, 3)
        assert w % p == n % p and w % q == n % q
        assert pow(w, p - 1, p**3) == 1 and pow(w, q - 1, q**3) == 1
    with pytest.raises(ValueError):
        double_teichmuller(6, 3, 5, 2, 2)


def test_double_teichmuller_reduces_to_single():
    for n in (2, 7, 11, 13):
        for p, q, M, L in ((3, 5, 3, 2), (5, 7, 2, 3)):
            if n % p == 0 or n % q == 0:
                continue
            w = double_teichmuller(n, p, q, M, L)
            assert w % p**M == teichmuller(n, p, M).unit
            assert w % q**L == teichmuller(n, q, L).unit


def test_angle_bracket():
    bp, bq = angle_bracket(1, 3, 5, 2, 2)
    assert bp.unit == 1 and bq.unit == 1
    bp, bq = angle_bracket(2, 3, 5, 2, 2)
    assert bp.unit % 3 == 1 and bq.unit % 5 == 1
    bp, bq = angle_bracket(7, 3, 5, 1, 1)
    assert bp.unit == 1 and bq.unit == 1


def test_ideal_shadow():
    assert ideal_shadow(12, 2) == 2
    assert ideal_shadow(7, 5) == 0
    assert ideal_shadow(125, 5) == 3


def test_text_round_trips():
    cases = [
        padic_of_rational(Fraction(1, 3), 5, 3),
        padic_of_rational(50, 5, 4),
        padic_of_rational(Fraction(7, 5), 5, 3),
        padic_of_rational(0, 5, 3),
        PadicNumber.zero_mod(5, 4),
    ]
    for x in cases:
        assert PadicNumber.parse_triple(x.to_triple_string(), 5) == x if not x.is_exact_zero else True
        back = PadicNumber.parse_digit_string(x.to_digit_string(), 5)
        if x.is_exact_zero:
            assert back.is_exact_zero
        elif x.unit == 0:
            assert back.unit == 0 and back.valuation == x.valuation
        else:
            assert (back.valuation, back.unit) == (x.valuation, x.unit)


def test_digit_string_format():
    x = padic_of_rational(Fraction(1, 3), 5, 3)
    assert x.to_digit_string() == "2 + 3*5 + 1*5^2 + O(5^3)"
    y = padic_of_rational(Fraction(7, 5), 5, 2)
    assert y.to_digit_string() == "2*5^-1 + 1 + O(5^1)"
    assert padic_of_rational(0, 3, 2).to_digit_string() == "0"


def test_valuation_helper():
    assert padic_valuation(Fraction(50), 5) == 2
    assert padic_valuation(Fraction(1, 25), 5) == -2
    assert padic_valuation(Fraction(0), 5) > 10**6
