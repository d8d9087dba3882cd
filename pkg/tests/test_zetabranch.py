import random
from fractions import Fraction

import pytest

from pqzeta.padics import PadicNumber, padic_of_rational, padic_valuation
from pqzeta.zetabranch import (
    DoubleBranch,
    HypothesisError,
    KLBranch,
    double_branch_eval,
    double_value,
    excluded_sigma0,
    extended_kummer_check,
    kl_branch_eval,
    kl_value,
    kummer_check,
    pq_hurwitz,
    universal_power,
)


def test_kl_values():
    assert kl_value(5, 2) == Fraction(1, 3)
    assert kl_value(5, 3) == 0
    assert kl_value(7, 4) == Fraction(-57, 20)


def test_kummer_examples():
    res = kummer_check(5, 2, 6, 0)
    assert res.ok and res.valuation == 1
    res = kummer_check(7, 2, 2, 1)
    assert res.ok  # zero difference
    with pytest.raises(HypothesisError):
        kummer_check(5, 4, 8, 0)  # (p-1) | i
    with pytest.raises(HypothesisError):
        kummer_check(5, 2, 3, 0)  # wrong congruence class


def test_kl_branch_construction():
    KLBranch(p=5, s0=2, precision=3)
    KLBranch(p=3, s0=0, precision=2)
    with pytest.raises(ValueError):
        KLBranch(p=3, s0=1, precision=2)
    with pytest.raises(ValueError):
        KLBranch(p=5, s0=9, precision=2)
    with pytest.raises(ValueError):
        KLBranch(p=6, s0=1, precision=2)


def test_kl_branch_values():
    branch = KLBranch(p=5, s0=2, precision=3)
    v = kl_branch_eval(branch, 0)  # n = 2
    assert v == padic_of_rational(Fraction(1, 3), 5, 3)
    odd = KLBranch(p=5, s0=1, precision=3)
    assert kl_branch_eval(odd, 1).is_exact_zero  # B_5 = 0: odd branch vanishes


def test_kl_branch_zero_function_on_odd_classes():
    for s0 in (1, 3):
        branch = KLBranch(p=5, s0=s0, precision=2)
        for t in range(1, 5):
            assert kl_branch_eval(branch, t).is_exact_zero


def test_kl_branch_pole():
    branch = KLBranch(p=5, s0=0, precision=2)
    with pytest.raises(ZeroDivisionError):
        kl_branch_eval(branch, 0)
    with pytest.raises(ZeroDivisionError):
        kl_branch_eval(branch, PadicNumber.exact_zero(5))
    # non-exact zero input picks t = p^N instead
    v = kl_branch_eval(branch, 25)
    assert not v.is_exact_zero


def test_kl_branch_representative_independence():
    rng = random.Random(19)
    for _ in range(30):
        p = rng.choice([5, 7])
        s0 = rng.choice([s for s in range(1, p - 1)])
        N = rng.choice([1, 2])
        t = rng.randint(0, 4)
        k = rng.randint(1, 2)
        n1 = s0 + (p - 1) * t
        n2 = s0 + (p - 1) * (t + k * p**N)
        if n1 < 1:
            continue
        diff = kl_value(p, n1) - kl_value(p, n2)
        assert padic_valuation(diff, p) >= N + 1


def test_double_values():
    assert double_value(5, 7, 2) == -2
    assert double_value(3, 5, 3) == 0
    assert double_value(5, 7, 4) == Fraction(5301, 15)


def test_extended_kummer():
    out = extended_kummer_check(5, 7, 2, 26, 0)
    assert out[5].ok and out[7].ok
    out = extended_kummer_check(5, 7, 9, 9, 1)
    assert out[5].ok and out[7].ok
    with pytest.raises(HypothesisError):
        extended_kummer_check(5, 7, 4, 28, 0)
    with pytest.raises(HypothesisError):
        extended_kummer_check(5, 7, 6, 30, 0)  # (q-1) | i


def test_excluded_sigma0_set():
    exc = excluded_sigma0(5, 7)
    assert -1 in exc
    assert 4 in exc and 8 in exc  # p-side multiples
    assert 6 in exc and 12 in exc  # q-side multiples
    assert 3 in exc and 7 in exc  # s0 = -1 mod (p-1)
    assert 5 in exc and 11 in exc  # s0 = -1 mod (q-1)
    assert 0 not in exc and 1 not in exc and 2 not in exc


def test_double_branch_construction_and_pole():
    DoubleBranch(p=5, q=7, sigma0=0)
    DoubleBranch(p=5, q=7, sigma0=1)
    with pytest.raises(ValueError):
        DoubleBranch(p=5, q=7, sigma0=-1)
    with pytest.raises(ValueError):
        DoubleBranch(p=5, q=7, sigma0=3)
    with pytest.raises(ValueError):
        DoubleBranch(p=3, q=7, sigma0=0)
    pole = DoubleBranch(p=5, q=7, sigma0=-1, pole=True)
    with pytest.raises(ZeroDivisionError):
        double_branch_eval(pole, 0, 2)


def test_double_branch_values():
    branch = DoubleBranch(p=5, q=7, sigma0=0)
    vp, vq = double_branch_eval(branch, 0, 3)
    assert vp.is_exact_zero and vq.is_exact_zero  # (1 - p^0) = 0
    branch = DoubleBranch(p=5, q=7, sigma0=1)
    vp, vq = double_branch_eval(branch, 0, 3)
    want = double_value(5, 7, 2)
    assert want == -2
    assert vp == padic_of_rational(want, 5, 3)
    assert vq == padic_of_rational(want, 7, 3)


def test_double_branch_representative_independence():
    rng = random.Random(29)
    p, q = 5, 7
    M = (p - 1) * (q - 1)
    allowed = [s for s in range(0, M - 1) if s not in excluded_sigma0(p, q)]
    for _ in range(12):
        s0 = rng.choice(allowed)
        N = 1
        sigma, k = rng.randint(0, 1), 1
        i = s0 + M * sigma + 1
        j = s0 + M * (sigma + k * p**N) + 1
        if i < 2:
            continue
        diff = double_value(p, q, i) - double_value(p, q, j)
        assert padic_valuation(diff, p) >= N + 1


def test_double_branch_reduces_to_single_construction():
    # per prime, the double value is the single value with an extra Euler factor
    p, q = 5, 7
    for n in range(2, 30):
        assert double_value(p, q, n) == (1 - Fraction(q) ** (n - 1)) * kl_value(p, n)


def test_universal_power_examples():
    out = universal_power(31, 5, (2, 3, 5), 2)
    assert out[5].residue(2) == pow(31, 5, 25) == 1
    out = universal_power(1, 3, (2, 3, 5), 3)
    assert all(v.residue(3) == 1 for v in out.values())
    with pytest.raises(ValueError):
        universal_power(10, 2, (2, 3, 5), 2)


def test_universal_power_matches_modular_exponentiation():
    primes = (2, 3, 5, 7)
    n, N = 211, 4
    for s in range(0, 51, 7):
        out = universal_power(n, s, primes, N)
        for p in primes:
            assert out[p].residue(N) == pow(n, s, p**N)


def test_universal_power_negative_exponent():
    out = universal_power(211, -3, (2, 3, 5, 7), 3)
    for p in (2, 3, 5, 7):
        direct = pow(pow(211, -1, p**3), 3, p**3)
        assert out[p].residue(3) == direct


def test_universal_power_continuity():
    n = 211
    for p in (2, 3, 5, 7):
        for m in range(4):
            for k in (1, 2, 5):
                lhs = pow(n, k + p**m, p ** (m + 1))
                rhs = pow(n, k, p ** (m + 1))
                assert lhs == rhs


def test_pq_hurwitz_base_case():
    p, q = 5, 7
    F = p * q
    vp, vq = pq_hurwitz(0, 1, F, p, q, 3)
    want = -(Fraction(1, F)) * (1 - Fraction(F, 2))  # -(1/F)(B_0 + F B_1)
    assert vp == padic_of_rational(want, p, 3)
    assert vq == padic_of_rational(want, q, 3)


def test_pq_hurwitz_guards():
    with pytest.raises(ValueError):
        pq_hurwitz(1, 1, 35, 5, 7, 2)
    with pytest.raises(ValueError):
        pq_hurwitz(0, 5, 35, 5, 7, 2)
    with pytest.raises(ValueError):
        pq_hurwitz(0, 1, 10, 5, 7, 2)


def test_pq_hurwitz_p_side_matches_single_prime_recomputation():
    # reduction mod p of the p-side value only sees the single-prime bracket
    from pqzeta.padics import teichmuller

    p, q = 5, 7
    F = 35
    for n in (0, -1, -2):
        for b in (2, 3, 4):
            if b % p == 0 or b % q == 0:
                continue
            vp, _ = pq_hurwitz(n, b, F, p, q, 2)
            m = 1 - n
            from pqzeta.rationals import bernoulli, binomial_poly

            acc = sum(
                binomial_poly(m, k) * Fraction(F, b) ** k * bernoulli(k) for k in range(m + 1)
            )
            wp = teichmuller(b, p, 2).unit
            bracket = b * pow(wp, -1, p**2) % p**2
            single = (
                padic_of_rational(-Fraction(1, m * F), p, 2)
                * PadicNumber(p, 0, bracket, 2) ** m
                * padic_of_rational(acc, p, 2)
            )
            assert vp.congruent_mod(single, 1)
