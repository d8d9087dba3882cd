"""Zeta branches: single-prime interpolation of -(1 - p^(n-1)) B_n / n along
congruence classes mod (p-1), the two-prime analogue along classes mod
(p-1)(q-1), Kummer congruence verifiers, the everywhere-interpolable power
function, and the two-prime Hurwitz values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .padics import PadicNumber, angle_bracket, padic_valuation
from .rationals import bernoulli, binomial_poly


def kl_value(p: int, n: int) -> Fraction:
    """zeta_p(1-n) = -(1 - p^(n-1)) B_n / n for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return -(1 - Fraction(p) ** (n - 1)) * bernoulli(n) / n


def double_value(p: int, q: int, n: int) -> Fraction:
    """zeta_{p,q}(1-n) = (1 - p^(n-1))(1 - q^(n-1)) * (-B_n/n) for n >= 2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if p == q:
        raise ValueError("primes must be distinct")
    return (1 - Fraction(p) ** (n - 1)) * (1 - Fraction(q) ** (n - 1)) * (-bernoulli(n) / n)


class HypothesisError(ValueError):
    """A congruence-check precondition failed (not a congruence failure)."""


@dataclass
class CongruenceResult:
    ok: bool
    required: int
    valuation: int | float  # +inf when the difference is exactly 0


def kummer_check(p: int, i: int, j: int, n: int) -> CongruenceResult:
    """v_p of (1-p^(i-1))B_i/i - (1-p^(j-1))B_j/j must be >= n+1.

    Hypotheses: (p-1) does not divide i, and i = j mod p^n (p-1); violations
    raise HypothesisError so they cannot masquerade as congruence failures.
    """
    if i < 2 or j < 2:
        raise HypothesisError("need i, j >= 2")
    if i % (p - 1) == 0:
        raise HypothesisError(f"(p-1) divides i = {i}")
    if (i - j) % (p**n * (p - 1)) != 0:
        raise HypothesisError(f"i != j mod p^n(p-1) for n={n}")
    diff = kl_value(p, i) - kl_value(p, j)
    v = padic_valuation(diff, p)
    return CongruenceResult(ok=v >= n + 1, required=n + 1, valuation=v)


def extended_kummer_check(p: int, q: int, i: int, j: int, n: int) -> dict[int, CongruenceResult]:
    """Two-prime congruence on (1-p^(.-1))(1-q^(.-1))B_./., mod p^(n+1) and q^(n+1)."""
    if p == q:
        raise HypothesisError("primes must be distinct")
    if i < 2 or j < 2:
        raise HypothesisError("need i, j >= 2")
    if i % (p - 1) == 0 or i % (q - 1) == 0:
        raise HypothesisError("neither (p-1) nor (q-1) may divide i")
    if (i - j) % (p**n * (p - 1)) != 0 or (i - j) % (q**n * (q - 1)) != 0:
        raise HypothesisError("i != j mod p^n(p-1) and q^n(q-1)")
    diff = double_value(p, q, i) - double_value(p, q, j) if i != j else Fraction(0)
    out = {}
    for prime in (p, q):
        v = padic_valuation(diff, prime)
        out[prime] = CongruenceResult(ok=v >= n + 1, required=n + 1, valuation=v)
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class KLBranch:
    """One branch of the p-adic zeta function: indices n = s0 + (p-1)t.

    For p >= 5 any s0 in {0..p-2} is allowed; for p in {2, 3} the only
    congruence class is s0 = 0.  Branches with s0 != 0 satisfy the Kummer
    hypotheses, so representative-independence is certified at one extra
    digit and outputs are reduced at precision N.  The s0 = 0 branch carries
    the pole at s = 0: its outputs are the canonical representative's values
    reduced at N-1 (where representatives still agree for p >= 5); for
    p in {2, 3} representative-independence is not certified at all.
    """

    p: int
    s0: int
    precision: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError("p must be prime")
        if self.p in (2, 3):
            if self.s0 != 0:
                raise ValueError("for p in {2, 3} the only branch is s0 = 0")
        elif not 0 <= self.s0 <= self.p - 2:
            raise ValueError("s0 must lie in {0..p-2}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")

    @property
    def certified_precision(self) -> int:
        return self.precision if self.s0 != 0 else max(self.precision - 1, 1)


def kl_branch_eval(branch: KLBranch, s) -> PadicNumber:
    """Evaluate the branch at a p-adic integer s.

    The smallest non-negative representative t of s mod p^N with
    n = s0 + (p-1)t >= 1 is used; Kummer makes any other representative
    congruent mod p^(N+1) on branches with s0 != 0, so the output is
    conservatively certified at precision N (N-1 on the pole branch).
    """
    p, N = branch.p, branch.precision
    if isinstance(s, PadicNumber):
        if s.p != p:
            raise ValueError("mixed primes")
        if s.is_exact_zero:
            t = 0
            exact_zero = True
        else:
            if s.valuation < 0:
                raise ValueError("s must be a p-adic integer")
            t = s.residue(min(N, s.abs_precision))
            exact_zero = False
    else:
        t = int(s) % p**N
        exact_zero = int(s) == 0
    if branch.s0 == 0 and exact_zero:
        raise ZeroDivisionError("the branch s0 = 0 has its pole at s = 0")
    if branch.s0 + (p - 1) * t < 1:
        t += p**N
    n = branch.s0 + (p - 1) * t
    return PadicNumber.from_rational(kl_value(p, n), p, branch.certified_precision)


@dataclass(frozen=True)
class DoubleBranch:
    """A branch of the two-prime zeta: Bernoulli indices s0 + sigma(p-1)(q-1) + 1.

    Regular branches must keep both Kummer hypotheses alive, so s0 = -1 (the
    pole branch) and every s0 with s0 = -1 mod (p-1) or mod (q-1) are
    rejected, alongside the positive multiples of (p-1) and (q-1).  Use
    ``pole=True`` to construct the pole branch explicitly.
    """

    p: int
    q: int
    sigma0: int
    pole: bool = False

    def __post_init__(self):
        p, q, s0 = self.p, self.q, self.sigma0
        if p == q or not (_is_prime(p) and _is_prime(q)):
            raise ValueError("p, q must be distinct primes")
        if p < 5 or q < 5:
            raise ValueError("double branches need p, q >= 5")
        top = (p - 1) * (q - 1) - 2
        if not -1 <= s0 <= top:
            raise ValueError(f"sigma0 must lie in [-1, {top}]")
        if self.pole:
            if s0 != -1:
                raise ValueError("only sigma0 = -1 is the pole branch")
            return
        if s0 in excluded_sigma0(p, q):
            raise ValueError(f"sigma0 = {s0} is excluded for (p, q) = ({p}, {q})")


def excluded_sigma0(p: int, q: int) -> set[int]:
    """sigma0 values with no regular branch.

    Contains -1, the listed multiples k(p-1) (k = 1..q-2) and k(q-1)
    (k = 1..p-2) from both sides, and every class with sigma0 = -1 mod (p-1)
    or mod (q-1), where the index s0 + sigma(p-1)(q-1) + 1 falls out of the
    Kummer hypotheses.
    """
    out = {-1}
    top = (p - 1) * (q - 1) - 2
    out.update(k * (p - 1) for k in range(1, q - 1))
    out.update(k * (q - 1) for k in range(1, p - 1))
    for s0 in range(0, top + 1):
        if (s0 + 1) % (p - 1) == 0 or (s0 + 1) % (q - 1) == 0:
            out.add(s0)
    return out


def double_branch_eval(
    branch: DoubleBranch, sigma: int, precision: int
) -> tuple[PadicNumber, PadicNumber]:
    """Value -(1-p^k)(1-q^k) B_{k+1}/(k+1) at k = sigma0 + sigma(p-1)(q-1),
    reduced mod p^N and q^N simultaneously."""
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    if branch.pole and sigma == 0:
        raise ZeroDivisionError("pole branch at sigma = 0")
    p, q = branch.p, branch.q
    k = branch.sigma0 + sigma * (p - 1) * (q - 1)
    value = -(1 - Fraction(p) ** k) * (1 - Fraction(q) ** k) * bernoulli(k + 1) / (k + 1)
    return (
        PadicNumber.from_rational(value, p, precision),
        PadicNumber.from_rational(value, q, precision),
    )


def universal_power(
    n: int, s: int, primes: tuple[int, ...], precision: int
) -> dict[int, PadicNumber]:
    """n^s for n = 1 mod prod(primes), via the binomial series per prime.

    The series sum_k C(s,k)(n-1)^k is truncated per prime as soon as
    |(n-1)^k|_p < p^-precision; for s >= 0 the partial sum is congruent to
    the exact power mod p^precision.
    """
    P = 1
    for p in primes:
        P *= p
    if (n - 1) % P != 0:
        raise ValueError("need n = 1 mod the product of the primes")
    out = {}
    for p in primes:
        v = padic_valuation(n - 1, p) if n != 1 else None
        if n == 1:
            out[p] = PadicNumber.from_rational(1, p, precision)
            continue
        cutoff = precision // v + 1
        acc = Fraction(0)
        for k in range(cutoff + 1):
            acc += binomial_poly(s, k) * (n - 1) ** k
        out[p] = PadicNumber.from_rational(acc, p, precision)
    return out


def pq_hurwitz(
    n: int, b: int, F: int, p: int, q: int, precision: int
) -> tuple[PadicNumber, PadicNumber]:
    """Two-prime Hurwitz value at a non-positive integer n.

    -(1/(1-n)) (1/F) <b>^(1-n) sum_{k=0}^{1-n} C(1-n,k) (F/b)^k B_k, with the
    angle bracket taken through the CRT Teichmuller representative and the
    whole expression reduced per prime.  The binomial sum is p- and
    q-integral (von Staudt-Clausen), which is asserted.
    """
    if n > 0:
        raise ValueError("n must be <= 0 (n = 1 is the pole)")
    if not 0 < b < F:
        raise ValueError("need 0 < b < F")
    if F % (p * q) != 0:
        raise ValueError("pq must divide F")
    if gcd(b, p * q) != 1:
        raise ValueError("b must be coprime to pq")
    m = 1 - n
    acc = Fraction(0)
    for k in range(m + 1):
        acc += binomial_poly(m, k) * Fraction(F, b) ** k * bernoulli(k)
    if padic_valuation(acc, p) < 0 or padic_valuation(acc, q) < 0:
        raise ArithmeticError("binomial Bernoulli sum lost integrality")
    bp, bq = angle_bracket(b, p, q, precision, precision)
    prefactor = -Fraction(1, m) * Fraction(1, F)
    out = []
    for prime, bracket in ((p, bp), (q, bq)):
        val = (
            PadicNumber.from_rational(prefactor, prime, precision)
            * bracket**m
            * PadicNumber.from_rational(acc, prime, precision)
        )
        out.append(val)
    return out[0], out[1]
