"""Truncated p-adic arithmetic.

A ``PadicNumber`` is the finite-precision surrogate of a p-adic value: it
carries a prime ``p``, a valuation ``v``, a unit residue ``unit`` coprime to
``p``, and a relative precision ``precision`` (the value is known modulo
p^(v + precision) up to the stated unit).  Exact zero has infinite valuation.
A fully cancelled sum is representable as an *inexact zero*: ``unit == 0``
with finite ``valuation`` M, meaning only "congruent to 0 mod p^M" is known.

Subtraction of nearly equal values loses relative precision; every operation
propagates the minimum guaranteed absolute precision of its inputs.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

INFINITY = math.inf


class PrecisionError(ArithmeticError):
    """Raised when an operation needs digits that are not tracked."""


def padic_valuation(x: Fraction | int, p: int) -> int | float:
    """v_p(x) for a rational x; +inf for x = 0."""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class PadicNumber:
    __slots__ = ("p", "valuation", "unit", "precision")

    def __init__(self, p: int, valuation, unit: int, precision) -> None:
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        self.p = p
        if valuation is INFINITY or valuation == INFINITY:
            # exact zero
            self.valuation = INFINITY
            self.unit = 0
            self.precision = INFINITY
            return
        valuation = int(valuation)
        if unit == 0:
            # inexact zero: only "v >= valuation" is known
            self.valuation = valuation
            self.unit = 0
            self.precision = 0
            return
        if precision is INFINITY or precision < 1:
            raise ValueError("nonzero values need relative precision >= 1")
        precision = int(precision)
        unit %= p**precision
        if unit % p == 0:
            raise ValueError("unit must be coprime to p")
        self.valuation = valuation
        self.unit = unit
        self.precision = precision

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact_zero(cls, p: int) -> "PadicNumber":
        return cls(p, INFINITY, 0, INFINITY)

    @classmethod
    def zero_mod(cls, p: int, abs_precision: int) -> "PadicNumber":
        """The class of values congruent to 0 mod p^abs_precision."""
        return cls(p, abs_precision, 0, 0)

    @classmethod
    def from_rational(cls, x: Fraction | int, p: int, precision: int) -> "PadicNumber":
        """Reduce a rational to valuation + unit mod p^precision."""
        x = Fraction(x)
        if x == 0:
            return cls.exact_zero(p)
        v = padic_valuation(x, p)
        scaled = x / Fraction(p) ** v
        mod = p**precision
        unit = scaled.numerator * pow(scaled.denominator, -1, mod) % mod
        return cls(p, v, unit, precision)

    # -- inspection --------------------------------------------------------

    @property
    def is_exact_zero(self) -> bool:
        return self.valuation is INFINITY or self.valuation == INFINITY

    @property
    def is_inexact_zero(self) -> bool:
        return self.unit == 0 and not self.is_exact_zero

    @property
    def abs_precision(self):
        """Exponent A such that the value is known modulo p^A."""
        if self.is_exact_zero:
            return INFINITY
        return self.valuation + self.precision

    def residue(self, abs_prec: int) -> int:
        """The integer representative of the value mod p^abs_prec (needs v >= 0)."""
        if self.is_exact_zero:
            return 0
        if abs_prec > self.abs_precision:
            raise PrecisionError(
                f"residue mod {self.p}^{abs_prec} exceeds tracked precision "
                f"{self.p}^{self.abs_precision}"
            )
        if self.valuation < 0:
            raise PrecisionError("residue undefined for negative valuation")
        if self.unit == 0:
            return 0
        return self.unit * self.p**self.valuation % self.p**abs_prec

    def congruent_mod(self, other: "PadicNumber", abs_prec: int) -> bool:
        """True when (self - other) has valuation >= abs_prec."""
        diff = self - other
        if diff.is_exact_zero:
            return True
        if diff.unit == 0:
            if diff.valuation < abs_prec:
                raise PrecisionError("congruence undecidable at this precision")
            return True
        return diff.valuation >= abs_prec

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "PadicNumber") -> None:
        if not isinstance(other, PadicNumber):
            raise TypeError("expected PadicNumber")
        if other.p != self.p:
            raise ValueError("mixed primes")

    def __neg__(self) -> "PadicNumber":
        if self.unit == 0:
            return self
        return PadicNumber(self.p, self.valuation, -self.unit, self.precision)

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        self._check(other)
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        p = self.p
        abs_prec = min(self.abs_precision, other.abs_precision)
        vmin = min(self.valuation, other.valuation)
        digits = abs_prec - vmin
        if digits <= 0:
            raise PrecisionError("sum retains no tracked digits")
        mod = p**digits
        a = self.unit * p ** (self.valuation - vmin) % mod
        b = other.unit * p ** (other.valuation - vmin) % mod
        r = (a + b) % mod
        if r == 0:
            return PadicNumber.zero_mod(p, abs_prec)
        shift = 0
        while r % p == 0:
            r //= p
            shift += 1
        return PadicNumber(p, vmin + shift, r, digits - shift)

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        return self + (-other)

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        self._check(other)
        if self.is_exact_zero or other.is_exact_zero:
            return PadicNumber.exact_zero(self.p)
        if self.unit == 0 or other.unit == 0:
            # product of "0 mod p^M" with anything of valuation v: 0 mod p^(M+v)
            return PadicNumber.zero_mod(self.p, self.valuation + other.valuation)
        prec = min(self.precision, other.precision)
        return PadicNumber(
            self.p, self.valuation + other.valuation, self.unit * other.unit, prec
        )

    def __truediv__(self, other: "PadicNumber") -> "PadicNumber":
        self._check(other)
        if other.is_exact_zero or other.unit == 0:
            raise ZeroDivisionError("division by (approximate) zero")
        if other.valuation != 0:
            raise PrecisionError(
                "division by a non-unit; rescale through the rational constructor"
            )
        if self.is_exact_zero:
            return self
        prec = min(self.precision, other.precision) if self.unit else other.precision
        if self.unit == 0:
            return PadicNumber.zero_mod(self.p, self.valuation)
        inv = pow(other.unit, -1, self.p**prec)
        return PadicNumber(self.p, self.valuation, self.unit * inv, prec)

    def __pow__(self, e: int) -> "PadicNumber":
        if not isinstance(e, int):
            raise TypeError("integer exponents only")
        if e < 0:
            if self.valuation != 0 or self.unit == 0:
                raise PrecisionError("negative power of a non-unit")
            inv = pow(self.unit, -1, self.p**self.precision)
            return PadicNumber(self.p, 0, inv, self.precision) ** (-e)
        if self.is_exact_zero:
            return self if e else PadicNumber.from_rational(1, self.p, 1)
        if self.unit == 0:
            if e == 0:
                raise PrecisionError("0^0 undetermined for approximate zero")
            return PadicNumber.zero_mod(self.p, self.valuation * e)
        if e == 0:
            return PadicNumber(self.p, 0, 1, self.precision)
        u = pow(self.unit, e, self.p**self.precision)
        return PadicNumber(self.p, self.valuation * e, u, self.precision)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PadicNumber)
            and self.p == other.p
            and self.valuation == other.valuation
            and self.unit == other.unit
            and self.precision == other.precision
        )

    def __hash__(self):
        return hash((self.p, self.valuation, self.unit, self.precision))

    # -- p-adic structure --------------------------------------------------

    def norm(self) -> Fraction:
        """|x|_p = p^(-v); 0 for exact zero."""
        if self.is_exact_zero:
            return Fraction(0)
        if self.unit == 0:
            raise PrecisionError("norm undetermined: value only known to be small")
        return Fraction(1, self.p) ** self.valuation

    def digits(self, count: int) -> list[int]:
        """Digits a_0..a_{count-1} of the expansion sum a_i p^i (needs v >= 0)."""
        if count < 0:
            raise ValueError("count must be >= 0")
        if self.is_exact_zero:
            return [0] * count
        if self.valuation < 0:
            raise ValueError("digit expansion needs valuation >= 0")
        if count > self.abs_precision:
            raise PrecisionError(
                f"requested {count} digits but only {self.abs_precision} tracked"
            )
        r = self.residue(count)
        out = []
        for _ in range(count):
            r, d = divmod(r, self.p)
            out.append(d)
        return out

    # -- text forms ----------------------------------------------------------

    def to_triple_string(self) -> str:
        if self.is_exact_zero:
            return "(inf, 0, inf)"
        return f"({self.valuation}, {self.unit}, {self.precision})"

    def to_digit_string(self) -> str:
        """Render as "a0 + a1*p + a2*p^2 + ... + O(p^A)"."""
        if self.is_exact_zero:
            return "0"
        if self.unit == 0:
            return f"O({self.p}^{self.valuation})"
        terms = []
        u = self.unit
        for i in range(self.precision):
            u, d = divmod(u, self.p)
            if d:
                e = self.valuation + i
                if e == 0:
                    terms.append(f"{d}")
                elif e == 1:
                    terms.append(f"{d}*{self.p}")
                else:
                    terms.append(f"{d}*{self.p}^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.p}^{self.abs_precision})"

    @classmethod
    def parse_triple(cls, text: str, p: int) -> "PadicNumber":
        m = re.fullmatch(r"\(\s*(inf|-?\d+)\s*,\s*(\d+)\s*,\s*(inf|\d+)\s*\)", text.strip())
        if not m:
            raise ValueError(f"not a (v, unit, N) triple: {text!r}")
        if m.group(1) == "inf":
            return cls.exact_zero(p)
        v, unit = int(m.group(1)), int(m.group(2))
        if unit == 0:
            return cls.zero_mod(p, v)
        return cls(p, v, unit, int(m.group(3)))

    @classmethod
    def parse_digit_string(cls, text: str, p: int) -> "PadicNumber":
        text = text.strip()
        if text == "0":
            return cls.exact_zero(p)
        m = re.fullmatch(rf"O\({p}\^(-?\d+)\)", text)
        if m:
            return cls.zero_mod(p, int(m.group(1)))
        m = re.fullmatch(rf"(.*?)\s*\+\s*O\({p}\^(-?\d+)\)", text)
        if not m:
            raise ValueError(f"missing precision marker in {text!r}")
        abs_prec = int(m.group(2))
        total = Fraction(0)
        for term in m.group(1).split("+"):
            term = term.strip()
            if term == "0":
                continue
            tm = re.fullmatch(rf"(\d+)(?:\*{p}(?:\^(-?\d+))?)?", term)
            if not tm:
                raise ValueError(f"bad digit term {term!r}")
            d = int(tm.group(1))
            if "*" not in term:
                e = 0
            elif tm.group(2) is None:
                e = 1
            else:
                e = int(tm.group(2))
            total += d * Fraction(p) ** e
        if total == 0:
            return cls.zero_mod(p, abs_prec)
        v = padic_valuation(total, p)
        return cls.from_rational(total, p, abs_prec - v)

    def __repr__(self) -> str:
        if self.is_exact_zero:
            return f"PadicNumber(p={self.p}, 0)"
        return f"PadicNumber(p={self.p}, v={self.valuation}, unit={self.unit}, N={self.precision})"


# -- module-level operations -------------------------------------------------


def padic_of_rational(x: Fraction | int, p: int, precision: int) -> PadicNumber:
    """Truncate a rational to a p-adic number at the given relative precision."""
    return PadicNumber.from_rational(x, p, precision)


def padic_reduce_abs(x: Fraction | int, p: int, abs_precision: int) -> PadicNumber:
    """Reduce an exact rational modulo p^abs_precision (absolute precision)."""
    x = Fraction(x)
    if x == 0:
        return PadicNumber.exact_zero(p)
    v = padic_valuation(x, p)
    if v >= abs_precision:
        return PadicNumber.zero_mod(p, abs_precision)
    return PadicNumber.from_rational(x, p, int(abs_precision - v))


def padic_norm(x: PadicNumber) -> Fraction:
    return x.norm()


def digits(x: PadicNumber, count: int) -> list[int]:
    return x.digits(count)


def teichmuller(n: int, p: int, precision: int) -> PadicNumber:
    """The (p-1)-st root of unity congruent to n mod p, by p-power iteration.

    Iterating x <- x^p mod p^N converges quadratically; N iterations are
    always enough and the fixed point is asserted.
    """
    if n % p == 0:
        raise ValueError("teichmuller needs gcd(n, p) = 1; see teichmuller_total")
    mod = p**precision
    x = n % mod
    for _ in range(precision + 1):
        nxt = pow(x, p, mod)
        if nxt == x:
            break
        x = nxt
    if pow(x, p, mod) != x:
        raise ArithmeticError("teichmuller iteration failed to stabilize")
    return PadicNumber(p, 0, x, precision)


def teichmuller_total(n: int, p: int, precision: int) -> PadicNumber:
    """Total variant: multiples of p map to exact zero."""
    if n % p == 0:
        return PadicNumber.exact_zero(p)
    return teichmuller(n, p, precision)


def crt_pair(a: int, modulus_a: int, b: int, modulus_b: int) -> int:
    """The unique x mod (modulus_a * modulus_b) with x = a, b in the two moduli."""
    if math.gcd(modulus_a, modulus_b) != 1:
        raise ValueError("moduli must be coprime")
    inv = pow(modulus_a, -1, modulus_b)
    x = a + modulus_a * ((b - a) * inv % modulus_b)
    return x % (modulus_a * modulus_b)


def double_teichmuller(n: int, p: int, q: int, prec_p: int, prec_q: int) -> int:
    """CRT lift of the two Teichmuller representatives, mod p^prec_p * q^prec_q.

    Satisfies x = n mod p and mod q, x^(p-1) = 1 mod p^prec_p and
    x^(q-1) = 1 mod q^prec_q.  Any other lift is congruent at this precision.
    """
    if p == q:
        raise ValueError("primes must be distinct")
    if n % p == 0 or n % q == 0:
        raise ValueError("double_teichmuller needs gcd(n, pq) = 1")
    wp = teichmuller(n, p, prec_p).unit
    wq = teichmuller(n, q, prec_q).unit
    return crt_pair(wp, p**prec_p, wq, q**prec_q)


def angle_bracket(
    b: int, p: int, q: int, prec_p: int, prec_q: int
) -> tuple[PadicNumber, PadicNumber]:
    """<b> = b / omega_{p,q}(b), reduced mod p^prec_p and mod q^prec_q.

    Each component lies in 1 + pZ_p resp. 1 + qZ_q.
    """
    w = double_teichmuller(b, p, q, prec_p, prec_q)
    mp, mq = p**prec_p, q**prec_q
    up = b * pow(w % mp, -1, mp) % mp
    uq = b * pow(w % mq, -1, mq) % mq
    return PadicNumber(p, 0, up, prec_p), PadicNumber(q, 0, uq, prec_q)


def ideal_shadow(m: int, p: int) -> int:
    """Exponent r with the reduction of the ideal mZ landing on p^r Z_p."""
    if m < 1:
        raise ValueError("m must be >= 1")
    r = 0
    while m % p == 0:
        m //= p
        r += 1
    return r
