"""Morita p-adic gamma function and the two-prime triviality apparatus.

The gamma function here is the signed restricted factorial
Gamma_p(n) = (-1)^n * prod_{1 <= j < n, p does not divide j} j, with
Gamma_p(0) = 1 and Gamma_p(1) = -1.  The second half of the module deals
with chains of modular inverses: explicit inverse formulas for residues of
the shape (m p^r + t)/v, and the search for integers j whose inverses mod
p^r avoid divisibility by q (and symmetrically).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field


class RestrictedFactorial:
    """Growing cache of exact Gamma_p values for one prime."""

    def __init__(self, p: int) -> None:
        if p == 2:
            raise ValueError("p = 2 is excluded")
        self.p = p
        self._vals = [1, -1]  # Gamma_p(0), Gamma_p(1)
        self._lock = threading.Lock()

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be >= 0")
        if n >= len(self._vals):
            with self._lock:
                prod = abs(self._vals[-1])
                for m in range(len(self._vals), n + 1):
                    j = m - 1
                    if j % self.p:
                        prod *= j
                    self._vals.append(prod if m % 2 == 0 else -prod)
        return self._vals[n]


_FACTORIALS: dict[int, RestrictedFactorial] = {}
_FACT_LOCK = threading.Lock()


def _factorial_cache(p: int) -> RestrictedFactorial:
    with _FACT_LOCK:
        if p not in _FACTORIALS:
            _FACTORIALS[p] = RestrictedFactorial(p)
        return _FACTORIALS[p]


def morita_gamma_exact(n: int, p: int) -> int:
    """Gamma_p(n) as an exact integer."""
    return _factorial_cache(p).value(n)


def morita_gamma(n: int, p: int, modulus_exp: int) -> int:
    """Gamma_p(n) reduced mod p^modulus_exp, as a residue in [0, p^s)."""
    if modulus_exp < 1:
        raise ValueError("modulus exponent must be >= 1")
    if p == 2:
        raise ValueError("p = 2 is excluded")
    mod = p**modulus_exp
    prod = 1
    for j in range(1, n):
        if j % p:
            prod = prod * j % mod
    if n % 2:
        prod = -prod
    return prod % mod


def gamma_functional_step(n: int, p: int) -> int:
    """Multiplier h_p(n) with Gamma_p(n+1) = h_p(n) * Gamma_p(n): -n off pZ, else -1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return -1 if n % p == 0 else -n


@dataclass
class ContinuityReport:
    p: int
    s: int
    upto: int
    ok: bool
    first_failure: int | None = None


def gamma_continuity_check(p: int, s: int, upto: int, restricted: bool = True) -> ContinuityReport:
    """Check a_{n + p^s} = -a_n mod p^s for the (un)restricted factorial.

    a_n is the running product of 1 <= k < n with p not dividing k (the
    unrestricted variant keeps multiples of p and is expected to fail: the
    sign congruence breaks as soon as one side picks up p-divisibility the
    other side lacks).
    """
    if p == 2:
        raise ValueError("p = 2 is excluded")
    mod = p**s
    span = upto + p**s + 1
    a = [1] * (span + 1)
    for n in range(1, span + 1):
        k = n - 1
        if k == 0 or (restricted and k % p == 0):
            keep = 1
        else:
            keep = k
        a[n] = a[n - 1] * keep % mod
    for n in range(upto + 1):
        if (a[n + p**s] + a[n]) % mod != 0:
            return ContinuityReport(p=p, s=s, upto=upto, ok=False, first_failure=n)
    return ContinuityReport(p=p, s=s, upto=upto, ok=True)


# -- inverse formulas ---------------------------------------------------------


def euclid_inverse(u: int, modulus: int) -> int:
    """Reference inverse by extended Euclid (pow(-1) under the hood)."""
    return pow(u, -1, modulus)


def euclid_division_steps(a: int, b: int) -> int:
    """Number of division steps of the Euclidean algorithm on (a, b), a > b."""
    steps = 0
    while b:
        a, b = b, a % b
        steps += 1
    return steps


def inverse_of_half_pr_plus_one(p: int, r: int, s: int) -> int:
    """Inverse of (p^r + 1)/2 mod p^s by the alternating geometric formula.

    x = 2 * sum_{m=0}^{n} (-1)^m p^(mr) with n maximal under nr < s, plus p^s
    when n is odd; the result lies in (0, p^s).
    """
    if p == 2 or p < 3:
        raise ValueError("p must be an odd prime")
    if not (r >= 1 and s > r):
        raise ValueError("need 1 <= r < s")
    n = (s - 1) // r
    x = 2 * sum((-1) ** m * p ** (m * r) for m in range(n + 1))
    if n % 2 == 1:
        x += p**s
    return x


def inverse_general(m: int, r: int, t: int, v: int, p: int, s: int) -> int:
    """Inverse of (m p^r + t)/v mod p^s via one inverse of t and a geometric tail.

    x = v * sum_{l=0}^{n} (-1)^l t_s^(l+1) (m p^r)^l (+ p^s when n is odd),
    reduced into [0, p^s); t_s is the inverse of t mod p^s and n is maximal
    under nr < s.
    """
    if (m * p**r + t) % v != 0:
        raise ValueError("v must divide m*p^r + t")
    if t % p == 0:
        raise ValueError("t must be coprime to p")
    if not (r >= 1 and s > r):
        raise ValueError("need 1 <= r < s")
    ts = pow(t, -1, p**s)
    n = (s - 1) // r
    x = v * sum((-1) ** l * ts ** (l + 1) * (m * p**r) ** l for l in range(n + 1))
    if n % 2 == 1:
        x += p**s
    return x % p**s


# -- the inverse-chain membership search --------------------------------------


@dataclass(frozen=True)
class ExclusionWitness:
    side: str  # "p-side" or "q-side"
    exponent: int
    inverse: int
    divisor: int


_WITNESS_CACHE: dict[tuple[int, int, int], ExclusionWitness] = {}
_WITNESS_LOCK = threading.Lock()


def s_pq_membership(j: int, p: int, q: int, depth: int = 12):
    """Search for an exclusion witness for j along the chain of inverses.

    Walks r = 1..depth looking for q dividing the inverse of j mod p^r, then
    symmetrically for p dividing the inverse of j mod q^s.  Returns an
    ExclusionWitness, or None when undecided at this depth.  No claim of
    membership is ever made.
    """
    if j < 2:
        raise ValueError("j must be >= 2 (1 is its own inverse everywhere)")
    if j % p == 0 or j % q == 0:
        raise ValueError("j must be coprime to pq")
    key = (j, p, q)
    cached = _WITNESS_CACHE.get(key)
    if cached is not None and cached.exponent <= depth:
        return cached
    for r in range(1, depth + 1):
        x = pow(j, -1, p**r)
        if x % q == 0:
            w = ExclusionWitness("p-side", r, x, q)
            with _WITNESS_LOCK:
                _WITNESS_CACHE[key] = w
            return w
    for s in range(1, depth + 1):
        x = pow(j, -1, q**s)
        if x % p == 0:
            w = ExclusionWitness("q-side", s, x, p)
            with _WITNESS_LOCK:
                _WITNESS_CACHE[key] = w
            return w
    return None


@dataclass
class TrivialityReport:
    p: int
    q: int
    j_bound: int
    depth: int
    witnesses: dict[int, ExclusionWitness] = field(default_factory=dict)
    undecided: list[int] = field(default_factory=list)

    @property
    def all_excluded(self) -> bool:
        return not self.undecided


def _cache_path():
    import os

    root = os.environ.get("PQZETA_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, "spq_witnesses.json")


def _load_witness_cache() -> None:
    path = _cache_path()
    if path is None:
        return
    import json
    import os

    if not os.path.exists(path):
        return
    with open(path) as fh:
        raw = json.load(fh)
    with _WITNESS_LOCK:
        for key, vals in raw.items():
            j, p, q = (int(x) for x in key.split(":"))
            _WITNESS_CACHE.setdefault((j, p, q), ExclusionWitness(*vals))


def _store_witness_cache() -> None:
    path = _cache_path()
    if path is None:
        return
    import json
    import os

    os.makedirs(os.path.dirname(path), exist_ok=True)
    with _WITNESS_LOCK:
        raw = {
            f"{j}:{p}:{q}": [w.side, w.exponent, w.inverse, w.divisor]
            for (j, p, q), w in _WITNESS_CACHE.items()
        }
    with open(path, "w") as fh:
        json.dump(raw, fh, sort_keys=True)


def verify_triviality_theorem(p: int, q: int, j_bound: int, depth: int = 12) -> TrivialityReport:
    """Sweep 2 <= j <= j_bound coprime to pq for exclusion witnesses.

    An undecided j is reported as such (prompting a deeper search); the sweep
    never asserts membership.  Witnesses are cached in memory, and persisted
    under PQZETA_CACHE_DIR when that directory override is set, so repeated
    sweeps are incremental.
    """
    if p == q:
        raise ValueError("primes must be distinct")
    _load_witness_cache()
    report = TrivialityReport(p=p, q=q, j_bound=j_bound, depth=depth)
    for j in range(2, j_bound + 1):
        if j % p == 0 or j % q == 0:
            continue
        w = s_pq_membership(j, p, q, depth)
        if w is None:
            report.undecided.append(j)
        else:
            report.witnesses[j] = w
    _store_witness_cache()
    return report
