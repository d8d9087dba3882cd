"""Layered Markov chains on N x N: the p-adic, q-deformed and real beta
families, gamma/basic chains, exact forward propagation (no Monte Carlo),
the rising-factorial closed form for real-beta layers, limit verification
between the q world and its two boundary worlds, difference operators with
their ladder relation, finite orthogonal bases, and q-number scalars.

Kernels keep exact rationals whenever parameters allow (rational base,
integer exponents); reparametrized real limits force float mode, where row
sums are only required to hold within 1e-12.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .rationals import binomial, rising_factorial

FLOAT_TOL = 1e-12

State = tuple[int, int]


def _pow(base, exponent):
    """Exact power when base is rational and the exponent integral."""
    if isinstance(base, (int, Fraction)) and isinstance(exponent, int):
        return Fraction(base) ** exponent
    if (
        isinstance(base, (int, Fraction))
        and isinstance(exponent, Fraction)
        and exponent.denominator == 1
    ):
        return Fraction(base) ** int(exponent)
    return float(base) ** float(exponent)


@dataclass
class ChainKernel:
    family: str
    params: dict
    step: callable  # state -> list[(state, probability)]
    root: State | int = (0, 0)
    exact: bool = True

    def transition(self, source, target):
        for st, pr in self.step(source):
            if st == target:
                return pr
        zero = Fraction(0) if self.exact else 0.0
        return zero

    def row_sum(self, state):
        return sum(pr for _, pr in self.step(state))

    def is_row_stochastic(self, depth: int, tol: float = FLOAT_TOL) -> bool:
        for state in reachable_states(self, depth):
            s = self.row_sum(state)
            if self.exact:
                if s != 1:
                    return False
            elif abs(s - 1.0) > tol:
                return False
        return True


def reachable_states(kernel: ChainKernel, depth: int) -> list:
    seen = {kernel.root}
    frontier = [kernel.root]
    for _ in range(depth):
        nxt = []
        for st in frontier:
            for child, _ in kernel.step(st):
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    return sorted(seen)


def kernel_padic_beta(p: int, alpha, beta) -> ChainKernel:
    """The six-case p-adic beta kernel on layers {(i, j): i + j = n}."""
    exact = isinstance(alpha, int) and isinstance(beta, int)
    pb = _pow(p, -beta)
    pa = _pow(p, -alpha)
    pab = _pow(p, -(alpha + beta)) if exact else float(pa) * float(pb)

    def step(state):
        i, j = state
        if (i, j) == (0, 0):
            return [((0, 1), (1 - pb) / (1 - pab)), ((1, 0), (1 - pa) * pb / (1 - pab))]
        if j == 0:
            return [((i + 1, 0), pb), ((i, 1), 1 - pb)]
        one = Fraction(1) if exact else 1.0
        return [((i, j + 1), one)]

    return ChainKernel(
        family="p-beta", params={"p": p, "alpha": alpha, "beta": beta}, step=step, exact=exact
    )


def kernel_q_beta(q, alpha, beta) -> ChainKernel:
    """Two-case q-beta kernel; the two numerators sum to the denominator."""
    exact = isinstance(q, (int, Fraction)) and isinstance(alpha, int) and isinstance(beta, int)

    def step(state):
        i, j = state
        den = 1 - _pow(q, alpha + beta + i + j)
        up = (1 - _pow(q, beta + j)) / den
        right = (1 - _pow(q, alpha + i)) * _pow(q, beta + j) / den
        return [((i, j + 1), up), ((i + 1, j), right)]

    return ChainKernel(
        family="q-beta", params={"q": q, "alpha": alpha, "beta": beta}, step=step, exact=exact
    )


def kernel_real_beta(alpha, beta) -> ChainKernel:
    """Up with weight beta + 2j, right with weight alpha + 2i."""
    exact = isinstance(alpha, (int, Fraction)) and isinstance(beta, (int, Fraction))
    cast = Fraction if exact else float

    def step(state):
        i, j = state
        den = cast(alpha + beta + 2 * (i + j))
        return [((i, j + 1), cast(beta + 2 * j) / den), ((i + 1, j), cast(alpha + 2 * i) / den)]

    return ChainKernel(
        family="real-beta", params={"alpha": alpha, "beta": beta}, step=step, exact=exact
    )


def kernel_q_gamma(q, beta) -> ChainKernel:
    """Gamma chain on layers {(n, j): j <= n}: keep j with q^(beta+j), else raise it."""
    exact = isinstance(q, (int, Fraction)) and isinstance(beta, int)

    def step(state):
        i, j = state
        stay = _pow(q, beta + j)
        return [((i + 1, j), stay), ((i + 1, j + 1), 1 - stay)]

    return ChainKernel(
        family="q-gamma", params={"q": q, "beta": beta}, step=step, exact=exact
    )


def kernel_basic(q, beta) -> ChainKernel:
    """The basic chain on N: stay with q^(beta+i), advance with the rest."""
    exact = isinstance(q, (int, Fraction)) and isinstance(beta, int)

    def step(i):
        stay = _pow(q, beta + i)
        return [(i, stay), (i + 1, 1 - stay)]

    return ChainKernel(
        family="basic", params={"q": q, "beta": beta}, step=step, root=0, exact=exact
    )


def kernel_u_gamma(u: int, beta: int) -> ChainKernel:
    """Gamma chain driven by a composite base u (the CRT stand-in for a
    generic prime): u^(-beta) keeps j = 0, otherwise j locks upward."""
    if u < 2 or beta < 1:
        raise ValueError("need u >= 2 and integer beta >= 1")
    w = Fraction(1, u**beta)

    def step(state):
        i, j = state
        if j == 0:
            return [((i + 1, 0), w), ((i + 1, 1), 1 - w)]
        return [((i + 1, j + 1), Fraction(1))]

    return ChainKernel(family="u-gamma", params={"u": u, "beta": beta}, step=step)


@dataclass
class LayerDistribution:
    n: int
    weights: dict  # state -> probability

    def total(self):
        return sum(self.weights.values())

    def by_second_coordinate(self) -> list:
        """Weights listed by j for two-coordinate layered chains."""
        items = sorted(self.weights.items(), key=lambda kv: kv[0][1] if isinstance(kv[0], tuple) else kv[0])
        return [w for _, w in items]


def propagate(kernel: ChainKernel, n: int) -> LayerDistribution:
    """Exact law of the chain after n steps from the root."""
    if n < 0:
        raise ValueError("layer index must be >= 0")
    one = Fraction(1) if kernel.exact else 1.0
    current = {kernel.root: one}
    for _ in range(n):
        nxt: dict = {}
        for state, mass in current.items():
            for child, pr in kernel.step(state):
                if pr:
                    nxt[child] = nxt.get(child, 0) + mass * pr
        current = nxt
    return LayerDistribution(n=n, weights=current)


def real_beta_layer_closed_form(alpha, beta, n: int) -> LayerDistribution:
    """tau(i, j) = C(n, i) (alpha/2)_i (beta/2)_j / ((alpha+beta)/2)_n on layer n."""
    a2, b2 = Fraction(alpha, 2), Fraction(beta, 2)
    den = rising_factorial(a2 + b2, n)
    weights = {}
    for i in range(n + 1):
        j = n - i
        weights[(i, j)] = binomial(n, i) * rising_factorial(a2, i) * rising_factorial(b2, j) / den
    return LayerDistribution(n=n, weights=weights)


@dataclass
class LimitReport:
    target: str
    schedule: list[int]
    residuals: list[float]
    tol: float

    @property
    def decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.residuals, self.residuals[1:]))

    @property
    def final_ok(self) -> bool:
        return self.residuals[-1] < self.tol

    @property
    def ok(self) -> bool:
        return self.decreasing and self.final_ok


def limit_check(
    target: str,
    p: int | None,
    alpha,
    beta,
    schedule: list[int],
    tol: float,
    depth: int = 6,
    q_base: float = 0.5,
) -> LimitReport:
    """Sup-norm distance between the reparametrized q-beta kernel and a target.

    p-adic target: q = p^-N, parameters divided by N (exact rationals, the
    distance decays geometrically in N).  Real target: q = q_base^(2/N) with
    halved parameters (float mode, first-order decay in 1/N).
    """
    if target not in ("p-adic-beta", "real-beta"):
        raise ValueError("target must be 'p-adic-beta' or 'real-beta'")
    states = [(i, j) for i in range(depth + 1) for j in range(depth + 1 - i)]
    residuals = []
    for N in schedule:
        sup = 0.0
        if target == "p-adic-beta":
            if p is None:
                raise ValueError("p-adic target needs a prime")
            tk = kernel_padic_beta(p, alpha, beta)
            for i, j in states:
                den = 1 - Fraction(p) ** -(alpha + beta + N * (i + j))
                up = (1 - Fraction(p) ** -(beta + N * j)) / den
                right = (1 - Fraction(p) ** -(alpha + N * i)) * Fraction(p) ** -(beta + N * j) / den
                sup = max(
                    sup,
                    abs(float(up - tk.transition((i, j), (i, j + 1)))),
                    abs(float(right - tk.transition((i, j), (i + 1, j)))),
                )
        else:
            qq = q_base ** (2.0 / N)
            approx = kernel_q_beta(qq, alpha / 2, beta / 2)
            tk = kernel_real_beta(alpha, beta)
            for i, j in states:
                sup = max(
                    sup,
                    abs(approx.transition((i, j), (i, j + 1)) - float(tk.transition((i, j), (i, j + 1)))),
                    abs(approx.transition((i, j), (i + 1, j)) - float(tk.transition((i, j), (i + 1, j)))),
                )
        residuals.append(sup)
    return LimitReport(target=target, schedule=list(schedule), residuals=residuals, tol=tol)


# -- difference operators and bases on real-beta layers -----------------------


def lowering_operator(phi: dict, n: int, alpha, beta) -> dict:
    """D_n: functions on layer n (family alpha,beta) to layer n-1 (alpha+2,beta+2).

    D_n phi(i,j) = ((alpha+beta)/2 + n)(phi(i, j+1) - phi(i+1, j)); kills
    constants.
    """
    c = Fraction(alpha + beta, 2) + n
    return {
        (i, n - 1 - i): c * (phi[(i, n - i)] - phi[(i + 1, n - 1 - i)]) for i in range(n)
    }


def raising_operator(phi: dict, n: int, alpha, beta) -> dict:
    """D_n^+: functions on layer n-1 (family alpha+2,beta+2) to layer n (alpha,beta)."""
    c = Fraction(alpha + beta, 2) + n
    out = {}
    for i in range(n + 1):
        j = n - i
        acc = Fraction(0)
        if j >= 1:
            acc += j * (Fraction(alpha, 2) + i) * phi[(i, j - 1)]
        if i >= 1:
            acc -= i * (Fraction(beta, 2) + j) * phi[(i - 1, j)]
        out[(i, j)] = acc / c
    return out


def heisenberg_check(alpha, beta, n: int, trial_vectors=None) -> Fraction:
    """Max residual of D_n D_n^+ - D_{n-1}^+ D_{n-1} - ((alpha+beta)/2) id
    on functions over layer n-1 (family alpha+2, beta+2); exactly 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if trial_vectors is None:
        trial_vectors = []
        for k in range(n):
            basis = {(i, n - 1 - i): Fraction(1 if i == k else 0) for i in range(n)}
            trial_vectors.append(basis)
    worst = Fraction(0)
    half = Fraction(alpha + beta, 2)
    for phi in trial_vectors:
        down_up = lowering_operator(raising_operator(phi, n, alpha, beta), n, alpha, beta)
        if n >= 2:
            up_down = raising_operator(
                lowering_operator(phi, n - 1, alpha + 2, beta + 2), n - 1, alpha + 2, beta + 2
            )
        else:
            up_down = {k: Fraction(0) for k in phi}
        for key in phi:
            r = abs(down_up[key] - up_down[key] - half * phi[key])
            worst = max(worst, r)
    return worst


def hahn_basis(alpha, beta, n: int) -> list[dict]:
    """phi_m = (-1)^m/m! (D^+)^m 1 for m = 0..n, an orthogonal family on layer n.

    The m-th vector starts from the constant function on layer n-m in the
    (alpha+2m, beta+2m) family and rides the raising ladder down to (alpha,
    beta); orthogonality is with respect to the closed-form layer law.
    """
    out = []
    for m in range(n + 1):
        phi = {(i, n - m - i): Fraction(1) for i in range(n - m + 1)}
        for step in range(m):
            layer = n - m + step + 1
            a_shift = alpha + 2 * (m - step - 1)
            b_shift = beta + 2 * (m - step - 1)
            phi = raising_operator(phi, layer, a_shift, b_shift)
        scale = Fraction((-1) ** m, factorial(m))
        out.append({k: scale * v for k, v in phi.items()})
    return out


def layer_inner_product(f: dict, g: dict, law: LayerDistribution) -> Fraction:
    return sum(law.weights[k] * f[k] * g[k] for k in law.weights)


# -- q-number scalars ----------------------------------------------------------


def q_integer(s, q):
    """[s]_q = (1 - q^s)/(1 - q); exact for integer s and rational q."""
    if q == 1:
        raise ZeroDivisionError("q = 1 is the classical limit; use q_integer_limit")
    return (1 - _pow(q, s)) / (1 - q)


def q_integer_limit(s, q):
    """Total variant whose value at q = 1 is the limit s.

    Only the two-sided limits q -> 1 and q -> 0 are asserted anywhere in the
    test surface: joint limits along corners where both s and 1 - q shrink
    together are genuinely discontinuous and are documented, not tested.
    """
    if q == 1:
        return s
    return q_integer(s, q)


def q_zeta(s: float, q: float, tail: float = 1e-14) -> float:
    """prod_{n>=0} (1 - q^(s+n))^(-1), truncated once the multiplicative tail
    is below ``tail``."""
    if not 0 < q < 1:
        raise ValueError("need 0 < q < 1")
    prod = 1.0
    n = 0
    while True:
        term = q ** (s + n)
        if term / (1.0 - q) < tail:
            break
        prod /= 1.0 - term
        n += 1
        if n > 10**6:
            raise ArithmeticError("q-zeta truncation did not converge")
    return prod


# -- kernel spec parsing -------------------------------------------------------


def parse_kernel_spec(spec: str) -> ChainKernel:
    """Build a kernel from a flag string "family:key=value,..." .

    Families: p-beta, q-beta, real-beta, q-gamma, basic, u-gamma; "p-gamma"
    is accepted as the q-gamma chain at q = 1/p.  Values parse as Fractions
    when possible, else floats.
    """
    family, _, raw = spec.partition(":")
    params = {}
    if raw:
        for item in raw.split(","):
            key, _, val = item.partition("=")
            try:
                f = Fraction(val)
                params[key.strip()] = int(f) if f.denominator == 1 else f
            except ValueError:
                params[key.strip()] = float(val)
    family = family.strip()
    if family == "p-beta":
        return kernel_padic_beta(params["p"], params["alpha"], params["beta"])
    if family == "q-beta":
        return kernel_q_beta(params["q"], params["alpha"], params["beta"])
    if family == "real-beta":
        return kernel_real_beta(params["alpha"], params["beta"])
    if family == "q-gamma":
        return kernel_q_gamma(params["q"], params["beta"])
    if family == "p-gamma":
        return kernel_q_gamma(Fraction(1, params["p"]), params["beta"])
    if family == "basic":
        return kernel_basic(params["q"], params["beta"])
    if family == "u-gamma":
        return kernel_u_gamma(params["u"], params["beta"])
    raise ValueError(f"unknown chain family {family!r}")
