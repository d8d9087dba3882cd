"""Exact p-adic interpolation, two-prime zeta branches, beta chains, and
floating-point checks of the classical theta/zeta identities."""

from .padics import PadicNumber, PrecisionError, padic_of_rational, teichmuller
from .rationals import bernoulli, binomial, zeta_neg

__all__ = [
    "PadicNumber",
    "PrecisionError",
    "bernoulli",
    "binomial",
    "padic_of_rational",
    "teichmuller",
    "zeta_neg",
]

__version__ = "0.1.0"
