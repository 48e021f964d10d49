"""Exact even zeta values from a WZ-derived recurrence, with numeric verification."""

from .exact_arith import DecimalString, binomial, factorial, pi_digits, rat_make
from .report import VerificationReport
from .zeta_core import (
    BernoulliTable,
    ZetaCoefficient,
    bernoulli_poly,
    bernoulli_table,
    render_zeta,
    verify_half_identity,
    zeta_even_euler,
    zeta_even_srivastava_a,
    zeta_even_srivastava_b,
    zeta_even_theorem,
    zeta_table,
)

__version__ = "0.1.0"

__all__ = [
    "BernoulliTable",
    "DecimalString",
    "VerificationReport",
    "ZetaCoefficient",
    "bernoulli_poly",
    "bernoulli_table",
    "binomial",
    "factorial",
    "pi_digits",
    "rat_make",
    "render_zeta",
    "verify_half_identity",
    "zeta_even_euler",
    "zeta_even_srivastava_a",
    "zeta_even_srivastava_b",
    "zeta_even_theorem",
    "zeta_table",
]
