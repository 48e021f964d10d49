"""Exact even zeta values.

Every route returns a :class:`ZetaCoefficient` ``(l, q)`` meaning
``zeta(2l) = q * pi**(2l)`` with ``q`` an exact Fraction. Four independent
routes are provided:

* :func:`zeta_even_theorem`   -- the WZ-derived recurrence,
* :func:`zeta_even_euler`     -- Euler's closed form through B_{2l},
* :func:`zeta_even_srivastava_a` and :func:`zeta_even_srivastava_b` -- two
  classical recurrences whose odd powers of pi are reduced symbolically.

The recurrences take the earlier coefficients explicitly (``priors``) so
the evaluation order is visible to the caller; :func:`zeta_table` builds a
whole table for any route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact_arith import (
    DecimalString,
    binomial,
    factorial,
    pi_scaled,
)
from .report import VerificationReport

__all__ = [
    "ZetaCoefficient",
    "BernoulliTable",
    "BernoulliPolyValue",
    "bernoulli_table",
    "bernoulli_poly",
    "verify_half_identity",
    "zeta_even_euler",
    "zeta_even_theorem",
    "zeta_even_srivastava_a",
    "zeta_even_srivastava_b",
    "zeta_table",
    "ROUTES",
    "render_zeta",
]


@dataclass(frozen=True)
class ZetaCoefficient:
    l: int  # noqa: E741
    q: Fraction

    def __post_init__(self):
        if self.l < 1:
            raise ValueError(f"l must be >= 1, got {self.l}")
        if not isinstance(self.q, Fraction):
            object.__setattr__(self, "q", Fraction(self.q))


@dataclass(frozen=True)
class BernoulliTable:
    """Exact B_0..B_max_index with B_1 = -1/2."""

    values: tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class BernoulliPolyValue:
    n: int
    x: Fraction
    value: Fraction


def bernoulli_table(max_index: int) -> BernoulliTable:
    """Bernoulli numbers from sum_{j=0}^{m} C(m+1, j) B_j = 0 (m >= 1)."""
    if max_index < 0:
        raise ValueError(f"max_index must be >= 0, got {max_index}")
    b = [Fraction(1)]
    for m in range(1, max_index + 1):
        if m > 1 and m % 2:
            b.append(Fraction(0))
            continue
        s = sum(binomial(m + 1, j) * b[j] for j in range(m))
        b.append(-s / (m + 1))
    return BernoulliTable(tuple(b))


def bernoulli_poly(n: int, x, table: BernoulliTable | None = None) -> BernoulliPolyValue:
    """B_n(x) = sum_k C(n, k) B_k x^(n-k), exactly."""
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    x = Fraction(x)
    if table is None or table.max_index < n:
        table = bernoulli_table(n)
    value = sum(
        (binomial(n, k) * table[k] * x ** (n - k) for k in range(n + 1)),
        Fraction(0),
    )
    return BernoulliPolyValue(n, x, value)


def verify_half_identity(k_max: int) -> VerificationReport:
    """Check B_{2k}(1/2) == (2^(1-2k) - 1) B_{2k} exactly for k = 1..k_max.

    Residuals are exact differences converted to float, so a pass means
    every case was an exact zero.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    table = bernoulli_table(2 * k_max)
    half = Fraction(1, 2)
    cases = []
    for k in range(1, k_max + 1):
        lhs = bernoulli_poly(2 * k, half, table).value
        rhs = (Fraction(1, 2 ** (2 * k - 1)) - 1) * table[2 * k]
        diff = lhs - rhs
        cases.append(({"k": k, "lhs": str(lhs), "rhs": str(rhs)}, abs(float(diff)) if diff else 0.0))
    return VerificationReport.build("half_identity", cases, 0.0)


def zeta_even_euler(l: int, table: BernoulliTable) -> ZetaCoefficient:  # noqa: E741
    """q = 2^(2l-1) (-1)^(l-1) B_{2l} / (2l)!."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    if table.max_index < 2 * l:
        raise ValueError(f"Bernoulli table covers up to B_{table.max_index}, need B_{2 * l}")
    sign = 1 if l % 2 else -1
    q = sign * 2 ** (2 * l - 1) * table[2 * l] / factorial(2 * l)
    return ZetaCoefficient(l, q)


def _check_priors(l: int, priors: Sequence[ZetaCoefficient]) -> list[Fraction]:  # noqa: E741
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    by_index = {p.l: p.q for p in priors}
    missing = [j for j in range(1, l) if j not in by_index]
    if missing:
        raise ValueError(f"missing prior zeta coefficients for l={missing}")
    return [Fraction(0)] + [by_index[j] for j in range(1, l)]


def zeta_even_theorem(l: int, priors: Sequence[ZetaCoefficient] = ()) -> ZetaCoefficient:  # noqa: E741
    """The WZ-derived recurrence.

    zeta(2l) = 2^(2l-1)/(1-2^(2l)) * { [(-1)^(l+1)/(4l) + (-1)^l/2] pi^(2l)/(2l-1)!
                                       + sum_{j<l} (-1)^(l-j) pi^(2(l-j))/(2(l-j))! zeta(2j) }

    Every term carries pi^(2l), so the braces reduce to a single rational.
    """
    q = _check_priors(l, priors)
    sign_l = 1 if l % 2 == 0 else -1
    lead = (Fraction(-sign_l, 4 * l) + Fraction(sign_l, 2)) / factorial(2 * l - 1)
    tail = sum(
        ((1 if (l - j) % 2 == 0 else -1) * q[j] / factorial(2 * (l - j)) for j in range(1, l)),
        Fraction(0),
    )
    return ZetaCoefficient(l, Fraction(2 ** (2 * l - 1), 1 - 2 ** (2 * l)) * (lead + tail))


def _srivastava_inner(n: int, q: list[Fraction], top: int) -> Fraction:
    # (-1)^j C(top, 2j-1) (2j-1)! (2^(2j-1)-1) zeta(2j) / (2 pi)^(2j-1), with the
    # pi^(2j) / pi^(2j-1) ratio pulled out as the single pi the bracket carries
    return sum(
        (
            (-1) ** j
            * binomial(top, 2 * j - 1)
            * factorial(2 * j - 1)
            * (2 ** (2 * j - 1) - 1)
            * q[j]
            / 2 ** (2 * j - 1)
            for j in range(1, n)
        ),
        Fraction(0),
    )


def zeta_even_srivastava_a(n: int, priors: Sequence[ZetaCoefficient] = ()) -> ZetaCoefficient:
    """zeta(2n) = (-1)^(n-1) (2pi)^(2n-1) / ((2n)! (2^(2n-1)-1)) * [pi/(2(2n+1)) + inner]."""
    q = _check_priors(n, priors)
    bracket = Fraction(1, 2 * (2 * n + 1)) + _srivastava_inner(n, q, 2 * n)
    pre = Fraction((-1) ** (n - 1) * 2 ** (2 * n - 1), factorial(2 * n) * (2 ** (2 * n - 1) - 1))
    return ZetaCoefficient(n, pre * bracket)


def zeta_even_srivastava_b(n: int, priors: Sequence[ZetaCoefficient] = ()) -> ZetaCoefficient:
    """zeta(2n) = (-1)^(n-1) (2pi)^(2n-1) / ((2n-1)! (2^(2n)-1)) * [pi/(4n) + inner]."""
    q = _check_priors(n, priors)
    bracket = Fraction(1, 4 * n) + _srivastava_inner(n, q, 2 * n - 1)
    pre = Fraction((-1) ** (n - 1) * 2 ** (2 * n - 1), factorial(2 * n - 1) * (2 ** (2 * n) - 1))
    return ZetaCoefficient(n, pre * bracket)


def _euler_route(max_l: int) -> list[ZetaCoefficient]:
    table = bernoulli_table(2 * max_l)
    return [zeta_even_euler(l, table) for l in range(1, max_l + 1)]


def _recurrence_route(step: Callable[[int, Sequence[ZetaCoefficient]], ZetaCoefficient]):
    def run(max_l: int) -> list[ZetaCoefficient]:
        out: list[ZetaCoefficient] = []
        for l in range(1, max_l + 1):  # noqa: E741
            out.append(step(l, out))
        return out

    return run


ROUTES: dict[str, Callable[[int], list[ZetaCoefficient]]] = {
    "theorem": _recurrence_route(zeta_even_theorem),
    "euler": _euler_route,
    "srivastava_a": _recurrence_route(zeta_even_srivastava_a),
    "srivastava_b": _recurrence_route(zeta_even_srivastava_b),
}


def zeta_table(max_l: int, route: str = "theorem") -> list[ZetaCoefficient]:
    """Coefficients for l = 1..max_l by the named route (see ``ROUTES``)."""
    if max_l < 1:
        raise ValueError(f"max_l must be >= 1, got {max_l}")
    try:
        return ROUTES[route](max_l)
    except KeyError:
        raise ValueError(f"unknown route {route!r}; choose from {sorted(ROUTES)}") from None


MAX_RENDER_PRECISION = 1000


def render_zeta(coeff: ZetaCoefficient, precision: int) -> DecimalString:
    """q * pi^(2l) truncated to ``precision`` fractional digits.

    pi is bracketed between two consecutive scaled integers; guard digits are
    added until both ends of the bracket truncate to the same digits.
    """
    if not 1 <= precision <= MAX_RENDER_PRECISION:
        raise ValueError(f"precision must lie in [1, {MAX_RENDER_PRECISION}], got {precision}")
    q = coeff.q
    if q < 0:
        raise ValueError("rendering expects a positive coefficient")
    power = 2 * coeff.l
    guard = 10 + len(str(power))
    while True:
        digits = precision + guard
        p = pi_scaled(digits)
        scale = 10 ** (digits * power - precision)
        lo = q.numerator * p**power // (q.denominator * scale)
        hi = q.numerator * (p + 1) ** power // (q.denominator * scale)
        if lo == hi:
            return DecimalString.from_scaled(lo, precision)
        guard += 10
