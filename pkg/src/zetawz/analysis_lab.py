"""Numeric checks of the Dirichlet-kernel lemmas and the repeated-integral identities.

Everything here is floating point. Integrals go through
:func:`zetawz.quadrature.adaptive_quad`; finite sums are summed directly
with :func:`math.fsum`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .exact_arith import factorial, pi_digits
from .quadrature import DEFAULT_TOL, QuadratureError, QuadratureResult, adaptive_quad
from .report import FAILED, VerificationReport
from .wz_engine import get_pair
from .zeta_core import ZetaCoefficient

__all__ = [
    "DEFAULT_SEED",
    "KernelIntegrand",
    "PartialSum",
    "adaptive_quad",
    "lemma3_check",
    "lemma4_integral",
    "lemma5_integral",
    "lemma5_bound",
    "cauchy_repeated_check",
    "partial_sum_H",
    "repeated_integral_op",
    "linearity_check",
    "telescoping_identities_check",
    "telescoping_report",
    "decomposition_check",
    "alternating_relation_check",
    "lemma3_report",
    "lemma4_report",
    "lemma5_report",
    "cauchy_report",
    "decomposition_report",
    "alternating_report",
]

DEFAULT_SEED = 0x5EED
TWO_PI = 2 * math.pi
# quadrature accuracy used when a check is run at zero tolerance
QUAD_FLOOR = 1e-13


def quad_tol_for(tol: float, divisor: float = 10.0) -> float:
    """Quadrature tolerance for a check at ``tol``; zero-tolerance runs get QUAD_FLOOR."""
    return tol / divisor if tol > 0 else QUAD_FLOOR


@dataclass(frozen=True)
class KernelIntegrand:
    """t -> t**s * sin((2n+1)t/2) / sin(t/2), patched at t = 0.

    The value at the removable singularity is 2n+1 for s = 0 and 0 for s > 0.
    """

    n: int
    s: float = 0.0

    def __post_init__(self):
        if self.n < 0 or self.s < 0:
            raise ValueError(f"need n >= 0 and s >= 0, got n={self.n}, s={self.s}")

    def __call__(self, t: float) -> float:
        if t == 0.0:
            return float(2 * self.n + 1) if self.s == 0 else 0.0
        k = math.sin((2 * self.n + 1) * 0.5 * t) / math.sin(0.5 * t)
        return k if self.s == 0 else t**self.s * k


def _multiple_of_two_pi(x: float) -> bool:
    return math.remainder(x, TWO_PI) == 0.0


def dirichlet(n: int, x: float) -> float:
    """sin((2n+1)x/2) / sin(x/2) with the limit 2n+1 at multiples of 2*pi."""
    if _multiple_of_two_pi(x):
        return float(2 * n + 1)
    return math.sin((2 * n + 1) * 0.5 * x) / math.sin(0.5 * x)


def lemma3_check(n: int, x: float) -> float:
    """|sum_{k=1}^n cos(kx) - (-1/2 + kernel(x)/2)|."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = math.fsum(math.cos(k * x) for k in range(1, n + 1))
    return abs(lhs - (-0.5 + 0.5 * dirichlet(n, x)))


def lemma4_integral(n: int, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Integral of the Dirichlet kernel over [0, pi]; should be pi for every n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return adaptive_quad(KernelIntegrand(n), 0.0, math.pi, tol)


def lemma5_bound(s: float, n: int) -> float:
    """2^(s+2) (pi/2)^s / (2n+1): the second-mean-value bound on the s-weighted integral."""
    return 2 ** (s + 2) * (math.pi / 2) ** s / (2 * n + 1)


def lemma5_integral(s: float, n: int, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """(integral of x^s * kernel over [0, pi], its bound)."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    value = adaptive_quad(KernelIntegrand(n, s), 0.0, math.pi, tol).value
    return value, lemma5_bound(s, n)


def repeated_integral_op(f: Callable[[float], float], j: int, x: float, tol: float = DEFAULT_TOL) -> float:
    """(1/(j-1)!) * int_0^x (x-t)^(j-1) f(t) dt, and f(x) itself for j = 0.

    Negative ``x`` is handled by orienting the integral; the result is the
    same signed quantity.
    """
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if j == 0:
        return f(x)
    if x == 0:
        return 0.0
    scale = 1.0 / factorial(j - 1)
    if j == 1:
        g = f
    else:
        g = lambda t: (x - t) ** (j - 1) * f(t)  # noqa: E731
    if x > 0:
        return scale * adaptive_quad(g, 0.0, x, tol).value
    return -scale * adaptive_quad(g, x, 0.0, tol).value


def cauchy_repeated_check(m: int, k: int, x: float, tol: float = 1e-12) -> float:
    """|x^(m+k) m!/(m+k)! - (1/(k-1)!) int_0^x (x-t)^(k-1) t^m dt| for f(t) = t^m."""
    if m < 0 or k < 1:
        raise ValueError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    closed = x ** (m + k) * factorial(m) / factorial(m + k)
    kernel = repeated_integral_op(lambda t: t**m, k, x, tol)
    return abs(closed - kernel)


@dataclass(frozen=True)
class PartialSum:
    n: int
    l: int  # noqa: E741
    x: float
    value: float


def partial_sum_H(n: int, l: int, x: float) -> PartialSum:  # noqa: E741
    """sum_{k=1}^n cos(kx) / k^l."""
    if n < 1 or l < 1:
        raise ValueError(f"need n >= 1 and l >= 1, got n={n}, l={l}")
    value = math.fsum(math.cos(k * x) / k**l for k in range(1, n + 1))
    return PartialSum(n, l, x, value)


_LINEARITY_FUNCS: dict[str, Callable[[float], float]] = {
    "t^2": lambda t: t * t,
    "cos": math.cos,
    "3": lambda t: 3.0,
}


def linearity_check(j: int, x: float, tol: float = DEFAULT_TOL, c: float = 3.0) -> VerificationReport:
    """Additivity and homogeneity of the repeated-integral operator.

    Additivity is tested on every pair of the integrands t^2, cos t and the
    constant 3; homogeneity with scalar ``c`` on each of them.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    names = list(_LINEARITY_FUNCS)
    base = {name: repeated_integral_op(f, j, x, tol) for name, f in _LINEARITY_FUNCS.items()}
    cases = []
    for a_i, a in enumerate(names):
        for b in names[a_i + 1 :]:
            fa, fb = _LINEARITY_FUNCS[a], _LINEARITY_FUNCS[b]
            both = repeated_integral_op(lambda t: fa(t) + fb(t), j, x, tol)
            cases.append(({"property": "additivity", "f": a, "g": b, "j": j, "x": x}, abs(both - base[a] - base[b])))
    for a in names:
        fa = _LINEARITY_FUNCS[a]
        scaled = repeated_integral_op(lambda t: c * fa(t), j, x, tol)
        cases.append(({"property": "homogeneity", "f": a, "c": c, "j": j, "x": x}, abs(scaled - c * base[a])))
    return VerificationReport.build(f"linearity[j={j},x={x:.6g}]", cases, 10 * tol)


def _half_kernel_gap(n: int) -> Callable[[float], float]:
    kernel = KernelIntegrand(n)
    return lambda t: 0.5 - 0.5 * kernel(t)


def telescoping_identities_check(n: int, x: float, tol: float = 1e-8) -> VerificationReport:
    """The two telescoped identities behind zeta(2), right-hand sides by quadrature.

    cosine:  sum cos(kx)/k^2 - sum 1/k^2 = int_0^x G(t, n+1) dt, G = sum_{j<=n} -sin(jt)/j
    sine:    sum -sin(kx)/k              = int_0^x (1/2 - kernel(t)/2) dt
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    quad_tol = quad_tol_for(tol)
    G = get_pair("f1g1").G
    lhs2 = partial_sum_H(n, 2, x).value - partial_sum_H(n, 2, 0.0).value
    lhs3 = math.fsum(-math.sin(k * x) / k for k in range(1, n + 1))
    inputs = {"n": n, "x": x}
    try:
        rhs2 = repeated_integral_op(lambda t: G(t, n + 1), 1, x, quad_tol)
        rhs3 = repeated_integral_op(_half_kernel_gap(n), 1, x, quad_tol)
    except QuadratureError as exc:
        return VerificationReport.build("telescoping", [({**inputs, "identity": "both"}, FAILED)], tol, [str(exc)])
    return VerificationReport.build(
        "telescoping",
        [({**inputs, "identity": "cosine"}, abs(lhs2 - rhs2)), ({**inputs, "identity": "sine"}, abs(lhs3 - rhs3))],
        tol,
    )


def decomposition_check(l: int, n: int, x: float, tol: float = 1e-6) -> float:  # noqa: E741
    """Residual of the repeated-integral decomposition of H_n^(2l)(x).

    H_n^(2l)(x) = (-1)^l I_2l(f)(x) + sum_{j=1}^{l} (-1)^(l-j) I_2(l-j)(H_n^(2j))(x)

    with f(t) = -1/2 + kernel(t)/2 and H_n^(2j) = H_n^(2j)(0) the generalized
    harmonic number, a constant. The j = l term is that constant itself.
    """
    if l < 1 or n < 1:
        raise ValueError(f"need l >= 1 and n >= 1, got l={l}, n={n}")
    quad_tol = quad_tol_for(tol, 10 * (l + 1))
    kernel = KernelIntegrand(n)
    f = lambda t: -0.5 + 0.5 * kernel(t)  # noqa: E731
    lhs = partial_sum_H(n, 2 * l, x).value
    terms = [(-1) ** l * repeated_integral_op(f, 2 * l, x, quad_tol)]
    for j in range(1, l + 1):
        h = partial_sum_H(n, 2 * j, 0.0).value
        terms.append((-1) ** (l - j) * repeated_integral_op(lambda t, h=h: h, 2 * (l - j), x, quad_tol))
    return abs(lhs - math.fsum(terms))


def alternating_relation_check(l: int, N: int, zeta: ZetaCoefficient, pi_prec: int = 30) -> float:  # noqa: E741,N803
    """|sum_{k<=N} (-1)^k/k^(2l) - sum_{k<=N} 1/k^(2l) - (-2 + 2^(1-2l)) q pi^(2l)|.

    Shrinks like the truncation tail, roughly N^(1-2l).
    """
    if zeta.l != l:
        raise ValueError(f"coefficient is for l={zeta.l}, expected l={l}")
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    pi = float(pi_digits(pi_prec))
    power = 2 * l
    # (-1)^k - 1 vanishes for even k
    left = math.fsum(-2.0 / k**power for k in range(1, N + 1, 2))
    limit = (-2 + 2.0 ** (1 - power)) * float(zeta.q) * pi**power
    return abs(left - limit)


# --- sweeps -----------------------------------------------------------------


def _sweep(name: str, tolerance: float, cases: Iterable[tuple[dict, Callable[[], float]]]) -> VerificationReport:
    rows, diags = [], []
    for inputs, run in cases:
        try:
            rows.append((inputs, run()))
        except QuadratureError as exc:
            rows.append((inputs, FAILED))
            diags.append(f"{inputs}: {exc}")
    return VerificationReport.build(name, rows, tolerance, diags)


def lemma3_report(n_max: int = 200, samples: int = 64, seed: int = DEFAULT_SEED, rel_tol: float = 1e-11) -> VerificationReport:
    """Cosine-sum closed form at ``samples`` seeded x in (0, 2pi) for n = 1..n_max.

    Residuals are divided by n so the single tolerance reads per unit n.
    """
    rng = random.Random(seed)
    xs = []
    while len(xs) < samples:
        x = rng.uniform(0.0, TWO_PI)
        if 0.0 < x < TWO_PI:
            xs.append(x)
    cases = [({"n": n, "x": x}, (lambda n=n, x=x: lemma3_check(n, x) / n)) for x in xs for n in range(1, n_max + 1)]
    return _sweep("lemma3", rel_tol, cases)


def lemma4_report(n_max: int = 30, tol: float = 1e-8) -> VerificationReport:
    cases = [
        ({"n": n}, (lambda n=n: abs(lemma4_integral(n, quad_tol_for(tol)).value - math.pi)))
        for n in range(n_max + 1)
    ]
    return _sweep("lemma4", tol, cases)


LEMMA5_S = (1.0, 1.5, 2.0, 3.0)
LEMMA5_N = (0, 1, 5, 10, 50, 200)


def lemma5_report(s_values=LEMMA5_S, n_values=LEMMA5_N, tol: float = 1e-8) -> VerificationReport:
    """Excess of |integral| over the bound; passes when no excess exceeds ``tol``.

    A residual of 0 means the integral sits inside its bound.
    """

    def excess(s, n):
        value, bound = lemma5_integral(s, n, quad_tol_for(tol))
        return max(0.0, abs(value) - bound)

    cases = [({"s": s, "n": n}, (lambda s=s, n=n: excess(s, n))) for s in s_values for n in n_values]
    return _sweep("lemma5", tol, cases)


def cauchy_report(m_values=range(5), k_values=range(1, 6), x_values=(0.5, 1.0, 2.0), tol: float = 1e-9) -> VerificationReport:
    cases = [
        ({"m": m, "k": k, "x": x}, (lambda m=m, k=k, x=x: cauchy_repeated_check(m, k, x, quad_tol_for(tol, 100))))
        for m in m_values
        for k in k_values
        for x in x_values
    ]
    return _sweep("repeated_integration", tol, cases)


DECOMP_L = (1, 2, 3)
DECOMP_N = (5, 10, 20)
DECOMP_X = (1.0, 2.0, math.pi)


def telescoping_report(n_values=DECOMP_N, x_values=DECOMP_X, tol: float = 1e-6) -> VerificationReport:
    rows, diags = [], []
    for n in n_values:
        for x in x_values:
            r = telescoping_identities_check(n, x, tol)
            rows.extend((c.inputs, c.residual) for c in r.cases)
            diags.extend(r.diagnostics)
    return VerificationReport.build("telescoping", rows, tol, diags)


def decomposition_report(l_values=DECOMP_L, n_values=DECOMP_N, x_values=DECOMP_X, tol: float = 1e-6) -> VerificationReport:
    cases = [
        ({"l": l, "n": n, "x": x}, (lambda l=l, n=n, x=x: decomposition_check(l, n, x, tol)))  # noqa: E741
        for l in l_values  # noqa: E741
        for n in n_values
        for x in x_values
    ]
    return _sweep("decomposition", tol, cases)


def alternating_report(zetas, cases=((1, 10**4, 2e-4), (2, 10**3, 1e-8)), pi_prec: int = 30) -> VerificationReport:
    """Alternating relation at fixed ``(l, N, bound)`` triples.

    Each residual is divided by its bound, so the report tolerance is 1.
    """
    by_l = {z.l: z for z in zetas}
    rows = []
    for l, N, bound in cases:  # noqa: E741,N806
        r = alternating_relation_check(l, N, by_l[l], pi_prec)
        rows.append(({"l": l, "N": N, "bound": bound, "residual": r}, r / bound))
    return VerificationReport.build("alternating_relation", rows, 1.0)
