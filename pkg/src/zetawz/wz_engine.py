"""Continuous-discrete WZ pairs and their numeric verification.

A pair ``(F, G)`` satisfies ``dF/dx (x, k) = G(x, k+1) - G(x, k)``. Summing
over ``k = m..n`` and integrating in ``x`` telescopes into

    sum_{k=m}^{n} F(x, k) - sum_{k=m}^{n} F(h, k)
        = int_h^x G(t, n+1) dt - int_h^x G(t, m) dt,

which :func:`lemma1_check` tests by quadrature. All ``G`` evaluators are
partial sums over ``j = 1..k-1`` and vanish at ``k = 1``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Literal

from .quadrature import QuadratureError, adaptive_quad
from .report import FAILED, VerificationReport

__all__ = [
    "WZPairSpec",
    "catalog",
    "get_pair",
    "wz_residual",
    "lemma1_check",
    "wz_grid_report",
    "grid",
    "DEFAULT_FD_STEP",
    "GRID_POINTS",
]

Evaluator = Callable[[float, int], complex]

DEFAULT_FD_STEP = 1e-5
GRID_POINTS = 32


@dataclass(frozen=True)
class WZPairSpec:
    id: str
    field: Literal["real", "complex"]
    F: Evaluator
    G: Evaluator
    dF_dx: Evaluator | None = None
    description: str = ""

    @property
    def is_complex(self) -> bool:
        return self.field == "complex"


def _partial(term: Callable[[float, int], complex], zero: complex = 0.0) -> Evaluator:
    def G(x: float, k: int):
        total = zero
        for j in range(1, k):
            total += term(x, j)
        return total

    return G


def _real_pair(id, F, term, dF, description):
    return WZPairSpec(id, "real", F, _partial(term), dF, description)


def _complex_pair(id, F, term, dF, description):
    return WZPairSpec(id, "complex", F, _partial(term, 0j), dF, description)


def _cis(x: float, k: int) -> complex:
    return cmath.exp(1j * k * x)


_CATALOG: tuple[WZPairSpec, ...] = (
    # zeta(2): cosine series of weight 2 and its derivative pair
    _real_pair(
        "f1g1",
        lambda x, k: math.cos(k * x) / k**2,
        lambda x, j: -math.sin(j * x) / j,
        lambda x, k: -math.sin(k * x) / k,
        "F = cos(kx)/k^2, G = sum_{j<k} -sin(jx)/j",
    ),
    _real_pair(
        "f2g2",
        lambda x, k: -math.sin(k * x) / k,
        lambda x, j: -math.cos(j * x),
        lambda x, k: -math.cos(k * x),
        "F = -sin(kx)/k, G = sum_{j<k} -cos(jx)",
    ),
    # zeta(4) chain, weights 4, 3, 2, 1
    _real_pair(
        "f1g1_b",
        lambda x, k: math.cos(k * x) / k**4,
        lambda x, j: -math.sin(j * x) / j**3,
        lambda x, k: -math.sin(k * x) / k**3,
        "F = cos(kx)/k^4, G = sum_{j<k} -sin(jx)/j^3",
    ),
    _real_pair(
        "f2g2_b",
        lambda x, k: -math.sin(k * x) / k**3,
        lambda x, j: -math.cos(j * x) / j**2,
        lambda x, k: -math.cos(k * x) / k**2,
        "F = -sin(kx)/k^3, G = sum_{j<k} -cos(jx)/j^2",
    ),
    _real_pair(
        "f3g3",
        lambda x, k: -math.cos(k * x) / k**2,
        lambda x, j: math.sin(j * x) / j,
        lambda x, k: math.sin(k * x) / k,
        "F = -cos(kx)/k^2, G = sum_{j<k} sin(jx)/j",
    ),
    _real_pair(
        "f4g4",
        lambda x, k: math.sin(k * x) / k,
        lambda x, j: math.cos(j * x),
        lambda x, k: math.cos(k * x),
        "F = sin(kx)/k, G = sum_{j<k} cos(jx)",
    ),
    # complex forms; real parts reproduce f1g1
    _complex_pair(
        "complex1",
        lambda x, k: _cis(x, k) / k**2,
        lambda x, j: 1j * _cis(x, j) / j,
        lambda x, k: 1j * _cis(x, k) / k,
        "F = e^{ikx}/k^2, G = sum_{j<k} i e^{ijx}/j",
    ),
    _complex_pair(
        "complex2",
        lambda x, k: 1j * _cis(x, k) / k,
        lambda x, j: -_cis(x, j),
        lambda x, k: -_cis(x, k),
        "F = i e^{ikx}/k, G = sum_{j<k} -e^{ijx}",
    ),
)


def catalog() -> list[WZPairSpec]:
    return list(_CATALOG)


def get_pair(pair_id: str) -> WZPairSpec:
    for pair in _CATALOG:
        if pair.id == pair_id:
            return pair
    raise KeyError(f"unknown WZ pair {pair_id!r}; known: {[p.id for p in _CATALOG]}")


def _resolve(pair: WZPairSpec | str) -> WZPairSpec:
    return get_pair(pair) if isinstance(pair, str) else pair


def wz_residual(
    pair: WZPairSpec | str,
    x: float,
    k: int,
    mode: Literal["analytic", "finite_difference"] = "analytic",
    h: float = DEFAULT_FD_STEP,
) -> float:
    """|dF/dx(x, k) - (G(x, k+1) - G(x, k))|, modulus for complex pairs."""
    pair = _resolve(pair)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if mode == "analytic":
        if pair.dF_dx is None:
            raise ValueError(f"pair {pair.id!r} has no closed-form derivative")
        d = pair.dF_dx(x, k)
    elif mode == "finite_difference":
        if not 0 < h <= 1e-3:
            raise ValueError(f"finite-difference step must lie in (0, 1e-3], got {h}")
        d = (pair.F(x + h, k) - pair.F(x - h, k)) / (2 * h)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return abs(d - (pair.G(x, k + 1) - pair.G(x, k)))


def _integrate(g: Callable[[float], complex], a: float, b: float, tol: float, is_complex: bool) -> complex:
    sign = 1.0
    if b < a:
        a, b, sign = b, a, -1.0
    if not is_complex:
        return sign * adaptive_quad(g, a, b, tol).value
    re = adaptive_quad(lambda t: g(t).real, a, b, tol / 2).value
    im = adaptive_quad(lambda t: g(t).imag, a, b, tol / 2).value
    return sign * complex(re, im)


def lemma1_check(
    pair: WZPairSpec | str,
    x: float,
    h0: float,
    m: int,
    n: int,
    quad_tol: float = 1e-10,
) -> VerificationReport:
    """Telescoping identity for one ``(x, h0, m, n)``, right side by quadrature.

    Passes when the residual is at most ``10 * quad_tol * (1 + |left side|)``.
    """
    pair = _resolve(pair)
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not quad_tol > 0:
        raise ValueError("quad_tol must be positive")
    ks = range(m, n + 1)
    lhs = sum(pair.F(x, k) for k in ks) - sum(pair.F(h0, k) for k in ks)
    inputs = {"pair": pair.id, "x": x, "h0": h0, "m": m, "n": n}
    tolerance = 10 * quad_tol * (1 + abs(lhs))
    name = f"lemma1[{pair.id}]"
    try:
        upper = _integrate(lambda t: pair.G(t, n + 1), h0, x, quad_tol, pair.is_complex)
        lower = _integrate(lambda t: pair.G(t, m), h0, x, quad_tol, pair.is_complex)
    except QuadratureError as exc:
        return VerificationReport.build(name, [(inputs, FAILED)], tolerance, [str(exc)])
    return VerificationReport.build(name, [(inputs, abs(lhs - (upper - lower)))], tolerance)


def grid(points: int = GRID_POINTS) -> list[float]:
    """``points`` equally spaced abscissae covering [0, pi], ends included."""
    return [math.pi * i / (points - 1) for i in range(points)]


def wz_grid_report(
    pair: WZPairSpec | str,
    mode: Literal["analytic", "finite_difference"] = "analytic",
    k_max: int = 12,
    points: int = GRID_POINTS,
    h: float = DEFAULT_FD_STEP,
    tolerance: float | None = None,
) -> VerificationReport:
    """WZ-equation residuals over the x-grid and k = 1..k_max.

    Analytic mode scales each residual by ``1 + |G(x, k+1)|`` and uses a
    default tolerance of 1e-12; finite-difference mode reports raw residuals
    against 1e-7.
    """
    pair = _resolve(pair)
    if tolerance is None:
        tolerance = 1e-12 if mode == "analytic" else 1e-7
    cases = []
    for x in grid(points):
        for k in range(1, k_max + 1):
            r = wz_residual(pair, x, k, mode, h)
            if mode == "analytic":
                r /= 1 + abs(pair.G(x, k + 1))
            cases.append(({"x": x, "k": k}, r))
    return VerificationReport.build(f"wz[{pair.id}:{mode}]", cases, tolerance)
