"""Exact rational arithmetic, combinatorial primitives and decimal digits of pi.

Rationals are :class:`fractions.Fraction` instances; they are always kept in
lowest terms with a positive denominator, which is what the exact-equality
comparisons elsewhere in the package rely on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Rational",
    "DecimalString",
    "rat_make",
    "factorial",
    "binomial",
    "pi_digits",
    "pi_scaled",
    "MAX_PI_DIGITS",
]

Rational = Fraction

MAX_PI_DIGITS = 10000
PI_GUARD_DIGITS = 10


class DecimalString(str):
    """A fixed-point decimal expansion such as ``"3.14159"``.

    Behaves as a plain ``str``; ``precision`` is the number of digits after
    the decimal point.
    """

    __slots__ = ()

    def __new__(cls, digits: str) -> "DecimalString":
        body = digits.lstrip("-")
        if body.count(".") != 1:
            raise ValueError(f"not a fixed-point decimal: {digits!r}")
        whole, frac = body.split(".")
        if not (whole.isdigit() and frac.isdigit()):
            raise ValueError(f"not a fixed-point decimal: {digits!r}")
        return super().__new__(cls, digits)

    @property
    def digits(self) -> str:
        return str(self)

    @property
    def precision(self) -> int:
        return len(self.split(".", 1)[1])

    @classmethod
    def from_scaled(cls, scaled: int, precision: int) -> "DecimalString":
        """Render the integer ``scaled`` as ``scaled / 10**precision``."""
        sign = "-" if scaled < 0 else ""
        whole, frac = divmod(abs(scaled), 10**precision)
        return cls(f"{sign}{whole}.{_zero_padded(frac, precision)}")


_CHUNK = 1000


def _zero_padded(value: int, width: int) -> str:
    # str(int) is capped at a few thousand digits, so convert in blocks
    if width <= _CHUNK:
        return f"{value:0{width}d}"
    blocks = []
    while width > 0:
        size = min(_CHUNK, width)
        value, low = divmod(value, 10**size)
        blocks.append(f"{low:0{size}d}")
        width -= size
    return "".join(reversed(blocks))


def rat_make(num: int, den: int) -> Fraction:
    """Canonical rational ``num/den``; the sign ends up on the numerator."""
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in rational {num}/0")
    return Fraction(num, den)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k lies outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _arctan_inv(x: int, unity: int) -> int:
    # arctan(1/x) * unity, truncated term by term
    total = term = unity // x
    x2 = x * x
    n = 1
    sign = -1
    while term:
        term //= x2
        total += sign * (term // (2 * n + 1))
        sign = -sign
        n += 1
    return total


@lru_cache(maxsize=64)
def pi_scaled(digits: int) -> int:
    """floor(pi * 10**digits), from Machin's formula with guard digits."""
    unity = 10 ** (digits + PI_GUARD_DIGITS)
    pi = 4 * (4 * _arctan_inv(5, unity) - _arctan_inv(239, unity))
    return pi // 10**PI_GUARD_DIGITS


def pi_digits(precision: int) -> DecimalString:
    """First ``precision`` fractional digits of pi, truncated."""
    if not 1 <= precision <= MAX_PI_DIGITS:
        raise ValueError(f"precision must lie in [1, {MAX_PI_DIGITS}], got {precision}")
    return DecimalString.from_scaled(pi_scaled(precision), precision)
