"""
Fixed-point extended-precision reals.

A BigReal is an integer mantissa with a count of decimal digits after the
point. Values built in the same `localscale` block share one scale, so
add/sub are exact and mul/div/sqrt truncate toward zero at that scale.
"""

from __future__ import annotations

import contextvars
import re
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Iterator, Optional, Union

from src.precision.errors import DomainError

DEFAULT_SCALE = 50

_current_scale: contextvars.ContextVar[int] = contextvars.ContextVar(
    "pi_series_scale", default=DEFAULT_SCALE
)

_DECIMAL_RE = re.compile(r"^\s*([+-]?)(\d+)(?:\.(\d*))?\s*$")

Number = Union["BigReal", int, Fraction]


def current_scale() -> int:
    """Scale (digits after the point) of the active precision context."""
    return _current_scale.get()


def resolve_scale(scale: Optional[int]) -> int:
    resolved = current_scale() if scale is None else scale
    if resolved < 1:
        raise ValueError(f"scale must be >= 1, got {resolved}")
    return resolved


@contextmanager
def localscale(scale: int) -> Iterator[int]:
    """
    Run a block with a different working scale.
    Mirrors decimal.localcontext; the setting is per thread/task.
    """
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    token = _current_scale.set(scale)
    try:
        yield scale
    finally:
        _current_scale.reset(token)


def guard_digits(count: int) -> int:
    """Extra digits that absorb `count` accumulated truncations plus 5 spare."""
    return len(str(max(count, 1))) + 5


def div_toward_zero(num: int, den: int) -> int:
    if den == 0:
        raise ZeroDivisionError("division by zero in fixed-point arithmetic")
    q = abs(num) // abs(den)
    return q if (num >= 0) == (den > 0) else -q


@total_ordering
@dataclass(frozen=True, eq=False)
class BigReal:
    """mantissa / 10**scale, immutable."""

    mantissa: int
    scale: int

    # ---- construction -------------------------------------------------

    @classmethod
    def from_int(cls, value: int, scale: Optional[int] = None) -> "BigReal":
        s = resolve_scale(scale)
        return cls(value * 10**s, s)

    @classmethod
    def from_ratio(cls, num: int, den: int, scale: Optional[int] = None) -> "BigReal":
        s = resolve_scale(scale)
        return cls(div_toward_zero(num * 10**s, den), s)

    @classmethod
    def from_fraction(cls, value: Fraction, scale: Optional[int] = None) -> "BigReal":
        value = Fraction(value)
        return cls.from_ratio(value.numerator, value.denominator, scale)

    @classmethod
    def from_decimal_string(cls, text: str, scale: Optional[int] = None) -> "BigReal":
        match = _DECIMAL_RE.match(text)
        if not match:
            raise ValueError(f"Not a decimal string: {text!r}")
        s = resolve_scale(scale)
        sign, whole, frac = match.group(1), match.group(2), match.group(3) or ""
        frac = (frac + "0" * s)[:s]
        mantissa = int(whole) * 10**s + (int(frac) if frac else 0)
        return cls(-mantissa if sign == "-" else mantissa, s)

    @classmethod
    def zero(cls, scale: Optional[int] = None) -> "BigReal":
        return cls(0, resolve_scale(scale))

    @classmethod
    def ulp(cls, scale: Optional[int] = None) -> "BigReal":
        return cls(1, resolve_scale(scale))

    # ---- conversion ---------------------------------------------------

    def to_decimal_string(self) -> str:
        sign = "-" if self.mantissa < 0 else ""
        whole, frac = divmod(abs(self.mantissa), 10**self.scale)
        return f"{sign}{whole}.{frac:0{self.scale}d}"

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def rescale(self, scale: int) -> "BigReal":
        """Change scale; extra digits are dropped toward zero."""
        if scale == self.scale:
            return self
        if scale > self.scale:
            return BigReal(self.mantissa * 10 ** (scale - self.scale), scale)
        return BigReal(div_toward_zero(self.mantissa, 10 ** (self.scale - scale)), scale)

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __str__(self) -> str:
        return self.to_decimal_string()

    def __repr__(self) -> str:
        return f"BigReal('{self.to_decimal_string()}')"

    # ---- arithmetic ---------------------------------------------------

    def _mantissa_of(self, other: Number) -> int:
        if isinstance(other, BigReal):
            if other.scale != self.scale:
                raise ValueError(
                    f"Scale mismatch: {self.scale} vs {other.scale}; rescale first"
                )
            return other.mantissa
        if isinstance(other, int):
            return other * 10**self.scale
        if isinstance(other, Fraction):
            return BigReal.from_fraction(other, self.scale).mantissa
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Number) -> "BigReal":
        m = self._mantissa_of(other)
        if m is NotImplemented:
            return NotImplemented
        return BigReal(self.mantissa + m, self.scale)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "BigReal":
        m = self._mantissa_of(other)
        if m is NotImplemented:
            return NotImplemented
        return BigReal(self.mantissa - m, self.scale)

    def __rsub__(self, other: Number) -> "BigReal":
        m = self._mantissa_of(other)
        if m is NotImplemented:
            return NotImplemented
        return BigReal(m - self.mantissa, self.scale)

    def __mul__(self, other: Number) -> "BigReal":
        if isinstance(other, int):
            return BigReal(self.mantissa * other, self.scale)
        m = self._mantissa_of(other)
        if m is NotImplemented:
            return NotImplemented
        return BigReal(div_toward_zero(self.mantissa * m, 10**self.scale), self.scale)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "BigReal":
        if isinstance(other, int):
            return BigReal(div_toward_zero(self.mantissa, other), self.scale)
        m = self._mantissa_of(other)
        if m is NotImplemented:
            return NotImplemented
        return BigReal(div_toward_zero(self.mantissa * 10**self.scale, m), self.scale)

    def __rtruediv__(self, other: Number) -> "BigReal":
        m = self._mantissa_of(other)
        if m is NotImplemented:
            return NotImplemented
        return BigReal(div_toward_zero(m * 10**self.scale, self.mantissa), self.scale)

    def __pow__(self, exponent: int) -> "BigReal":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("BigReal supports non-negative integer exponents only")
        result = BigReal.from_int(1, self.scale)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __neg__(self) -> "BigReal":
        return BigReal(-self.mantissa, self.scale)

    def __pos__(self) -> "BigReal":
        return self

    def __abs__(self) -> "BigReal":
        return BigReal(abs(self.mantissa), self.scale)

    # ---- ordering -----------------------------------------------------

    def _compare_value(self, other: Number) -> Fraction:
        if isinstance(other, BigReal):
            return other.to_fraction()
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BigReal) and other.scale == self.scale:
            return self.mantissa == other.mantissa
        if not isinstance(other, (BigReal, int, Fraction)):
            return NotImplemented
        return self.to_fraction() == self._compare_value(other)

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __lt__(self, other: Number) -> bool:
        if isinstance(other, BigReal) and other.scale == self.scale:
            return self.mantissa < other.mantissa
        value = self._compare_value(other)
        if value is NotImplemented:
            return NotImplemented
        return self.to_fraction() < value


def br_from_ratio(num: int, den: int, scale: Optional[int] = None) -> BigReal:
    """num/den truncated toward zero at `scale` digits."""
    return BigReal.from_ratio(num, den, scale)


def br_sqrt(x: BigReal) -> BigReal:
    """
    Square root truncated toward zero: the result y satisfies
    y**2 <= x < (y + ulp)**2 exactly.
    """
    if x.mantissa < 0:
        raise DomainError(f"sqrt of negative value {x}")
    return BigReal(isqrt(x.mantissa * 10**x.scale), x.scale)


def br_sqrt_fraction(value: Fraction, scale: Optional[int] = None) -> BigReal:
    """Truncated square root of an exact rational, correct to the last digit."""
    s = resolve_scale(scale)
    value = Fraction(value)
    if value < 0:
        raise DomainError(f"sqrt of negative value {value}")
    return BigReal(isqrt(value.numerator * 10 ** (2 * s) // value.denominator), s)
