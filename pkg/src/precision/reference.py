"""
Reference oracles: arctan, sin, cos, tan at full context precision.

These are independent of the methods under test. Every oracle works on
raw integers at the caller's scale plus GUARD_DIGITS, stops at the first
omitted term that vanishes at the working scale, and truncates back.
"""

import logging
from functools import lru_cache
from math import isqrt
from typing import Optional

from src.precision.bigreal import BigReal, div_toward_zero, resolve_scale
from src.precision.errors import DomainError

logger = logging.getLogger(__name__)

GUARD_DIGITS = 10

# arctan arguments are halved until they drop below 1/5
_HALVING_LIMIT_DIVISOR = 5


def _widen(x: BigReal) -> tuple[int, int]:
    work = x.scale + GUARD_DIGITS
    return x.mantissa * 10**GUARD_DIGITS, work


def _narrow(mantissa: int, work: int, scale: int) -> BigReal:
    return BigReal(mantissa, work).rescale(scale)


def _arctan_fixed(X: int, unit: int) -> int:
    """arctan of X/unit, scaled by unit. Requires |X| <= unit."""
    if X < 0:
        return -_arctan_fixed(-X, unit)
    halvings = 0
    # tan(t/2) = x / (1 + sqrt(1 + x^2)); at x = 1 this is sqrt(2) - 1
    while X * _HALVING_LIMIT_DIVISOR > unit:
        X = X * unit // (unit + isqrt(unit * unit + X * X))
        halvings += 1
    x2 = X * X // unit
    power = X
    total = 0
    k = 0
    while True:
        term = power // (2 * k + 1)
        if term == 0:
            break
        total += -term if k & 1 else term
        power = power * x2 // unit
        k += 1
    return total << halvings


def br_arctan_reference(x: BigReal) -> BigReal:
    """arctan(x) for |x| <= 1, to the scale of x."""
    if abs(x.mantissa) > 10**x.scale:
        raise DomainError(f"arctan reference needs |x| <= 1, got {x}")
    X, work = _widen(x)
    return _narrow(_arctan_fixed(X, 10**work), work, x.scale)


def _sin_cos_fixed(X: int, unit: int) -> tuple[int, int]:
    x2 = X * X // unit
    # sine
    term = X
    sin_total = X
    k = 1
    while term != 0:
        term = div_toward_zero(-term * x2, unit * (2 * k) * (2 * k + 1))
        sin_total += term
        k += 1
    # cosine
    term = unit
    cos_total = unit
    k = 1
    while term != 0:
        term = div_toward_zero(-term * x2, unit * (2 * k - 1) * (2 * k))
        cos_total += term
        k += 1
    return sin_total, cos_total


def _check_trig_range(x: BigReal) -> None:
    if abs(x.mantissa) > 2 * 10**x.scale:
        raise DomainError(f"reference trig functions need |x| <= 2, got {x}")


def br_sin_reference(x: BigReal) -> BigReal:
    _check_trig_range(x)
    X, work = _widen(x)
    sin_val, _ = _sin_cos_fixed(X, 10**work)
    return _narrow(sin_val, work, x.scale)


def br_cos_reference(x: BigReal) -> BigReal:
    _check_trig_range(x)
    X, work = _widen(x)
    _, cos_val = _sin_cos_fixed(X, 10**work)
    return _narrow(cos_val, work, x.scale)


def br_tan_reference(x: BigReal) -> BigReal:
    _check_trig_range(x)
    X, work = _widen(x)
    sin_val, cos_val = _sin_cos_fixed(X, 10**work)
    if cos_val == 0:
        raise DomainError(f"tan undefined at {x}")
    return _narrow(div_toward_zero(sin_val * 10**work, cos_val), work, x.scale)


@lru_cache(maxsize=None)
def _pi_quarter_cached(scale: int) -> BigReal:
    logger.debug("Computing reference pi/4 at scale %d", scale)
    return br_arctan_reference(BigReal.from_int(1, scale))


def pi_quarter(scale: Optional[int] = None) -> BigReal:
    """pi/4 as arctan(1), cached per scale."""
    return _pi_quarter_cached(resolve_scale(scale))


def half_pi(scale: Optional[int] = None) -> BigReal:
    return pi_quarter(scale) * 2
