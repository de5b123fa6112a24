"""
Equal power sums (samaghata samkalita).

Exact sums of powers of the first n naturals, the large-n approximation
n^(p+1)/(p+1), the normalised sums t(p, n) with their limits 1/(2p+1),
and the repeated (telescoped) sums used by the sine derivation.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from src.precision.bigreal import BigReal
from src.precision.errors import DomainError

logger = logging.getLogger(__name__)

# Largest truncation depth accepted by t/T/r; power sums inside t(p, n)
# reach exponent 2p.
MAX_DEPTH = 16
MAX_EXPONENT = 2 * MAX_DEPTH


@dataclass(frozen=True)
class PowerSumResult:
    n: int
    p: int
    exact: Fraction
    approx: Fraction
    rel_err: BigReal


def _check_n(n: int, minimum: int = 1) -> None:
    if not isinstance(n, int) or n < minimum:
        raise DomainError(f"n must be an integer >= {minimum}, got {n!r}")


def _check_exponent(p: int, limit: int) -> None:
    if not isinstance(p, int) or p < 0 or p > limit:
        raise DomainError(f"power must be an integer in [0, {limit}], got {p!r}")


@lru_cache(maxsize=4096)
def _power_sum(n: int, p: int) -> int:
    # n may be 0 here (empty sum)
    return sum(i**p for i in range(1, n + 1))


def power_sum_exact(n: int, p: int) -> Fraction:
    """S_n^p = 1^p + 2^p + ... + n^p."""
    _check_n(n)
    _check_exponent(p, MAX_EXPONENT)
    return Fraction(_power_sum(n, p))


def power_sum_approx(n: int, p: int) -> Fraction:
    """n^(p+1)/(p+1), the leading term of S_n^p."""
    _check_n(n)
    _check_exponent(p, MAX_EXPONENT)
    return Fraction(n ** (p + 1), p + 1)


def power_sum_result(n: int, p: int, scale: Optional[int] = None) -> PowerSumResult:
    exact = power_sum_exact(n, p)
    approx = power_sum_approx(n, p)
    rel_err = BigReal.from_fraction(abs(exact - approx) / approx, scale)
    return PowerSumResult(n=n, p=p, exact=exact, approx=approx, rel_err=rel_err)


def t_of(p: int, n: int) -> Fraction:
    """t(p, n) = (1/n) * sum_{i=0}^{n-1} (i/n)^(2p), with 0^0 = 1."""
    _check_n(n)
    _check_exponent(p, MAX_DEPTH)
    zero_term = 1 if p == 0 else 0
    return Fraction(_power_sum(n - 1, 2 * p) + zero_term, n ** (2 * p + 1))


def T_limit(p: int) -> Fraction:
    """lim t(p, n) = 1/(2p+1)."""
    _check_exponent(p, MAX_DEPTH)
    return Fraction(1, 2 * p + 1)


def repeated_power_sum(n: int, p: int) -> Fraction:
    """S_{n-1}^p + S_{n-2}^p + ... + S_1^p."""
    _check_n(n)
    _check_exponent(p, MAX_EXPONENT)
    running = 0
    total = 0
    for k in range(1, n):
        running += k**p
        total += running
    return Fraction(total)


def repeated_sum(n: int) -> Fraction:
    """Sum of the first n-1 triangular numbers, (n-1)n(n+1)/6."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"repeated_sum needs n >= 2, got {n!r}")
    return repeated_power_sum(n, 1)


def induction_residual(n: int, p: int) -> Fraction:
    """n*S_n^(p-1) - S_n^p - sum_{k<n} S_k^(p-1); zero for every n, p >= 1."""
    _check_n(n)
    if p < 1:
        raise DomainError(f"induction step needs p >= 1, got {p}")
    lhs = n * power_sum_exact(n, p - 1) - power_sum_exact(n, p)
    return lhs - repeated_power_sum(n, p - 1)
