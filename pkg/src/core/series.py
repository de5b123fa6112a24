"""
The alternating arctan / pi series and the series-of-results machinery.

arctan(x) = x - x^3/3 + x^5/5 - ... with the first omitted term as the
remainder bound, the truncated geometric expansion of 1/(1+x^2) with its
exact tail, and the finite-n decomposition of the arc-bit sum into
sum_{p<M} (-1)^p t(p,n) plus (-1)^M r(M,n).
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from src.core.powersum import MAX_DEPTH, t_of
from src.precision.bigreal import BigReal, guard_digits, resolve_scale
from src.precision.errors import DomainError
from src.precision.rational import exact_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesState:
    terms_used: int
    partial_sum: BigReal
    last_term: BigReal
    remainder_bound: BigReal
    x: BigReal


class GeometricTruncation(NamedTuple):
    head: Fraction
    tail: Fraction


class DecomposedArcSum(NamedTuple):
    head_sum: Fraction
    tail_sum: Fraction
    depth: int

    @property
    def total(self) -> Fraction:
        sign = -1 if self.depth % 2 else 1
        return self.head_sum + sign * self.tail_sum


def _check_unit_interval(x: Union[BigReal, Fraction], what: str = "x") -> None:
    if x < 0 or x > 1:
        raise DomainError(f"{what} must lie in [0, 1], got {x}")


def arctan_partial(x: BigReal, m: int) -> SeriesState:
    """Sum of the terms p = 0..m of the arctan series at x in [0, 1]."""
    _check_unit_interval(x)
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"term index m must be >= 0, got {m!r}")
    s = x.scale
    work = s + guard_digits(m + 1)
    xw = x.rescale(work)
    x2 = xw * xw
    power = xw
    total = BigReal.zero(work)
    last = BigReal.zero(work)
    for p in range(m + 1):
        last = power / (2 * p + 1)
        if p % 2:
            last = -last
        total = total + last
        power = power * x2
    # power now holds x^(2m+3)
    bound = power / (2 * m + 3)
    return SeriesState(
        terms_used=m,
        partial_sum=total.rescale(s),
        last_term=last.rescale(s),
        remainder_bound=bound.rescale(s),
        x=x,
    )


def arctan_partial_exact(x: Fraction, m: int) -> Fraction:
    """Exact rational partial sum of the arctan series."""
    x = Fraction(x)
    _check_unit_interval(x)
    if m < 0:
        raise DomainError(f"term index m must be >= 0, got {m}")
    return exact_sum((-1) ** p * x ** (2 * p + 1) / (2 * p + 1) for p in range(m + 1))


def terms_for_tolerance(x: Fraction, epsilon: Fraction) -> int:
    """Smallest m whose first omitted term x^(2m+3)/(2m+3) is below epsilon."""
    x = Fraction(x)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    _check_unit_interval(x)
    m = 0
    while x ** (2 * m + 3) / (2 * m + 3) >= epsilon:
        m += 1
    return m


def geometric_truncation(i_over_n: Fraction, M: int) -> GeometricTruncation:
    """
    1/(1+q^2) = sum_{p<M} (-1)^p q^(2p) + (-1)^M q^(2M)/(1+q^2), exactly.
    """
    q = Fraction(i_over_n)
    _check_unit_interval(q, "i/n")
    if not isinstance(M, int) or M < 1:
        raise DomainError(f"truncation depth M must be >= 1, got {M!r}")
    y = q * q
    head = exact_sum((-y) ** p for p in range(M))
    tail = y**M / (1 + y)
    return GeometricTruncation(head=head, tail=tail)


def r_of(p: int, n: int) -> Fraction:
    """r(p, n) = (1/n) * sum_{i<n} (i/n)^(2p) / (1 + (i/n)^2)."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be >= 1, got {n!r}")
    if not isinstance(p, int) or p < 0 or p > MAX_DEPTH:
        raise DomainError(f"p must be in [0, {MAX_DEPTH}], got {p!r}")
    # each term is i^(2p) * n^(1-2p) / (n^2 + i^2)
    inner = exact_sum((i ** (2 * p), n * n + i * i) for i in range(n))
    return inner * Fraction(n, n ** (2 * p))


def direct_arc_sum(n: int) -> Fraction:
    """(1/n) * sum_{i<n} 1/(1+(i/n)^2)."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be >= 1, got {n!r}")
    return exact_sum((n, n * n + i * i) for i in range(n))


def decomposed_arc_sum(n: int, M: int) -> DecomposedArcSum:
    """Split the finite-n arc sum into the first M normalised power sums and r(M, n)."""
    if not isinstance(M, int) or M < 1 or M > MAX_DEPTH:
        raise DomainError(f"M must be in [1, {MAX_DEPTH}], got {M!r}")
    head = exact_sum((-1) ** p * t_of(p, n) for p in range(M))
    return DecomposedArcSum(head_sum=head, tail_sum=r_of(M, n), depth=M)


def tail_terms_for_epsilon(epsilon: Union[BigReal, Fraction, int]) -> int:
    """Smallest M >= 1 with 2/(2M+1) < epsilon."""
    eps = epsilon.to_fraction() if isinstance(epsilon, BigReal) else Fraction(epsilon)
    if eps <= 0:
        raise DomainError(f"epsilon must be positive, got {eps}")
    # 2/(2M+1) < eps  <=>  M > (2/eps - 1)/2
    threshold = (2 / eps - 1) / 2
    return max(1, math.floor(threshold) + 1)


lemma2_epsilon_to_M = tail_terms_for_epsilon


def pi_series_partial(terms: int, scale: Optional[int] = None) -> SeriesState:
    """The pi/4 series with `terms` terms (terms >= 1)."""
    if terms < 1:
        raise DomainError(f"need at least one term, got {terms}")
    return arctan_partial(BigReal.from_int(1, resolve_scale(scale)), terms - 1)
