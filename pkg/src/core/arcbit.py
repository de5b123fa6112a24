"""
Arc-bit construction for pi/4 and arctan.

The tangent EA (length x_max) is cut into n equal parts. The hypotenuse
(karna) to the i-th point has squared length k_i^2 = 1 + (i*x_max/n)^2 and
the half-chord between neighbouring hypotenuses is
b_i = (x_max/n) / (k_i * k_{i+1}). Summing the b_i approximates the arc.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from src.precision.bigreal import (
    BigReal,
    br_sqrt,
    br_sqrt_fraction,
    guard_digits,
    resolve_scale,
)
from src.precision.errors import DomainError
from src.precision.rational import exact_sum
from src.precision.reference import br_arctan_reference

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArcBitGrid:
    n: int
    x_max: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"grid needs n >= 1, got {self.n!r}")
        x_max = Fraction(self.x_max)
        if x_max < 0 or x_max > 1:
            raise DomainError(f"tangent length must lie in [0, 1], got {x_max}")
        object.__setattr__(self, "x_max", x_max)

    @property
    def step(self) -> Fraction:
        return self.x_max / self.n

    def point(self, i: int) -> Fraction:
        """Distance E -> A_i."""
        return i * self.step


class SandwichBounds(NamedTuple):
    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


@dataclass(frozen=True)
class GapReport:
    n: int
    d_n: BigReal
    bound: BigReal
    angle_sum: BigReal

    @property
    def within_bound(self) -> bool:
        return 0 <= self.d_n <= self.bound


def grid_for(n: int, x_max: Union[Fraction, int, str] = 1) -> ArcBitGrid:
    return ArcBitGrid(n=n, x_max=Fraction(x_max))


def karna_sq(i: int, grid: ArcBitGrid) -> Fraction:
    """k_i^2 = 1 + (i*x_max/n)^2, exact."""
    if not 0 <= i <= grid.n:
        raise IndexError(f"karna index {i} outside 0..{grid.n}")
    return 1 + grid.point(i) ** 2


def arc_bit(i: int, grid: ArcBitGrid, scale: Optional[int] = None) -> BigReal:
    """
    b_i = (x_max/n) / (k_i * k_{i+1}).
    Evaluated as one square root of the exact rational b_i^2, so the result
    is b_i truncated at the last digit.
    """
    if not 0 <= i < grid.n:
        raise IndexError(f"arc-bit index {i} outside 0..{grid.n - 1}")
    s = resolve_scale(scale)
    squared = grid.step**2 / (karna_sq(i, grid) * karna_sq(i + 1, grid))
    return br_sqrt_fraction(squared, s)


def arc_bit_sum(grid: ArcBitGrid, scale: Optional[int] = None) -> BigReal:
    """Sum of all n arc bits; tends to arctan(x_max) (pi/4 at x_max = 1)."""
    s = resolve_scale(scale)
    if grid.x_max == 0:
        return BigReal.zero(s)
    work = s + guard_digits(grid.n)
    logger.debug("arc_bit_sum n=%d x_max=%s work scale=%d", grid.n, grid.x_max, work)
    total = sum(arc_bit(i, grid, work).mantissa for i in range(grid.n))
    return BigReal(total, work).rescale(s)


def sandwich_bounds(grid: ArcBitGrid) -> SandwichBounds:
    """
    Exact lower/upper sums (1/n)Σ1/k_{i+1}^2 and (1/n)Σ1/k_i^2.
    Both share the inner terms i = 1..n-1, so the width telescopes to
    (1/n)(1/k_0^2 - 1/k_n^2) = 1/(2n).
    """
    if grid.x_max != 1:
        raise DomainError("sandwich bounds are defined for x_max = 1 only")
    n = grid.n
    # 1/k_i^2 = n^2 / (n^2 + i^2)
    inner = exact_sum((n * n, n * n + i * i) for i in range(1, n))
    first = Fraction(1)
    last = Fraction(n * n, 2 * n * n)
    lower = (inner + last) / n
    upper = (first + inner) / n
    return SandwichBounds(lower=lower, upper=upper)


def gap_bound(n: int, scale: Optional[int] = None) -> BigReal:
    """1/sqrt(1 - 1/n^2) - 1, the chord-vs-arc gap bound with lambda_max = 1."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"gap bound is degenerate for n < 2, got {n!r}")
    s = resolve_scale(scale)
    work = s + guard_digits(n)
    root = br_sqrt_fraction(Fraction(n * n, n * n - 1), work)
    return (root - 1).rescale(s)


def bit_angle(i: int, grid: ArcBitGrid, scale: Optional[int] = None) -> BigReal:
    """c_i = arctan(b_i / OQ_i) with OQ_i = sqrt(1 - b_i^2)."""
    s = resolve_scale(scale)
    b = arc_bit(i, grid, s)
    oq = br_sqrt(1 - b * b)
    return br_arctan_reference(b / oq)


def bit_angle_by_difference(
    i: int, grid: ArcBitGrid, scale: Optional[int] = None
) -> BigReal:
    """c_i = arctan(A_{i+1}) - arctan(A_i)."""
    if not 0 <= i < grid.n:
        raise IndexError(f"arc-bit index {i} outside 0..{grid.n - 1}")
    s = resolve_scale(scale)
    upper = br_arctan_reference(BigReal.from_fraction(grid.point(i + 1), s))
    lower = br_arctan_reference(BigReal.from_fraction(grid.point(i), s))
    return upper - lower


def measure_gap(grid: ArcBitGrid, scale: Optional[int] = None) -> GapReport:
    """d(n) = Σ(c_i - b_i) measured with the arctan oracle."""
    if grid.x_max != 1:
        raise DomainError("gap measurement is defined for x_max = 1 only")
    if grid.n < 2:
        raise DomainError(f"gap measurement needs n >= 2, got {grid.n}")
    s = resolve_scale(scale)
    work = s + guard_digits(grid.n)
    logger.debug("measure_gap n=%d work scale=%d", grid.n, work)
    bit_total = 0
    angle_total = 0
    for i in range(grid.n):
        b = arc_bit(i, grid, work)
        oq = br_sqrt(1 - b * b)
        bit_total += b.mantissa
        angle_total += br_arctan_reference(b / oq).mantissa
    d_n = BigReal(angle_total - bit_total, work).rescale(s)
    return GapReport(
        n=grid.n,
        d_n=d_n,
        bound=gap_bound(grid.n, s),
        angle_sum=BigReal(angle_total, work).rescale(s),
    )
