"""
Transmutation of the quarter circle and a quadrature oracle for its integrals.

For the circle y = sqrt(2x - x^2) the tangent at x meets the y-axis at
z(x) = y - x*dy/dx. The sector area argument turns arctan(z) into
z - integral_0^z t^2/(1+t^2) dt, which is checked here numerically with a
composite rule on an enumerated set of integrands.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from src.precision.bigreal import (
    BigReal,
    br_sqrt_fraction,
    div_toward_zero,
    guard_digits,
)
from src.precision.errors import DomainError, UnknownIntegrandError
from src.precision.reference import GUARD_DIGITS

logger = logging.getLogger(__name__)

MAX_INTEGRAND_POWER = 64
SCHEMES = ("midpoint", "trapezoid")
DEFAULT_REMAINDER_PANELS = 2000

_RATIONAL_RE = re.compile(r"^(?:1|t(?:\^(\d+))?)/\(1\+t\^2\)$")
_MONOMIAL_RE = re.compile(r"^(?:1|t(?:\^(\d+))?)$")


@dataclass(frozen=True)
class Integrand:
    """t^k/(1+t^2) when kind is "rational", plain t^k when kind is "monomial"."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in ("rational", "monomial"):
            raise UnknownIntegrandError(f"Unknown integrand kind '{self.kind}'")
        if not isinstance(self.k, int) or not 0 <= self.k <= MAX_INTEGRAND_POWER:
            raise UnknownIntegrandError(
                f"integrand power must be in [0, {MAX_INTEGRAND_POWER}], got {self.k!r}"
            )

    @property
    def id(self) -> str:
        top = "1" if self.k == 0 else ("t" if self.k == 1 else f"t^{self.k}")
        return f"{top}/(1+t^2)" if self.kind == "rational" else top

    def curvature_bound(self, lower: Fraction, upper: Fraction) -> Fraction:
        """An upper bound for |f''| on [lower, upper]."""
        k = self.k
        if self.kind == "monomial":
            if k < 2:
                return Fraction(0)
            reach = max(abs(lower), abs(upper))
            return k * (k - 1) * reach ** (k - 2)
        if k in (0, 2):
            # 1/(1+t^2) and 1 - 1/(1+t^2) share |f''| <= 2 on the whole line
            return Fraction(2)
        if lower < -1 or upper > 1:
            raise DomainError(f"no curvature bound for {self.id} outside [-1, 1]")
        # f = t^k g with |g| <= 1, |g'| <= 1, |g''| <= 2 on [-1, 1]
        return Fraction(k * (k - 1) + 2 * k + 2)


ARCTAN_INTEGRAND = Integrand("rational", 0)
SECTOR_INTEGRAND = Integrand("rational", 2)


def parse_integrand(text: str) -> Integrand:
    """Accepts 1/(1+t^2), t^2/(1+t^2), t^k/(1+t^2) and t^k (spaces ignored)."""
    compact = text.replace(" ", "")
    for kind, pattern in (("rational", _RATIONAL_RE), ("monomial", _MONOMIAL_RE)):
        match = pattern.match(compact)
        if match:
            if compact.startswith("1"):
                k = 0
            else:
                k = int(match.group(1)) if match.group(1) else 1
            return Integrand(kind, k)
    raise UnknownIntegrandError(
        f"Unknown integrand '{text}'. Expected 1/(1+t^2), t^k/(1+t^2) or t^k"
    )


@dataclass(frozen=True)
class QuadratureSpec:
    lower: BigReal
    upper: BigReal
    panels: int
    scheme: str = "trapezoid"

    def __post_init__(self):
        if self.lower.scale != self.upper.scale:
            raise ValueError(
                f"interval ends differ in scale: {self.lower.scale} vs {self.upper.scale}"
            )
        if self.lower > self.upper:
            raise DomainError(f"lower {self.lower} exceeds upper {self.upper}")
        if not isinstance(self.panels, int) or self.panels < 1:
            raise DomainError(f"need at least one panel, got {self.panels!r}")
        if self.scheme not in SCHEMES:
            raise DomainError(
                f"Unknown scheme '{self.scheme}'. Choose from: {', '.join(SCHEMES)}"
            )

    @property
    def width(self) -> BigReal:
        return self.upper - self.lower


@dataclass(frozen=True)
class TransmutationReport:
    """
    Residuals of the relations linking x, the ordinate y and the intercept z.
    intercept_residual: y - z(2-x), zero.
    square_ratio_residual: x - z^2/(1+z^2), equals x/2 on this circle.
    doubled_ratio_residual: x - 2z^2/(1+z^2), zero.
    """

    x: BigReal
    y: BigReal
    z: BigReal
    intercept_residual: BigReal
    square_ratio_residual: BigReal
    doubled_ratio_residual: BigReal

    def holds(self, residual: BigReal, ulps: int = 50) -> bool:
        return abs(residual) <= BigReal.ulp(residual.scale) * ulps


def circle_y(x: BigReal) -> BigReal:
    """sqrt(2x - x^2) for x in [0, 2]."""
    if x < 0 or x > 2:
        raise DomainError(f"circle ordinate needs x in [0, 2], got {x}")
    xf = x.to_fraction()
    return br_sqrt_fraction(xf * (2 - xf), x.scale)


def transmutation_z(x: BigReal) -> BigReal:
    """Tangent intercept y - x*(1-x)/y, using dy/dx = (1-x)/y."""
    if x <= 0 or x >= 2:
        raise DomainError(f"transmutation is singular at the endpoints, got x = {x}")
    work = x.scale + GUARD_DIGITS
    xw = x.rescale(work)
    y = circle_y(xw)
    z = y - xw * (1 - xw) / y
    return z.rescale(x.scale)


def transmutation_relations(x: BigReal) -> TransmutationReport:
    if x <= 0 or x >= 2:
        raise DomainError(f"transmutation is singular at the endpoints, got x = {x}")
    work = x.scale + GUARD_DIGITS
    xw = x.rescale(work)
    y = circle_y(xw)
    z = transmutation_z(xw)
    z2 = z * z
    ratio = z2 / (1 + z2)
    report = TransmutationReport(
        x=x,
        y=y.rescale(x.scale),
        z=z.rescale(x.scale),
        intercept_residual=(y - z * (2 - xw)).rescale(x.scale),
        square_ratio_residual=(xw - ratio).rescale(x.scale),
        doubled_ratio_residual=(xw - ratio * 2).rescale(x.scale),
    )
    logger.debug("transmutation at x=%s: z=%s", x, report.z)
    return report


def _kernel(integrand: Integrand, unit: int):
    """Integrand on raw mantissas: T -> f(T/unit) * unit."""
    k = integrand.k
    lift = unit**k
    if integrand.kind == "monomial":
        return lambda T: T**k * unit // lift
    unit_sq = unit * unit
    return lambda T: T**k * unit_sq * unit // (lift * (unit_sq + T * T))


def quad(integrand: Integrand, spec: QuadratureSpec) -> BigReal:
    """Composite midpoint or trapezoid rule, at the scale of the interval ends."""
    scale = spec.lower.scale
    if spec.lower == spec.upper:
        return BigReal.zero(scale)
    P = spec.panels
    work = scale + guard_digits(P)
    unit = 10**work
    A = spec.lower.rescale(work).mantissa
    B = spec.upper.rescale(work).mantissa
    f = _kernel(integrand, unit)
    logger.debug(
        "quad %s %s panels=%d work scale=%d", integrand.id, spec.scheme, P, work
    )
    if spec.scheme == "trapezoid":
        inner = sum(f((A * P + (B - A) * i) // P) for i in range(1, P))
        weighted = f(A) + f(B) + 2 * inner
        total = div_toward_zero((B - A) * weighted, 2 * unit * P)
    else:
        mids = sum(f((A * 2 * P + (B - A) * (2 * i + 1)) // (2 * P)) for i in range(P))
        total = div_toward_zero((B - A) * mids, unit * P)
    return BigReal(total, work).rescale(scale)


def quadrature_error_bound(integrand: Integrand, spec: QuadratureSpec) -> BigReal:
    """(b-a) h^2 / 12 * max|f''| for the trapezoid rule, / 24 for the midpoint rule."""
    lower = spec.lower.to_fraction()
    upper = spec.upper.to_fraction()
    h = (upper - lower) / spec.panels
    divisor = 12 if spec.scheme == "trapezoid" else 24
    bound = (upper - lower) * h * h / divisor * integrand.curvature_bound(lower, upper)
    return BigReal.from_fraction(bound, spec.lower.scale)


def _check_unit(value: BigReal, what: str) -> None:
    if value < 0 or value > 1:
        raise DomainError(f"{what} must lie in [0, 1], got {value}")


def transmutation_arctan(
    z: BigReal, panels: int, scheme: str = "trapezoid"
) -> BigReal:
    """z - integral_0^z t^2/(1+t^2) dt, which equals arctan(z)."""
    _check_unit(z, "z")
    if z.is_zero():
        return BigReal.zero(z.scale)
    spec = QuadratureSpec(BigReal.zero(z.scale), z, panels, scheme)
    return z - quad(SECTOR_INTEGRAND, spec)


def transmutation_error_bound(
    z: BigReal, panels: int, scheme: str = "trapezoid"
) -> BigReal:
    _check_unit(z, "z")
    spec = QuadratureSpec(BigReal.zero(z.scale), z, panels, scheme)
    return quadrature_error_bound(SECTOR_INTEGRAND, spec)


def remainder_integral_bound(x: BigReal, n: int) -> BigReal:
    """x^(2n+3)/(2n+3), dominating integral_0^x t^(2n+2)/(1+t^2) dt."""
    _check_unit(x, "x")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be >= 0, got {n!r}")
    return BigReal.from_fraction(x.to_fraction() ** (2 * n + 3) / (2 * n + 3), x.scale)


def remainder_integral(
    x: BigReal,
    n: int,
    panels: int = DEFAULT_REMAINDER_PANELS,
    scheme: str = "trapezoid",
) -> BigReal:
    """integral_0^x t^(2n+2)/(1+t^2) dt, the arctan series remainder in integral form."""
    _check_unit(x, "x")
    if not isinstance(n, int) or n < 0 or 2 * n + 2 > MAX_INTEGRAND_POWER:
        raise DomainError(
            f"n must be in [0, {(MAX_INTEGRAND_POWER - 2) // 2}], got {n!r}"
        )
    spec = QuadratureSpec(BigReal.zero(x.scale), x, panels, scheme)
    return quad(Integrand("rational", 2 * n + 2), spec)

