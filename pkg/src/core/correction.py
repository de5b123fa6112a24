"""
Correction terms for the pi/4 series.

After m terms 1 - 1/3 + ... + (-1)^(m-1)/(2m-1) a correction f(m) is added
with the sign of the omitted tail, (-1)^m. A rule is judged by the
invariance criterion: the corrected sum should not change whether the
series is cut after the term 1/(p-2) or after 1/p.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from src.precision.bigreal import BigReal, resolve_scale
from src.precision.errors import DomainError, InsufficientDataError, UnsupportedRuleError
from src.precision.rational import exact_sum
from src.precision.reference import pi_quarter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrectionRule:
    """
    name: rule id; term_fn: m -> f(m) for m >= 1;
    denominator_fn: odd q -> a_q where the correction after the term 1/q is 1/a_q
    (only rules with a closed form carry it).
    """

    name: str
    term_fn: Callable[[int], Fraction]
    denominator_fn: Optional[Callable[[int], int]] = None

    def magnitude(self, m: int) -> Fraction:
        if m < 1:
            raise DomainError(f"correction needs m >= 1 terms, got {m}")
        return self.term_fn(m)


@dataclass(frozen=True)
class ConvergenceRecord:
    method: str
    param: int
    estimate: BigReal
    abs_error: BigReal
    bound: Optional[BigReal] = None

    @classmethod
    def measure(
        cls,
        method: str,
        param: int,
        estimate: BigReal,
        reference: BigReal,
        bound: Optional[BigReal] = None,
    ) -> "ConvergenceRecord":
        return cls(
            method=method,
            param=param,
            estimate=estimate,
            abs_error=abs(estimate - reference),
            bound=bound,
        )


class ConventionCheck(NamedTuple):
    slope: BigReal
    offset_slope: BigReal


RULES: Dict[str, CorrectionRule] = {
    "none": CorrectionRule("none", lambda m: Fraction(0)),
    "a2p": CorrectionRule(
        "a2p", lambda m: Fraction(1, 2 * (2 * m - 1)), lambda q: 2 * q
    ),
    "a2p_plus_2": CorrectionRule(
        "a2p_plus_2", lambda m: Fraction(1, 4 * m), lambda q: 2 * (q + 1)
    ),
    "cf1": CorrectionRule("cf1", lambda m: Fraction(1, 4 * m)),
    "cf2": CorrectionRule("cf2", lambda m: Fraction(m, 4 * m * m + 1)),
    "cf3": CorrectionRule("cf3", lambda m: Fraction(m * m + 1, m * (4 * m * m + 5))),
}


def get_rule(name: str) -> CorrectionRule:
    try:
        return RULES[name]
    except KeyError:
        raise UnsupportedRuleError(
            f"Unknown correction rule '{name}'. Choose from: {', '.join(RULES)}"
        ) from None


def _check_odd_denominator(p: int) -> None:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise DomainError(f"p must be an odd integer >= 3, got {p!r}")


def invariance_residual(p: int, rule: CorrectionRule) -> Fraction:
    """1/a_{p-1} + 1/a_p - 1/p, where a_{p-1} follows the term 1/(p-2)."""
    _check_odd_denominator(p)
    if rule.denominator_fn is None:
        raise UnsupportedRuleError(f"rule '{rule.name}' has no closed-form a_p")
    a = rule.denominator_fn
    return Fraction(1, a(p - 2)) + Fraction(1, a(p)) - Fraction(1, p)


def error_formula_a2p(p: int) -> Fraction:
    """E(p) = 1/((p-1)^2 - 1) for a_p = 2p."""
    _check_odd_denominator(p)
    return Fraction(1, (p - 1) ** 2 - 1)


@lru_cache(maxsize=2048)
def leibniz_partial_exact(m: int) -> Fraction:
    """1 - 1/3 + ... + (-1)^(m-1)/(2m-1), exact."""
    return exact_sum(((-1) ** p, 2 * p + 1) for p in range(m))


def corrected_pi_exact(m: int, rule: CorrectionRule, offset: int = 0) -> Fraction:
    """
    m-term partial sum plus (-1)^m * f(m + offset).
    offset = 0 is the adopted convention; offset = 1 reproduces the rejected
    off-by-one reading and exists for the convention regression check.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"corrected sum needs m >= 1, got {m!r}")
    sign = -1 if m % 2 else 1
    return leibniz_partial_exact(m) + sign * rule.magnitude(m + offset)


def corrected_pi(
    m: int, rule: CorrectionRule, scale: Optional[int] = None, offset: int = 0
) -> BigReal:
    return BigReal.from_fraction(corrected_pi_exact(m, rule, offset), scale)


def transformed_pi_exact(m: int) -> Fraction:
    """1/2 + 1/(2^2-1) - 1/(4^2-1) + ... with m fraction terms."""
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"transformed series needs m >= 0, got {m!r}")
    tail = exact_sum(((-1) ** (j + 1), (2 * j) ** 2 - 1) for j in range(1, m + 1))
    return Fraction(1, 2) + tail


def transformed_pi(m: int, scale: Optional[int] = None) -> BigReal:
    return BigReal.from_fraction(transformed_pi_exact(m), scale)


def transformed_bound(m: int) -> Fraction:
    """First omitted term of the transformed series."""
    return Fraction(1, (2 * m + 2) ** 2 - 1)


def correction_series(rule: CorrectionRule, count: int) -> List[Fraction]:
    """
    Terms of the series obtained by folding the rule into every step:
    term 0 is corrected(1), term j is corrected(j+1) - corrected(j).
    """
    if count < 1:
        raise DomainError(f"need at least one term, got {count}")
    sums = [corrected_pi_exact(m, rule) for m in range(1, count + 1)]
    return [sums[0]] + [b - a for a, b in zip(sums, sums[1:])]


def _log_error(m: int, rule: CorrectionRule, scale: int, offset: int) -> float:
    error = abs(corrected_pi(m, rule, scale, offset) - pi_quarter(scale))
    if error.is_zero():
        raise DomainError(
            f"error of rule '{rule.name}' at m={m} vanishes at scale {scale}; raise digits"
        )
    return math.log(error.to_fraction())


def empirical_order(
    rule: CorrectionRule,
    m_values: Sequence[int],
    scale: Optional[int] = None,
    offset: int = 0,
) -> BigReal:
    """Least-squares slope of log|error| against log m."""
    s = resolve_scale(scale)
    points = sorted(set(m_values))
    if len(points) < 3:
        raise InsufficientDataError(
            f"order fit needs at least 3 distinct m values, got {len(points)}"
        )
    if points[0] < 4:
        raise DomainError(f"order fit needs every m >= 4, got {points[0]}")
    log_m = np.log(np.array(points, dtype=float))
    log_err = np.array([_log_error(m, rule, s, offset) for m in points])
    slope = float(np.polyfit(log_m, log_err, 1)[0])
    logger.info("empirical order rule=%s offset=%d slope=%.4f", rule.name, offset, slope)
    return BigReal.from_fraction(Fraction(slope), s)


def convention_check(
    rule: CorrectionRule, m_values: Sequence[int], scale: Optional[int] = None
) -> ConventionCheck:
    """Order under the adopted term-count convention and under the shifted one."""
    return ConventionCheck(
        slope=empirical_order(rule, m_values, scale),
        offset_slope=empirical_order(rule, m_values, scale, offset=1),
    )
