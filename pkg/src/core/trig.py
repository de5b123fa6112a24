"""
Sine and versine by iterative refinement, and chord sums.

The arc s is cut into n bits of length h = s/n with B_j = sin(j*h). Second
differences satisfy B_{j+1} - 2B_j + B_{j-1} = -alpha^2 * B_j with
alpha = 2 sin(h/2). Substituting an estimate for the B_j on the right and
summing twice refines the estimate; in the large-n limit each pass maps
s^d to s^(d+2)/((d+1)(d+2)) and the sine series appears term by term.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Tuple

from src.core.powersum import repeated_sum
from src.precision.bigreal import BigReal, guard_digits
from src.precision.errors import DomainError
from src.precision.reference import br_sin_reference, half_pi

logger = logging.getLogger(__name__)

SINE_LEADING_DEGREE = 1
VERSINE_LEADING_DEGREE = 2


@dataclass(frozen=True)
class SineRefinement:
    """
    coefficients[j] multiplies s^(leading_degree + 2j).
    leading_degree 1 is the sine polynomial, 2 the versine polynomial.
    """

    iteration: int
    coefficients: Tuple[Fraction, ...] = field(default_factory=tuple)
    leading_degree: int = SINE_LEADING_DEGREE

    @property
    def degree(self) -> int:
        if not self.coefficients:
            return 0
        return self.leading_degree + 2 * (len(self.coefficients) - 1)


def initial_sine_state() -> SineRefinement:
    """P_0(s) = s."""
    return SineRefinement(iteration=0, coefficients=(Fraction(1),))


def initial_versine_state() -> SineRefinement:
    """V_0(s) = 0."""
    return SineRefinement(
        iteration=0, coefficients=(), leading_degree=VERSINE_LEADING_DEGREE
    )


def refine_polynomial(state: SineRefinement) -> SineRefinement:
    """
    One pass: P'(s) = s^L/L! - D(P)(s), D(s^d) = s^(d+2)/((d+1)(d+2)).
    For the sine (L = 1): c'_0 = 1, c'_{j+1} = -c_j/((2j+2)(2j+3)).
    """
    lead = state.leading_degree
    refined = [Fraction(1, factorial(lead))]
    for j, c in enumerate(state.coefficients):
        d = lead + 2 * j
        refined.append(-c / ((d + 1) * (d + 2)))
    return SineRefinement(
        iteration=state.iteration + 1,
        coefficients=tuple(refined),
        leading_degree=lead,
    )


def refine_versine_polynomial(state: SineRefinement) -> SineRefinement:
    if state.leading_degree != VERSINE_LEADING_DEGREE:
        raise DomainError("state is not a versine polynomial")
    return refine_polynomial(state)


def _refined(state: SineRefinement, iterations: int) -> SineRefinement:
    if iterations < 0:
        raise DomainError(f"iterations must be >= 0, got {iterations}")
    for _ in range(iterations):
        state = refine_polynomial(state)
    return state


def _check_angle(s: BigReal, allow_zero: bool = True) -> None:
    if s < 0 or (not allow_zero and s.is_zero()) or s > half_pi(s.scale):
        interval = "[0, pi/2]" if allow_zero else "(0, pi/2]"
        raise DomainError(f"angle must lie in {interval}, got {s}")


def _evaluate(state: SineRefinement, s: BigReal) -> BigReal:
    work = s.scale + guard_digits(len(state.coefficients) + 1)
    sw = s.rescale(work)
    s2 = sw * sw
    acc = BigReal.zero(work)
    for c in reversed(state.coefficients):
        acc = acc * s2 + BigReal.from_fraction(c, work)
    return (acc * sw**state.leading_degree).rescale(s.scale)


def sine_estimate(s: BigReal, iterations: int) -> BigReal:
    """P_k(s) after k refinements of P_0(s) = s."""
    _check_angle(s)
    return _evaluate(_refined(initial_sine_state(), iterations), s)


def versine_estimate(s: BigReal, iterations: int) -> BigReal:
    """k-term approximation of 1 - cos(s): s^2/2! - s^4/4! + ..."""
    _check_angle(s)
    return _evaluate(_refined(initial_versine_state(), iterations), s)


def taylor_remainder(s: BigReal, degree: int) -> BigReal:
    """s^degree / degree!, the first omitted term of an alternating Taylor sum."""
    return BigReal.from_fraction(s.to_fraction() ** degree / factorial(degree), s.scale)


def second_difference_residual(s: BigReal, n: int, j: int) -> BigReal:
    """
    [sin((j+1)h) - 2 sin(jh) + sin((j-1)h)] + alpha^2 sin(jh), h = s/n.
    Zero up to rounding; computed at the caller's scale.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"need n >= 2 bits, got {n!r}")
    if not 1 <= j <= n - 1:
        raise IndexError(f"bit index {j} outside 1..{n - 1}")
    _check_angle(s, allow_zero=False)
    prev = br_sin_reference(s * (j - 1) / n)
    here = br_sin_reference(s * j / n)
    nxt = br_sin_reference(s * (j + 1) / n)
    alpha = br_sin_reference(s / (2 * n)) * 2
    return (nxt - here * 2 + prev) + alpha * alpha * here


def global_recursion_residual(s: BigReal, n: int) -> BigReal:
    """
    B_n - [n B_1 - alpha^2 * sum_{j=1}^{n-1} sum_{k=1}^{j} B_k]
    with B_j = sin(js/n) from the reference oracle, summed at guard scale.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"need n >= 2 bits, got {n!r}")
    _check_angle(s, allow_zero=False)
    work = s.scale + guard_digits(n * n)
    wide = s.rescale(work)
    bits = [br_sin_reference(wide * j / n) for j in range(1, n + 1)]
    alpha = br_sin_reference(wide / (2 * n)) * 2
    # the double sum counts B_k once for every j in k..n-1
    nested = BigReal.zero(work)
    for k in range(1, n):
        nested = nested + bits[k - 1] * (n - k)
    residual = bits[n - 1] - (bits[0] * n - alpha * alpha * nested)
    return residual.rescale(s.scale)


def discrete_sine_once(s: BigReal, n: int) -> BigReal:
    """
    One refinement pass at finite n starting from B_j = js/n:
    s - (s/n)^2 * [sum of the B_j summed twice] = s - (s/n)^3 * repeated_sum(n).
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"need n >= 2 bits, got {n!r}")
    _check_angle(s, allow_zero=False)
    exact_s = s.to_fraction()
    value = exact_s - (exact_s / n) ** 3 * repeated_sum(n)
    return BigReal.from_fraction(value, s.scale)


def discrete_sine_refine(s: BigReal, n: int, iterations: int) -> BigReal:
    """
    Iterate the finite-n substitution
    B_j <- j h - h^2 * sum_{i=1}^{j-1} sum_{l=1}^{i} B_l, starting from B_j = j h.
    Returns B_n after the given number of passes.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"need n >= 2 bits, got {n!r}")
    if iterations < 0:
        raise DomainError(f"iterations must be >= 0, got {iterations}")
    _check_angle(s, allow_zero=False)
    work = s.scale + guard_digits(n * n)
    h = s.rescale(work) / n
    h2 = h * h
    bits = [h * j for j in range(1, n + 1)]
    for sweep in range(iterations):
        logger.debug("discrete sine pass %d n=%d", sweep + 1, n)
        refined = []
        prefix = BigReal.zero(work)  # B_1 + ... + B_i
        nested = BigReal.zero(work)  # sum over i < j of prefix_i
        for j in range(1, n + 1):
            refined.append(h * j - h2 * nested)
            prefix = prefix + bits[j - 1]
            nested = nested + prefix
        bits = refined
    return bits[n - 1].rescale(s.scale)


def chord_sum(x: BigReal, n: int) -> BigReal:
    """L_n = 2n sin(x/(2n)), the sum of n equal chords under an arc of length x."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"need n >= 1 chords, got {n!r}")
    _check_angle(x, allow_zero=False)
    work = x.scale + guard_digits(n)
    half_bit = x.rescale(work) / (2 * n)
    return (br_sin_reference(half_bit) * (2 * n)).rescale(x.scale)
