"""
Verification suites.

Each suite runs the numerical invariants of one module at the configured
precision (at least VERIFY_MIN_DIGITS) and reports PASS/FAIL per check with
the measured value. Random sampling draws from random.Random(seed) so a run
is reproducible.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Tuple

from src.core.arcbit import (
    arc_bit_sum,
    bit_angle,
    bit_angle_by_difference,
    gap_bound,
    grid_for,
    measure_gap,
    sandwich_bounds,
)
from src.core.correction import (
    RULES,
    convention_check,
    corrected_pi,
    corrected_pi_exact,
    empirical_order,
    invariance_residual,
    transformed_bound,
    transformed_pi,
    transformed_pi_exact,
)
from src.core.leibniz import (
    ARCTAN_INTEGRAND,
    Integrand,
    QuadratureSpec,
    quad,
    remainder_integral,
    remainder_integral_bound,
    transmutation_arctan,
    transmutation_error_bound,
    transmutation_relations,
)
from src.core.powersum import (
    T_limit,
    induction_residual,
    power_sum_approx,
    power_sum_exact,
    repeated_sum,
    t_of,
)
from src.core.series import (
    arctan_partial,
    decomposed_arc_sum,
    direct_arc_sum,
    pi_series_partial,
    r_of,
)
from src.core.trig import (
    chord_sum,
    discrete_sine_once,
    global_recursion_residual,
    initial_sine_state,
    initial_versine_state,
    refine_polynomial,
    refine_versine_polynomial,
    second_difference_residual,
    sine_estimate,
    taylor_remainder,
    versine_estimate,
)
from src.precision.bigreal import BigReal, br_sqrt, current_scale, localscale
from src.precision.reference import (
    br_arctan_reference,
    br_cos_reference,
    br_sin_reference,
    br_tan_reference,
    half_pi,
    pi_quarter,
)
from src.utils.config import RunConfig

logger = logging.getLogger(__name__)

VERIFY_MIN_DIGITS = 40

SUITE_NAMES = (
    "precision",
    "arcbit",
    "powersum",
    "series",
    "correction",
    "trig",
    "leibniz",
)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f": {self.detail}" if self.detail else ""
        return f"{status} [{self.suite}] {self.name}{suffix}"


def _ulps(count: int) -> BigReal:
    return BigReal.ulp() * count


def _sci(value) -> str:
    """Short scientific rendering of a measured value for report lines."""
    return f"{float(value):.3e}"


class SuiteValidator:
    """
    Runs the verification suites.
    A check that raises is recorded as FAIL with the error text, so one
    broken invariant never hides the rest of the report.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.results: List[CheckResult] = []
        self._suite = ""
        self._suites: Dict[str, Callable[[random.Random], None]] = {
            "precision": self._precision_suite,
            "arcbit": self._arcbit_suite,
            "powersum": self._powersum_suite,
            "series": self._series_suite,
            "correction": self._correction_suite,
            "trig": self._trig_suite,
            "leibniz": self._leibniz_suite,
        }

    def run(self, suite: str) -> List[CheckResult]:
        names = list(SUITE_NAMES) if suite == "all" else [suite]
        for name in names:
            if name not in self._suites:
                raise ValueError(
                    f"Unknown suite '{name}'. Choose from: all, {', '.join(SUITE_NAMES)}"
                )
        self.results = []
        work = max(self.config.digits, VERIFY_MIN_DIGITS)
        logger.info("Verification at %d digits", work)
        with localscale(work):
            for name in names:
                self._suite = name
                logger.info("Running suite %s", name)
                self._suites[name](random.Random(self.config.seed))
        failed = sum(1 for r in self.results if not r.passed)
        logger.info("Verification: %d checks, %d failed", len(self.results), failed)
        return self.results

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def report(self) -> str:
        lines = [r.line() for r in self.results]
        passed = sum(1 for r in self.results if r.passed)
        failed = len(self.results) - passed
        lines.append(f"{passed} passed, {failed} failed")
        return "\n".join(lines) + "\n"

    def _check(self, name: str, fn: Callable[[], Tuple[bool, str]]) -> None:
        try:
            passed, detail = fn()
        except Exception as e:  # noqa: BLE001
            passed, detail = False, f"error: {e}"
        self.results.append(CheckResult(self._suite, name, bool(passed), detail))

    # ---- precision ----------------------------------------------------

    def _precision_suite(self, rng: random.Random) -> None:
        def sqrt_bracket():
            for _ in range(50):
                x = BigReal(rng.randint(0, 10 ** (current_scale() + 3)), current_scale())
                y = br_sqrt(x)
                upper = y + BigReal.ulp(y.scale)
                if not (y.to_fraction() ** 2 <= x.to_fraction() < upper.to_fraction() ** 2):
                    return False, f"bracket broken at {x}"
            return True, "50 samples"

        def exact_add_sub():
            for _ in range(50):
                a = BigReal(rng.randint(-(10**60), 10**60), current_scale())
                b = BigReal(rng.randint(-(10**60), 10**60), current_scale())
                if (a + b) - b != a or a * 1 != a:
                    return False, f"identity broken at a={a} b={b}"
            return True, "50 samples"

        def decimal_round_trip():
            for _ in range(50):
                a = BigReal(rng.randint(-(10**70), 10**70), current_scale())
                if BigReal.from_decimal_string(a.to_decimal_string()) != a:
                    return False, f"round trip broken at {a}"
            return True, "50 samples"

        def field_axioms():
            def draw() -> Fraction:
                return Fraction(rng.randint(-(10**12), 10**12), rng.randint(1, 10**9))

            for _ in range(100):
                a, b, c = draw(), draw(), draw()
                if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                    return False, f"associativity broken at {a}, {b}, {c}"
                if a * (b + c) != a * b + a * c:
                    return False, f"distributivity broken at {a}, {b}, {c}"
            return True, "100 random triples"

        def complement_identity():
            quarter = pi_quarter()
            worst = BigReal.zero()
            for tenths in range(1, 10):
                x = BigReal.from_ratio(tenths, 10)
                partner = BigReal.from_ratio(10 - tenths, 10 + tenths)
                diff = abs(br_arctan_reference(x) + br_arctan_reference(partner) - quarter)
                worst = max(worst, diff)
            return worst <= _ulps(10), f"max |atan x + atan((1-x)/(1+x)) - pi/4| = {_sci(worst)}"

        def machin():
            s = current_scale()
            fifth = br_arctan_reference(BigReal.from_ratio(1, 5, s))
            tiny = br_arctan_reference(BigReal.from_ratio(1, 239, s))
            diff = abs(fifth * 4 - tiny - pi_quarter(s))
            return diff <= _ulps(10), f"|4atan(1/5) - atan(1/239) - pi/4| = {_sci(diff)}"

        self._check("sqrt truncation bracket y^2 <= x < (y+ulp)^2", sqrt_bracket)
        self._check("(a+b)-b == a and a*1 == a exactly", exact_add_sub)
        self._check("decimal string round trip", decimal_round_trip)
        self._check("exact rational associativity and distributivity", field_axioms)
        self._check("atan(x) + atan((1-x)/(1+x)) == pi/4 for x = 0.1..0.9", complement_identity)
        self._check("reference pi/4 agrees with Machin's formula", machin)

    # ---- arcbit -------------------------------------------------------

    def _arcbit_suite(self, rng: random.Random) -> None:
        def sandwich_width():
            for n in (1, 10, 100, 1000, 2000):
                if sandwich_bounds(grid_for(n)).width != Fraction(1, 2 * n):
                    return False, f"width wrong at n={n}"
            return True, "n in {1, 10, 100, 1000, 2000}"

        def sandwich_brackets():
            slack = _ulps(10).to_fraction()
            for n in (1, 10, 100, 1000):
                b = sandwich_bounds(grid_for(n))
                total = arc_bit_sum(grid_for(n)).to_fraction()
                if not b.lower - slack <= total <= b.upper + slack:
                    return False, f"arc_bit_sum outside bounds at n={n}"
            return True, "n in {1, 10, 100, 1000}"

        def partition():
            quarter = pi_quarter()
            worst = BigReal.zero()
            for n in (2, 10, 100):
                worst = max(worst, abs(measure_gap(grid_for(n)).angle_sum - quarter))
            return worst <= _ulps(100), f"max |sum c_i - pi/4| = {_sci(worst)}"

        def doubling():
            quarter = pi_quarter()
            for n in (10, 100, 1000):
                coarse = abs(arc_bit_sum(grid_for(n)) - quarter)
                fine = abs(arc_bit_sum(grid_for(2 * n)) - quarter)
                if not fine < coarse:
                    return False, f"no improvement from n={n} to {2 * n}"
            return True, "n in {10, 100, 1000}"

        def general_tangent():
            half = BigReal.from_ratio(1, 2)
            diff = abs(arc_bit_sum(grid_for(1000, Fraction(1, 2))) - br_arctan_reference(half))
            return diff <= BigReal.from_ratio(1, 10**6), f"|sum(n=1000, x=0.5) - atan 0.5| = {_sci(diff)}"

        gaps = {}

        def gap_within_bound():
            for n in (2, 10, 100, 1000):
                gaps[n] = measure_gap(grid_for(n))
                if not gaps[n].d_n >= 0 or gaps[n].d_n > gaps[n].bound + _ulps(10):
                    return False, f"d({n}) = {_sci(gaps[n].d_n)} vs bound {_sci(gaps[n].bound)}"
            return True, f"d(1000) = {_sci(gaps[1000].d_n)}"

        def gap_at_1000():
            d = gaps[1000].d_n if 1000 in gaps else measure_gap(grid_for(1000)).d_n
            limit = BigReal.from_fraction(Fraction(5001, 10**10))
            return d <= limit, f"d(1000) = {_sci(d)} <= 5.001e-7"

        def sum_certificate():
            n = 1000
            diff = abs(arc_bit_sum(grid_for(n)) - pi_quarter())
            return diff <= gap_bound(n) + _ulps(10), f"|sum - pi/4| = {_sci(diff)}"

        def angle_agreement():
            grid = grid_for(10)
            worst = max(
                abs(bit_angle(i, grid) - bit_angle_by_difference(i, grid))
                for i in range(10)
            )
            return worst <= _ulps(50), f"max diff {_sci(worst)}"

        self._check("sandwich width == 1/(2n) exactly", sandwich_width)
        self._check("lower <= arc_bit_sum(n) <= upper", sandwich_brackets)
        self._check("bit angles partition the octant", partition)
        self._check("doubling n shrinks |arc_bit_sum - pi/4|", doubling)
        self._check("arc bits on a tangent of length 0.5 approach atan 0.5", general_tangent)
        self._check("0 <= d(n) <= gap bound", gap_within_bound)
        self._check("measured gap at n=1000", gap_at_1000)
        self._check("|arc_bit_sum(1000) - pi/4| within gap bound", sum_certificate)
        self._check("bit angle by arctan ratio matches difference form", angle_agreement)

    # ---- powersum -----------------------------------------------------

    def _powersum_suite(self, rng: random.Random) -> None:
        def induction():
            for p in range(1, 7):
                for n in range(1, 201):
                    if induction_residual(n, p) != 0:
                        return False, f"residual at n={n} p={p}"
            return True, "p <= 6, n <= 200"

        def leading_term():
            for p in range(0, 7):
                for n in (1, 2, 5, 10, 100, 1000):
                    if abs(power_sum_exact(n, p) - power_sum_approx(n, p)) > n**p:
                        return False, f"|S - n^(p+1)/(p+1)| > n^p at n={n} p={p}"
            return True, "p <= 6"

        def limit_rate():
            worst = Fraction(0)
            for p in range(1, 7):
                for n in (100, 1000):
                    gap = abs(t_of(p, n) - T_limit(p))
                    if gap > Fraction(2 * p, n):
                        return False, f"|t - 1/(2p+1)| > 2p/n at n={n} p={p}"
                    worst = max(worst, gap)
            return True, f"max gap {_sci(worst)}"

        def repeated_closed_form():
            for n in [2, 3, 10, 1000] + [rng.randint(2, 5000) for _ in range(10)]:
                if repeated_sum(n) != Fraction((n - 1) * n * (n + 1), 6):
                    return False, f"closed form broken at n={n}"
            return True, "(n-1)n(n+1)/6"

        self._check("induction identity n S^(p-1) - S^p == sum S^(p-1)_k", induction)
        self._check("|S^p_n - n^(p+1)/(p+1)| <= n^p", leading_term)
        self._check("|t(p,n) - 1/(2p+1)| <= 2p/n", limit_rate)
        self._check("repeated sum closed form", repeated_closed_form)

    # ---- series -------------------------------------------------------

    def _series_suite(self, rng: random.Random) -> None:
        quarter = pi_quarter()

        def remainder_bound():
            prev = None
            for m in range(0, 201):
                state = pi_series_partial(m + 1)
                if abs(state.partial_sum - quarter) > state.remainder_bound + _ulps(m + 2):
                    return False, f"bound broken at m={m}"
                if prev is not None:
                    lo, hi = sorted((prev, state.partial_sum))
                    if not lo <= quarter <= hi:
                        return False, f"partials {m - 1}, {m} do not bracket pi/4"
                prev = state.partial_sum
            return True, "m = 0..200"

        def decomposition():
            for _ in range(20):
                n, M = rng.randint(1, 200), rng.randint(1, 8)
                if decomposed_arc_sum(n, M).total != direct_arc_sum(n):
                    return False, f"identity broken at n={n} M={M}"
            return True, "20 random (n, M)"

        def tail_below_head():
            for p in range(0, 7):
                for n in list(range(1, 201, 13)) + [200]:
                    if r_of(p, n) > t_of(p, n):
                        return False, f"r > t at p={p} n={n}"
            return True, "p <= 6, n <= 200"

        def general_x():
            for tenths in (1, 5, 9):
                x = BigReal.from_ratio(tenths, 10)
                target = br_arctan_reference(x)
                for m in (5, 20):
                    state = arctan_partial(x, m)
                    diff = abs(state.partial_sum - target)
                    if diff > state.remainder_bound:
                        return False, f"|partial - arctan({x})| = {_sci(diff)} at m={m}"
            return True, "x in {0.1, 0.5, 0.9}, m in {5, 20}"

        self._check("|partial(m) - pi/4| <= 1/(2m+3), consecutive partials bracket", remainder_bound)
        self._check("head + (-1)^M tail == direct sum", decomposition)
        self._check("r(p,n) <= t(p,n)", tail_below_head)
        self._check("arctan(x) within first omitted term", general_x)

    # ---- correction ---------------------------------------------------

    def _correction_suite(self, rng: random.Random) -> None:
        quarter = pi_quarter()

        def invariance_a2p():
            for p in range(3, 202, 2):
                if invariance_residual(p, RULES["a2p"]) != Fraction(1, (p - 1) ** 2 - 1):
                    return False, f"residual wrong at p={p}"
            return True, "odd p in [3, 201]"

        def invariance_a2p_plus_2():
            for p in range(3, 202, 2):
                if invariance_residual(p, RULES["a2p_plus_2"]) != Fraction(1, p * (p * p - 1)):
                    return False, f"residual wrong at p={p}"
            return True, "odd p in [3, 201]"

        def error_ordering():
            order = ("none", "cf1", "cf2", "cf3")
            for m in (10, 50, 200):
                errs = [abs(corrected_pi(m, RULES[r]) - quarter) for r in order]
                if not all(a > b for a, b in zip(errs, errs[1:])):
                    return False, f"ordering broken at m={m}"
            return True, "m in {10, 50, 200}"

        def slopes():
            m_values = (10, 100, 1000)
            plain = empirical_order(RULES["none"], m_values)
            first = empirical_order(RULES["cf1"], m_values)
            second = empirical_order(RULES["cf2"], m_values)
            third = empirical_order(RULES["cf3"], m_values)
            passed = (
                -1.1 <= float(plain) <= -0.9
                and float(first) <= -2.5
                and third <= second <= first
            )
            return passed, (
                f"slope(none) = {float(plain):.3f}, slope(cf1) = {float(first):.3f}, "
                f"slope(cf2) = {float(second):.3f}, slope(cf3) = {float(third):.3f}"
            )

        def plain_matches_series():
            for m in (1, 2, 10, 50, 200):
                series = arctan_partial(BigReal.from_int(1), m - 1).partial_sum
                diff = abs(corrected_pi(m, RULES["none"]) - series)
                if diff > _ulps(10):
                    return False, f"differs by {_sci(diff)} at m={m}"
            return True, "m in {1, 2, 10, 50, 200}"

        def convention():
            check = convention_check(RULES["cf1"], (10, 100, 1000))
            passed = float(check.slope) <= -2.5 < float(check.offset_slope)
            return passed, (
                f"f(m) slope {float(check.slope):.3f}, f(m+1) slope {float(check.offset_slope):.3f}"
            )

        def transformed():
            for m in range(1, 101):
                diff = abs(transformed_pi(m) - quarter)
                if diff > BigReal.from_fraction(transformed_bound(m)) + _ulps(2):
                    return False, f"bound broken at m={m}"
                if transformed_pi_exact(m) != corrected_pi_exact(m + 1, RULES["a2p"]):
                    return False, f"differs from corrected a2p at m={m}"
            exact = transformed_pi_exact(2) == Fraction(1, 2) + Fraction(1, 3) - Fraction(1, 15)
            return exact, "m = 1..100"

        self._check("a2p invariance residual == 1/((p-1)^2-1)", invariance_a2p)
        self._check("a2p_plus_2 invariance residual == 1/(p(p^2-1))", invariance_a2p_plus_2)
        self._check("err(none) > err(cf1) > err(cf2) > err(cf3)", error_ordering)
        self._check("empirical orders, slope(cf3) <= slope(cf2) <= slope(cf1)", slopes)
        self._check("corrected(m, none) == m-term series partial sum", plain_matches_series)
        self._check("correction index convention", convention)
        self._check("transformed series bound and exact value", transformed)

    # ---- trig ---------------------------------------------------------

    def _trig_suite(self, rng: random.Random) -> None:
        top = half_pi()

        def second_difference():
            worst = BigReal.zero()
            for _ in range(50):
                s = min(BigReal.from_fraction(Fraction(rng.randint(1, 1570), 1000)), top)
                n = rng.randint(2, 200)
                j = rng.randint(1, n - 1)
                worst = max(worst, abs(second_difference_residual(s, n, j)))
            return worst <= _ulps(100), f"max residual {_sci(worst)}"

        def sine_coefficients():
            state = initial_sine_state()
            for k in range(1, 9):
                state = refine_polynomial(state)
                expected = [Fraction((-1) ** j, factorial(2 * j + 1)) for j in range(k + 1)]
                if list(state.coefficients) != expected:
                    return False, f"coefficients wrong at k={k}"
            return True, "k <= 8"

        def versine_coefficients():
            state = initial_versine_state()
            for k in range(1, 9):
                state = refine_versine_polynomial(state)
                expected = [Fraction((-1) ** j, factorial(2 * j + 2)) for j in range(k)]
                if list(state.coefficients) != expected:
                    return False, f"coefficients wrong at k={k}"
            return True, "k <= 8"

        def sine_value():
            one = BigReal.from_int(1)
            diff = abs(sine_estimate(one, 5) - br_sin_reference(one))
            limit = BigReal.from_fraction(Fraction(1, factorial(13)))
            return diff <= limit, f"|P_5(1) - sin 1| = {_sci(diff)}"

        def discrete_once():
            for s_text, n in (("1", 1000), ("0.5", 10), ("1.5", 100)):
                s = BigReal.from_decimal_string(s_text)
                sf = s.to_fraction()
                gap = abs(discrete_sine_once(s, n).to_fraction() - (sf - sf**3 / 6))
                if gap > sf**3 / n:
                    return False, f"gap {_sci(gap)} at s={s_text} n={n}"
            return True, "s - s^3/6 within s^3/n"

        def taylor_grid():
            for s_text in ("0.25", "0.5", "1", "1.5"):
                s = BigReal.from_decimal_string(s_text)
                sine, versine = br_sin_reference(s), 1 - br_cos_reference(s)
                for k in range(1, 7):
                    if abs(sine_estimate(s, k) - sine) > taylor_remainder(s, 2 * k + 3) + _ulps(10):
                        return False, f"sine bound broken at s={s_text} k={k}"
                    if abs(versine_estimate(s, k) - versine) > taylor_remainder(s, 2 * k + 2) + _ulps(10):
                        return False, f"versine bound broken at s={s_text} k={k}"
            return True, "s in {0.25, 0.5, 1, 1.5}, k = 1..6"

        def global_recursion():
            worst = BigReal.zero()
            for s_text, n in (("1", 50), ("0.7", 20), ("1.5", 100)):
                residual = abs(global_recursion_residual(BigReal.from_decimal_string(s_text), n))
                if residual > _ulps(1000):
                    return False, f"residual {_sci(residual)} at s={s_text} n={n}"
                worst = max(worst, residual)
            return True, f"max residual {_sci(worst)}"

        def chord_gap():
            for x_text in ("0.5", "1", "1.5"):
                x = BigReal.from_decimal_string(x_text)
                for n in (10, 100, 1000):
                    gap = abs(chord_sum(x, n) - x).to_fraction()
                    if gap > Fraction(11, 10) * x.to_fraction() ** 3 / (24 * n * n):
                        return False, f"gap {_sci(gap)} at x={x_text} n={n}"
            return True, "x in {0.5, 1, 1.5}, n in {10, 100, 1000}"

        def tan_x_sin():
            for _ in range(20):
                x = BigReal.from_fraction(Fraction(rng.randint(1, 1549), 1000))
                if not br_tan_reference(x) >= x >= br_sin_reference(x):
                    return False, f"ordering broken at x={x}"
            return True, "20 points in (0, 1.55)"

        self._check("second-difference identity within 100 ulp", second_difference)
        self._check("sine polynomial coefficients (-1)^j/(2j+1)!", sine_coefficients)
        self._check("versine polynomial coefficients (-1)^j/(2j+2)!", versine_coefficients)
        self._check("|sine_estimate(1, 5) - sin 1| <= 1/13!", sine_value)
        self._check("one finite-n pass tends to s - s^3/6", discrete_once)
        self._check("Taylor remainder bounds sine and versine", taylor_grid)
        self._check("global recursion residual within 1000 ulp", global_recursion)
        self._check("|2n sin(x/2n) - x| <= 1.1 x^3/(24 n^2)", chord_gap)
        self._check("tan x >= x >= sin x", tan_x_sin)

    # ---- leibniz ------------------------------------------------------

    def _leibniz_suite(self, rng: random.Random) -> None:
        def relations():
            notes = []
            for _ in range(20):
                x = BigReal.from_fraction(Fraction(rng.randint(50, 1950), 1000))
                report = transmutation_relations(x)
                if not report.holds(report.intercept_residual):
                    return False, f"y != z(2-x) at x={x}"
                if not report.holds(report.doubled_ratio_residual):
                    return False, f"x != 2z^2/(1+z^2) at x={x}"
                if not report.holds(report.square_ratio_residual - x / 2):
                    notes.append(str(x))
            if notes:
                return False, f"x - z^2/(1+z^2) != x/2 at {', '.join(notes)}"
            return True, "y = z(2-x) and x = 2z^2/(1+z^2); x - z^2/(1+z^2) = x/2"

        def identity():
            for z_text in ("0.25", "0.5", "1"):
                z = BigReal.from_decimal_string(z_text)
                for panels in (1000, 10000):
                    diff = abs(transmutation_arctan(z, panels) - br_arctan_reference(z))
                    if diff > transmutation_error_bound(z, panels) + _ulps(10):
                        return False, f"z={z_text} P={panels}: {_sci(diff)}"
            return True, "z in {0.25, 0.5, 1}, P in {1e3, 1e4}"

        def dominance():
            for x_text in ("0.5", "1"):
                x = BigReal.from_decimal_string(x_text)
                for n in range(0, 11):
                    if remainder_integral(x, n) > remainder_integral_bound(x, n):
                        return False, f"integral exceeds bound at x={x_text} n={n}"
            return True, "n <= 10, x in {0.5, 1}"

        def order():
            one = BigReal.from_int(1)
            errs = []
            for panels in (100, 200):
                spec = QuadratureSpec(BigReal.zero(), one, panels, "trapezoid")
                errs.append(abs(quad(ARCTAN_INTEGRAND, spec) - pi_quarter()))
            ratio = errs[0].to_fraction() / errs[1].to_fraction()
            return Fraction(7, 2) <= ratio <= Fraction(9, 2), f"error ratio {float(ratio):.4f}"

        def polynomial():
            one = BigReal.from_int(1)
            spec = QuadratureSpec(BigReal.zero(), one, 100, "midpoint")
            integrand = Integrand("monomial", 2)
            diff = abs(quad(integrand, spec) - Fraction(1, 3))
            return diff <= _ulps(10) + Fraction(1, 12 * 100 * 100), f"|quad(t^2) - 1/3| = {_sci(diff)}"

        def cross_method():
            one = BigReal.from_int(1)
            leibniz = transmutation_arctan(one, 10**6)
            arc_bits = arc_bit_sum(grid_for(10**4))
            oracle_gap = abs(leibniz - pi_quarter())
            route_gap = abs(leibniz - arc_bits)
            passed = oracle_gap <= BigReal.from_fraction(Fraction(1, 10**11)) and (
                route_gap <= BigReal.from_fraction(Fraction(1, 10**6))
            )
            return passed, f"|L - pi/4| = {_sci(oracle_gap)}, |L - arcbit| = {_sci(route_gap)}"

        self._check("transmutation relations", relations)
        self._check("z - integral t^2/(1+t^2) == arctan z within rule error", identity)
        self._check("remainder integral <= x^(2n+3)/(2n+3)", dominance)
        self._check("trapezoid error ratio on halving the step", order)
        self._check("midpoint rule on t^2", polynomial)
        self._check("Leibniz and arc-bit routes agree", cross_method)
