from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.precision.bigreal import (
    BigReal,
    br_from_ratio,
    br_sqrt,
    current_scale,
    guard_digits,
    localscale,
)
from src.precision.errors import DomainError
from src.precision.rational import exact_sum, rational_str
from src.precision.reference import (
    br_arctan_reference,
    br_cos_reference,
    br_sin_reference,
    pi_quarter,
)

SCALE = 50
ULP = BigReal.ulp(SCALE)

mantissas = st.integers(min_value=-(10**60), max_value=10**60)
rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**6)


def test_from_ratio_examples():
    assert br_from_ratio(1, 3, 10).to_decimal_string() == "0.3333333333"
    assert br_from_ratio(0, 7, 50).is_zero()
    assert br_from_ratio(355, 113, 20).to_decimal_string() == "3.14159292035398230088"


def test_from_ratio_truncates_toward_zero():
    assert br_from_ratio(-1, 3, 5).to_decimal_string() == "-0.33333"
    assert br_from_ratio(2, 3, 3).to_decimal_string() == "0.666"


def test_from_ratio_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        br_from_ratio(1, 0, 10)


def test_sqrt_examples():
    assert br_sqrt(BigReal.zero(SCALE)).is_zero()
    assert br_sqrt(BigReal.from_int(4, SCALE)) == 2
    assert br_sqrt(BigReal.from_int(2, SCALE)).to_decimal_string().startswith(
        "1.41421356237309504880168872420969807856967187537694"
    )


def test_sqrt_rejects_negative():
    with pytest.raises(DomainError):
        br_sqrt(BigReal.from_int(-1, SCALE))


@settings(max_examples=300)
@given(st.integers(min_value=0, max_value=10 * 10**SCALE))
def test_sqrt_bracket(mantissa):
    x = BigReal(mantissa, SCALE)
    y = br_sqrt(x)
    assert y.to_fraction() ** 2 <= x.to_fraction() < (y + ULP).to_fraction() ** 2


@given(mantissas, mantissas)
def test_fixed_point_addition_is_exact(a, b):
    x, y = BigReal(a, SCALE), BigReal(b, SCALE)
    assert (x + y) - y == x


@given(mantissas)
def test_decimal_string_round_trip(m):
    x = BigReal(m, SCALE)
    assert BigReal.from_decimal_string(x.to_decimal_string(), SCALE) == x


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


def test_mixed_comparisons_with_int_and_fraction():
    half = BigReal.from_ratio(1, 2, SCALE)
    assert half < 1
    assert half == Fraction(1, 2)
    assert 0 <= half <= 1
    assert BigReal.from_int(1, 10) == BigReal.from_int(1, 20)


def test_scale_mismatch_is_rejected():
    with pytest.raises(ValueError, match="Scale mismatch"):
        BigReal.from_int(1, 10) + BigReal.from_int(1, 20)


def test_localscale_is_scoped():
    outer = current_scale()
    with localscale(12):
        assert BigReal.from_int(1).scale == 12
        with localscale(30):
            assert current_scale() == 30
        assert current_scale() == 12
    assert current_scale() == outer


def test_localscale_is_per_thread():
    def scale_in_worker(digits):
        with localscale(digits):
            return BigReal.zero().scale

    with ThreadPoolExecutor(max_workers=4) as pool:
        assert list(pool.map(scale_in_worker, [11, 22, 33, 44])) == [11, 22, 33, 44]


def test_guard_digits_grow_with_count():
    assert guard_digits(1) == 6
    assert guard_digits(10**6) == 12


def test_exact_sum_matches_naive_sum():
    terms = [Fraction((-1) ** k, 2 * k + 1) for k in range(300)]
    assert exact_sum(terms) == sum(terms, Fraction(0))
    assert exact_sum((1, 2 ** k) for k in range(1, 30)) == 1 - Fraction(1, 2**29)
    assert exact_sum([]) == 0


def test_rational_str():
    assert rational_str(Fraction(3, 6)) == "1/2"
    assert rational_str(Fraction(4)) == "4"


def test_arctan_reference_examples(mp_pi_quarter):
    assert br_arctan_reference(BigReal.zero(SCALE)).is_zero()
    quarter = br_arctan_reference(BigReal.from_int(1, SCALE))
    assert abs(quarter - mp_pi_quarter) <= ULP
    half = br_arctan_reference(BigReal.from_ratio(1, 2, SCALE))
    assert half.to_decimal_string().startswith("0.46364760900080611621")


def test_arctan_reference_domain():
    with pytest.raises(DomainError):
        br_arctan_reference(BigReal.from_ratio(11, 10, SCALE))


@pytest.mark.parametrize("tenths", range(1, 10))
def test_arctan_complement_identity(tenths):
    x = BigReal.from_ratio(tenths, 10, SCALE)
    partner = BigReal.from_ratio(10 - tenths, 10 + tenths, SCALE)
    total = br_arctan_reference(x) + br_arctan_reference(partner)
    assert abs(total - pi_quarter(SCALE)) <= ULP * 10


def test_sin_cos_pythagoras():
    for num in (1, 5, 10, 15):
        x = BigReal.from_ratio(num, 10, SCALE)
        s, c = br_sin_reference(x), br_cos_reference(x)
        assert abs(s * s + c * c - 1) <= ULP * 10


def test_pi_quarter_uses_context_scale():
    with localscale(20):
        assert pi_quarter().to_decimal_string() == "0.78539816339744830961"
