import random
from fractions import Fraction

import pytest

from src.core.arcbit import arc_bit_sum, grid_for
from src.core.leibniz import (
    ARCTAN_INTEGRAND,
    SECTOR_INTEGRAND,
    Integrand,
    QuadratureSpec,
    circle_y,
    parse_integrand,
    quad,
    quadrature_error_bound,
    remainder_integral,
    remainder_integral_bound,
    transmutation_arctan,
    transmutation_error_bound,
    transmutation_relations,
    transmutation_z,
)
from src.precision.bigreal import BigReal, br_sqrt_fraction
from src.precision.errors import DomainError, UnknownIntegrandError
from src.precision.reference import br_arctan_reference, pi_quarter

SCALE = 50
ULP = BigReal.ulp(SCALE)


def real(text):
    return BigReal.from_decimal_string(text, SCALE)


def unit_spec(panels, scheme="trapezoid", upper="1"):
    return QuadratureSpec(BigReal.zero(SCALE), real(upper), panels, scheme)


def test_circle_y_examples():
    assert circle_y(BigReal.zero(SCALE)).is_zero()
    assert circle_y(real("1")) == 1
    assert circle_y(real("0.5")) == br_sqrt_fraction(Fraction(3, 4), SCALE)
    with pytest.raises(DomainError):
        circle_y(real("2.5"))


def test_transmutation_z_examples():
    assert abs(transmutation_z(real("1")) - 1) <= ULP * 50
    root_third = br_sqrt_fraction(Fraction(1, 3), SCALE)
    assert abs(transmutation_z(real("0.5")) - root_third) <= ULP * 50
    assert transmutation_z(real("0.000001")) < Fraction(1, 100)


def test_transmutation_z_singular_endpoints():
    for x in ("0", "2"):
        with pytest.raises(DomainError):
            transmutation_z(real(x))


def test_transmutation_relations_random_points():
    rng = random.Random(3)
    for _ in range(20):
        x = BigReal.from_fraction(Fraction(rng.randint(50, 1950), 1000), SCALE)
        report = transmutation_relations(x)
        assert report.holds(report.intercept_residual)
        assert report.holds(report.doubled_ratio_residual)
        # the undoubled ratio misses by exactly x/2
        assert report.holds(report.square_ratio_residual - x / 2)


def test_parse_integrand():
    assert parse_integrand("1/(1+t^2)") == ARCTAN_INTEGRAND
    assert parse_integrand("t^2/(1+t^2)") == SECTOR_INTEGRAND
    assert parse_integrand("t^12 / (1 + t^2)") == Integrand("rational", 12)
    assert parse_integrand("t^2") == Integrand("monomial", 2)
    assert parse_integrand("t") == Integrand("monomial", 1)
    assert SECTOR_INTEGRAND.id == "t^2/(1+t^2)"
    for bad in ("sin(t)", "t^65", "1/(1+t^3)"):
        with pytest.raises(UnknownIntegrandError):
            parse_integrand(bad)


def test_quadrature_spec_validation():
    with pytest.raises(DomainError):
        QuadratureSpec(real("1"), BigReal.zero(SCALE), 10)
    with pytest.raises(DomainError):
        unit_spec(0)
    with pytest.raises(DomainError):
        unit_spec(10, scheme="simpson")


@pytest.mark.slow
def test_quad_arctan_integrand_million_panels():
    estimate = quad(ARCTAN_INTEGRAND, unit_spec(10**6))
    assert abs(estimate - pi_quarter(SCALE)) <= Fraction(1, 10**12)


@pytest.mark.parametrize("scheme", ["midpoint", "trapezoid"])
def test_quad_polynomial(scheme):
    spec = unit_spec(64, scheme)
    integrand = parse_integrand("t^2")
    gap = abs(quad(integrand, spec) - Fraction(1, 3))
    assert gap <= quadrature_error_bound(integrand, spec) + ULP * 10


def test_quad_sector_integrand():
    spec = unit_spec(10**4)
    estimate = quad(SECTOR_INTEGRAND, spec)
    exact = 1 - pi_quarter(SCALE)
    assert abs(estimate - exact) <= quadrature_error_bound(SECTOR_INTEGRAND, spec) + ULP * 10
    assert estimate.to_decimal_string().startswith("0.2146018")


def test_quad_empty_interval():
    spec = QuadratureSpec(real("0.5"), real("0.5"), 10)
    assert quad(ARCTAN_INTEGRAND, spec).is_zero()


def test_trapezoid_second_order():
    errors = [
        abs(quad(ARCTAN_INTEGRAND, unit_spec(panels)) - pi_quarter(SCALE)).to_fraction()
        for panels in (100, 200)
    ]
    ratio = errors[0] / errors[1]
    assert Fraction(7, 2) <= ratio <= Fraction(9, 2)


@pytest.mark.parametrize("z", ["0.25", "0.5", "1"])
@pytest.mark.parametrize("panels", [1000, 10000])
def test_transmutation_identity(z, panels):
    value = real(z)
    gap = abs(transmutation_arctan(value, panels) - br_arctan_reference(value))
    assert gap <= transmutation_error_bound(value, panels) + ULP * 10


def test_transmutation_arctan_examples():
    assert transmutation_arctan(BigReal.zero(SCALE), 10).is_zero()
    half = real("0.5")
    gap = abs(transmutation_arctan(half, 10**5) - br_arctan_reference(half))
    assert gap <= Fraction(1, 10**9)
    with pytest.raises(DomainError):
        transmutation_arctan(real("1.5"), 10)


@pytest.mark.slow
def test_leibniz_and_arc_bit_routes_agree():
    leibniz = transmutation_arctan(real("1"), 10**6)
    assert abs(leibniz - pi_quarter(SCALE)) <= Fraction(1, 10**11)
    arc_bits = arc_bit_sum(grid_for(10**4), SCALE)
    assert abs(leibniz - arc_bits) <= Fraction(1, 10**6)


def test_remainder_bound_examples():
    assert remainder_integral_bound(real("1"), 0) == BigReal.from_ratio(1, 3, SCALE)
    assert remainder_integral_bound(real("1"), 10) == BigReal.from_ratio(1, 23, SCALE)
    expected = Fraction(1, 2**11 * 11)
    assert remainder_integral_bound(real("0.5"), 4) == BigReal.from_fraction(expected, SCALE)


@pytest.mark.parametrize("x", ["0.5", "1"])
def test_remainder_integral_dominated(x):
    for n in range(0, 11):
        assert remainder_integral(real(x), n, panels=500) <= remainder_integral_bound(real(x), n)


def test_curvature_bounds():
    assert ARCTAN_INTEGRAND.curvature_bound(Fraction(0), Fraction(1)) == 2
    assert Integrand("monomial", 1).curvature_bound(Fraction(0), Fraction(5)) == 0
    assert Integrand("monomial", 3).curvature_bound(Fraction(0), Fraction(2)) == 12
    with pytest.raises(DomainError):
        Integrand("rational", 4).curvature_bound(Fraction(0), Fraction(2))
