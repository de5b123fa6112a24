from fractions import Fraction

import pytest

from src.core.arcbit import (
    ArcBitGrid,
    arc_bit,
    arc_bit_sum,
    bit_angle,
    bit_angle_by_difference,
    gap_bound,
    grid_for,
    karna_sq,
    measure_gap,
    sandwich_bounds,
)
from src.precision.bigreal import BigReal
from src.precision.errors import DomainError
from src.precision.reference import br_arctan_reference, pi_quarter

SCALE = 50
ULP = BigReal.ulp(SCALE)


def test_grid_validation():
    with pytest.raises(DomainError):
        ArcBitGrid(n=0)
    with pytest.raises(DomainError):
        grid_for(10, "3/2")
    assert grid_for(4, "1/2").step == Fraction(1, 8)


def test_karna_sq_examples():
    assert karna_sq(0, grid_for(7)) == 1
    assert karna_sq(7, grid_for(7)) == 2
    assert karna_sq(1, grid_for(2)) == Fraction(5, 4)
    with pytest.raises(IndexError):
        karna_sq(8, grid_for(7))


def test_arc_bit_examples():
    assert arc_bit(0, grid_for(1), SCALE).to_decimal_string().startswith("0.70710678")
    assert arc_bit(0, grid_for(2), SCALE).to_decimal_string().startswith("0.44721359")
    assert arc_bit(1, grid_for(2), SCALE).to_decimal_string().startswith("0.31622776")
    with pytest.raises(IndexError):
        arc_bit(2, grid_for(2), SCALE)


def test_arc_bits_decrease():
    grid = grid_for(50)
    bits = [arc_bit(i, grid, SCALE) for i in range(50)]
    assert all(b > 0 for b in bits)
    assert all(a > b for a, b in zip(bits, bits[1:]))


def test_arc_bit_sum_examples(mp_pi_quarter):
    assert arc_bit_sum(grid_for(1), SCALE).to_decimal_string().startswith("0.70710678")
    estimate = arc_bit_sum(grid_for(1000), SCALE)
    assert estimate.to_decimal_string().startswith("0.7853980")
    assert abs(estimate - mp_pi_quarter) <= gap_bound(1000, SCALE)
    assert arc_bit_sum(grid_for(100, 0), SCALE).is_zero()


def test_sandwich_examples():
    one = sandwich_bounds(grid_for(1))
    assert (one.lower, one.upper, one.width) == (Fraction(1, 2), 1, Fraction(1, 2))
    two = sandwich_bounds(grid_for(2))
    assert (two.lower, two.upper) == (Fraction(13, 20), Fraction(9, 10))
    assert two.width == Fraction(1, 4)


@pytest.mark.parametrize("n", [1, 2, 3, 17, 100, 999, 1000, 2000])
def test_sandwich_width_is_exact(n):
    assert sandwich_bounds(grid_for(n)).width == Fraction(1, 2 * n)


@pytest.mark.parametrize("n", [1, 10, 100])
def test_sandwich_contains_arc_bit_sum(n):
    bounds = sandwich_bounds(grid_for(n))
    estimate = arc_bit_sum(grid_for(n), SCALE).to_fraction()
    slack = Fraction(10, 10**SCALE)
    assert bounds.lower - slack <= estimate <= bounds.upper + slack


def test_sandwich_needs_unit_tangent():
    with pytest.raises(DomainError):
        sandwich_bounds(grid_for(10, "1/2"))


def test_gap_bound_examples():
    assert gap_bound(2, SCALE).to_decimal_string().startswith("0.15470053")
    assert gap_bound(1000, SCALE).to_decimal_string().startswith("0.000000500000375")
    with pytest.raises(DomainError):
        gap_bound(1, SCALE)


def test_gap_bound_asymptotics():
    for n in (10**4, 10**5):
        scaled = gap_bound(n, SCALE).to_fraction() * n * n
        assert abs(scaled - Fraction(1, 2)) < Fraction(1, n)


@pytest.mark.parametrize("n", [2, 10, 100, 1000])
def test_measured_gap_within_bound(n):
    report = measure_gap(grid_for(n), SCALE)
    assert report.within_bound
    assert report.d_n > 0
    assert abs(report.angle_sum - pi_quarter(SCALE)) <= ULP * 100


def test_measured_gap_at_1000():
    report = measure_gap(grid_for(1000), SCALE)
    assert report.d_n <= Fraction(5001, 10**10)
    assert Fraction(90, 10**9) < report.d_n.to_fraction() < Fraction(92, 10**9)


def test_bit_angle_forms_agree():
    grid = grid_for(10)
    for i in range(10):
        assert abs(bit_angle(i, grid, SCALE) - bit_angle_by_difference(i, grid, SCALE)) <= ULP * 50


@pytest.mark.parametrize("n", [10, 100, 1000])
def test_doubling_the_grid_improves_the_estimate(n):
    quarter = pi_quarter(SCALE)
    coarse = abs(arc_bit_sum(grid_for(n), SCALE) - quarter)
    fine = abs(arc_bit_sum(grid_for(2 * n), SCALE) - quarter)
    assert fine < coarse


def test_arctan_generalisation():
    half = BigReal.from_ratio(1, 2, SCALE)
    estimate = arc_bit_sum(grid_for(1000, "1/2"), SCALE)
    assert abs(estimate - br_arctan_reference(half)) <= Fraction(1, 10**6)
