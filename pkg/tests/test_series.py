import random
from fractions import Fraction

import pytest

from src.core.powersum import t_of
from src.core.series import (
    arctan_partial,
    arctan_partial_exact,
    decomposed_arc_sum,
    direct_arc_sum,
    geometric_truncation,
    lemma2_epsilon_to_M,
    pi_series_partial,
    r_of,
    tail_terms_for_epsilon,
    terms_for_tolerance,
)
from src.precision.bigreal import BigReal
from src.precision.errors import DomainError
from src.precision.reference import br_arctan_reference, pi_quarter

SCALE = 50
ULP = BigReal.ulp(SCALE)


def one():
    return BigReal.from_int(1, SCALE)


def test_arctan_partial_examples():
    first = arctan_partial(one(), 0)
    assert first.partial_sum == 1
    assert first.remainder_bound == BigReal.from_ratio(1, 3, SCALE)

    fifth = arctan_partial(one(), 4)
    assert fifth.partial_sum.to_decimal_string().startswith("0.83492063492")
    assert fifth.remainder_bound == BigReal.from_ratio(1, 11, SCALE)
    assert fifth.last_term == BigReal.from_ratio(1, 9, SCALE)
    assert fifth.terms_used == 4

    assert arctan_partial(BigReal.zero(SCALE), 10).partial_sum.is_zero()


def test_exact_partial_sum():
    assert arctan_partial_exact(Fraction(1), 4) == Fraction(1052, 1260)
    state = arctan_partial(one(), 4)
    assert abs(state.partial_sum.to_fraction() - Fraction(1052, 1260)) <= Fraction(5, 10**SCALE)


def test_arctan_partial_domain():
    with pytest.raises(DomainError):
        arctan_partial(BigReal.from_ratio(3, 2, SCALE), 3)
    with pytest.raises(DomainError):
        arctan_partial(one(), -1)


def test_alternating_remainder_and_bracketing():
    quarter = pi_quarter(SCALE)
    previous = None
    for m in range(0, 201):
        state = arctan_partial(one(), m)
        assert abs(state.partial_sum - quarter) <= Fraction(1, 2 * m + 3)
        if previous is not None:
            low, high = sorted((previous, state.partial_sum))
            assert low < quarter < high
        previous = state.partial_sum


@pytest.mark.parametrize("x", ["0.1", "0.5", "0.9"])
@pytest.mark.parametrize("m", [5, 20])
def test_sign_convention_against_oracle(x, m):
    value = BigReal.from_decimal_string(x, SCALE)
    state = arctan_partial(value, m)
    assert abs(state.partial_sum - br_arctan_reference(value)) <= state.remainder_bound


def test_pi_series_partial_counts_terms():
    assert pi_series_partial(5, SCALE).partial_sum == arctan_partial(one(), 4).partial_sum
    with pytest.raises(DomainError):
        pi_series_partial(0, SCALE)


def test_geometric_truncation_examples():
    assert geometric_truncation(Fraction(0), 3) == (1, 0)
    assert geometric_truncation(Fraction(1), 1) == (1, Fraction(1, 2))
    head, tail = geometric_truncation(Fraction(1, 2), 2)
    assert (head, tail) == (Fraction(3, 4), Fraction(1, 20))
    assert head + tail == Fraction(4, 5)


@pytest.mark.parametrize("q", [Fraction(0), Fraction(1, 3), Fraction(7, 9), Fraction(1)])
@pytest.mark.parametrize("M", [1, 2, 5, 8])
def test_geometric_truncation_identity(q, M):
    head, tail = geometric_truncation(q, M)
    assert head + (-1) ** M * tail == 1 / (1 + q * q)


def test_r_of_examples():
    assert r_of(0, 1) == 1
    assert r_of(1, 2) == Fraction(1, 10)
    assert r_of(3, 100) <= t_of(3, 100)


def test_r_never_exceeds_t():
    for p in range(0, 7):
        for n in (1, 2, 3, 10, 57, 128, 200):
            assert r_of(p, n) <= t_of(p, n)


def test_epsilon_to_depth_examples():
    assert tail_terms_for_epsilon(1) == 1
    assert tail_terms_for_epsilon(Fraction(1, 10)) == 10
    assert tail_terms_for_epsilon(Fraction(1, 100)) == 100
    assert tail_terms_for_epsilon(BigReal.from_ratio(1, 10, SCALE)) == 10
    with pytest.raises(DomainError):
        tail_terms_for_epsilon(0)
    assert lemma2_epsilon_to_M is tail_terms_for_epsilon
    assert lemma2_epsilon_to_M(Fraction(1, 1000)) == 1000


def test_decomposition_examples():
    small = decomposed_arc_sum(1, 1)
    assert (small.head_sum, small.tail_sum, small.total) == (1, 0, 1)
    assert decomposed_arc_sum(2, 2).total == direct_arc_sum(2)
    assert decomposed_arc_sum(100, 5).total == direct_arc_sum(100)


def test_decomposition_identity_random_pairs():
    rng = random.Random(0)
    for _ in range(20):
        n, M = rng.randint(1, 200), rng.randint(1, 8)
        assert decomposed_arc_sum(n, M).total == direct_arc_sum(n)


def test_terms_for_tolerance():
    m = terms_for_tolerance(Fraction(1), Fraction(1, 100))
    assert Fraction(1, 2 * m + 3) < Fraction(1, 100) <= Fraction(1, 2 * m + 1)
    assert terms_for_tolerance(Fraction(1, 2), Fraction(1, 10**6)) < 10
