"""
Exact rational helpers.

ExactRational is the standard library Fraction (always in lowest terms,
positive denominator). Long sums go through `exact_sum`, which combines
terms pairwise on raw numerator/denominator integers and reduces once at
the end; summing thousands of terms one Fraction at a time pays a gcd per
step on ever-growing denominators.
"""

from fractions import Fraction
from typing import Iterable, List, Tuple, Union

ExactRational = Fraction

Term = Union[Fraction, int, Tuple[int, int]]


def _as_pair(term: Term) -> Tuple[int, int]:
    if isinstance(term, tuple):
        num, den = term
        if den == 0:
            raise ZeroDivisionError("zero denominator in exact sum")
        return (num, den) if den > 0 else (-num, -den)
    value = Fraction(term)
    return value.numerator, value.denominator


def _split_sum(pairs: List[Tuple[int, int]], lo: int, hi: int) -> Tuple[int, int]:
    # Binary splitting: [lo, hi) -> (numerator, denominator), unreduced.
    if hi - lo == 1:
        return pairs[lo]
    mid = (lo + hi) // 2
    p1, q1 = _split_sum(pairs, lo, mid)
    p2, q2 = _split_sum(pairs, mid, hi)
    if q1 == q2:
        return p1 + p2, q1
    return p1 * q2 + p2 * q1, q1 * q2


def exact_sum(terms: Iterable[Term]) -> Fraction:
    """Exact sum of rationals given as Fractions, ints or (num, den) pairs."""
    pairs = [_as_pair(t) for t in terms]
    if not pairs:
        return Fraction(0)
    num, den = _split_sum(pairs, 0, len(pairs))
    return Fraction(num, den)


def rational_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
