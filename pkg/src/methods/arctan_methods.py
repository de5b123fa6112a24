"""Estimators for pi/4 and arctan built on the arc-bit and series routes."""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional

from src.core.arcbit import arc_bit_sum, gap_bound, grid_for
from src.core.correction import (
    corrected_pi,
    get_rule,
    transformed_bound,
    transformed_pi,
)
from src.core.series import arctan_partial
from src.methods.base_method import Method
from src.precision.bigreal import BigReal
from src.precision.reference import br_arctan_reference, pi_quarter

logger = logging.getLogger(__name__)


def option_real(options: Dict[str, Any], key: str, default: str) -> BigReal:
    """Decimal-string option as a BigReal at the active scale."""
    return BigReal.from_decimal_string(str(options.get(key) or default))


class ArcBitMethod(Method):
    name = "arcbit"
    param_flag = "--n"

    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        x = option_real(options, "x", "1")
        grid = grid_for(param, x.to_fraction())
        logger.debug("arcbit n=%d x=%s", param, x)
        return arc_bit_sum(grid, x.scale)

    def reference(self, options: Dict[str, Any]) -> BigReal:
        return br_arctan_reference(option_real(options, "x", "1"))

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        x = option_real(options, "x", "1")
        if x == 1 and param >= 2:
            return gap_bound(param, x.scale)
        return None


class SeriesMethod(Method):
    """`param` counts terms: T terms is the partial sum up to index T-1."""

    name = "series"
    param_flag = "--terms"

    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        return arctan_partial(option_real(options, "x", "1"), param - 1).partial_sum

    def reference(self, options: Dict[str, Any]) -> BigReal:
        return br_arctan_reference(option_real(options, "x", "1"))

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        return arctan_partial(option_real(options, "x", "1"), param - 1).remainder_bound


class CorrectedMethod(Method):
    name = "corrected"
    param_flag = "--terms"

    def _rule(self, options: Dict[str, Any]):
        rule_name = options.get("rule")
        if not rule_name:
            raise ValueError("corrected needs a rule (--rule or corrected:<rule>)")
        return get_rule(rule_name)

    def label(self, options: Dict[str, Any]) -> str:
        return f"{self.name}:{options.get('rule')}"

    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        return corrected_pi(param, self._rule(options))

    def reference(self, options: Dict[str, Any]) -> BigReal:
        return pi_quarter()

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        if self._rule(options).name == "none":
            return BigReal.from_fraction(Fraction(1, 2 * param + 1))
        return None


class TransformedMethod(Method):
    name = "transformed"
    param_flag = "--terms"

    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        return transformed_pi(param)

    def reference(self, options: Dict[str, Any]) -> BigReal:
        return pi_quarter()

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        return BigReal.from_fraction(transformed_bound(param))
