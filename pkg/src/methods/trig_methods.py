from typing import Any, Dict, Optional

from src.core.trig import sine_estimate, taylor_remainder, versine_estimate
from src.methods.base_method import Method
from src.methods.arctan_methods import option_real
from src.precision.bigreal import BigReal
from src.precision.reference import br_cos_reference, br_sin_reference


class SineMethod(Method):
    """sin(angle) after `param` refinement passes."""

    name = "sine"
    param_flag = "--iterations"

    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        return sine_estimate(option_real(options, "angle", "1"), param)

    def reference(self, options: Dict[str, Any]) -> BigReal:
        return br_sin_reference(option_real(options, "angle", "1"))

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        return taylor_remainder(option_real(options, "angle", "1"), 2 * param + 3)


class VersineMethod(Method):
    """1 - cos(angle) with `param` series terms."""

    name = "versine"
    param_flag = "--iterations"

    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        return versine_estimate(option_real(options, "angle", "1"), param)

    def reference(self, options: Dict[str, Any]) -> BigReal:
        return 1 - br_cos_reference(option_real(options, "angle", "1"))

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        return taylor_remainder(option_real(options, "angle", "1"), 2 * param + 2)
