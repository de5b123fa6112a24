from typing import Any, Dict, Optional

from src.core.leibniz import transmutation_arctan, transmutation_error_bound
from src.methods.base_method import Method
from src.methods.arctan_methods import option_real
from src.precision.bigreal import BigReal
from src.precision.reference import br_arctan_reference


class LeibnizMethod(Method):
    """arctan(z) as z minus the sector integral, with `param` quadrature panels."""

    name = "leibniz"
    param_flag = "--panels"

    def _scheme(self, options: Dict[str, Any]) -> str:
        return options.get("scheme") or "trapezoid"

    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        z = option_real(options, "x", "1")
        return transmutation_arctan(z, param, self._scheme(options))

    def reference(self, options: Dict[str, Any]) -> BigReal:
        return br_arctan_reference(option_real(options, "x", "1"))

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        z = option_real(options, "x", "1")
        return transmutation_error_bound(z, param, self._scheme(options))
