from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.core.correction import ConvergenceRecord
from src.precision.bigreal import BigReal


@dataclass
class MethodResult:
    success: bool
    record: Optional[ConvergenceRecord] = None
    error: Optional[str] = None


class Method(ABC):
    """
    Abstract base class for all estimators.
    A method turns one integer parameter into a ConvergenceRecord at the
    scale of the active precision context.
    """

    name: str = ""
    param_flag: str = ""

    @abstractmethod
    def estimate(self, param: int, options: Dict[str, Any]) -> BigReal:
        """Value of the estimator at `param`."""

    @abstractmethod
    def reference(self, options: Dict[str, Any]) -> BigReal:
        """Oracle value the estimate converges to."""

    def bound(self, param: int, options: Dict[str, Any]) -> Optional[BigReal]:
        """Theoretical error bound, None where the method has none."""
        return None

    def label(self, options: Dict[str, Any]) -> str:
        return self.name

    def execute(self, param: int, options: Dict[str, Any]) -> MethodResult:
        """
        Run the estimator and wrap the outcome.
        :param param: n, terms, panels or iterations depending on the method.
        :param options: method-specific flags (x, rule, angle, scheme).
        :return: MethodResult; failures carry the error text instead of raising.
        """
        if not isinstance(param, int) or param < 1:
            return MethodResult(
                success=False, error=f"{self.param_flag} must be >= 1, got {param!r}"
            )
        try:
            record = ConvergenceRecord.measure(
                method=self.label(options),
                param=param,
                estimate=self.estimate(param, options),
                reference=self.reference(options),
                bound=self.bound(param, options),
            )
        except (ValueError, IndexError, ZeroDivisionError) as e:
            return MethodResult(success=False, error=str(e))
        return MethodResult(success=True, record=record)
