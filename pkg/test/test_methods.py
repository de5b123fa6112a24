import unittest
from unittest.mock import patch
import sys
from pathlib import Path

# Add project root to path
root_path = Path(__file__).parent.parent
if str(root_path) not in sys.path:
    sys.path.append(str(root_path))

from src.methods.leibniz_method import LeibnizMethod
from src.methods.arctan_methods import (
    ArcBitMethod,
    CorrectedMethod,
    SeriesMethod,
    TransformedMethod,
)
from src.methods.registry import get_method, split_method_spec
from src.methods.trig_methods import SineMethod, VersineMethod
from src.precision.bigreal import BigReal, localscale
from src.precision.errors import ConfigError, DomainError


class TestMethods(unittest.TestCase):

    def setUp(self):
        self._scale = localscale(30)
        self._scale.__enter__()

    def tearDown(self):
        self._scale.__exit__(None, None, None)

    def test_series_counts_terms(self):
        result = SeriesMethod().execute(5, {})
        self.assertTrue(result.success)
        self.assertTrue(result.record.estimate.to_decimal_string().startswith("0.83492063"))
        self.assertEqual(result.record.bound, BigReal.from_ratio(1, 11))

    def test_series_general_argument(self):
        result = SeriesMethod().execute(30, {"x": "0.5"})
        self.assertTrue(result.success)
        self.assertLessEqual(result.record.abs_error, result.record.bound)

    def test_arcbit_bound_only_for_unit_tangent(self):
        self.assertIsNone(ArcBitMethod().execute(1, {}).record.bound)
        self.assertIsNotNone(ArcBitMethod().execute(10, {}).record.bound)
        self.assertIsNone(ArcBitMethod().execute(10, {"x": "0.5"}).record.bound)

    def test_corrected_labels_rule(self):
        result = CorrectedMethod().execute(1, {"rule": "cf1"})
        self.assertTrue(result.success)
        self.assertEqual(result.record.method, "corrected:cf1")
        self.assertEqual(result.record.estimate, BigReal.from_ratio(3, 4))
        self.assertIsNone(result.record.bound)

    def test_corrected_none_has_bound(self):
        result = CorrectedMethod().execute(10, {"rule": "none"})
        self.assertEqual(result.record.bound, BigReal.from_ratio(1, 21))

    def test_corrected_without_rule_fails(self):
        result = CorrectedMethod().execute(3, {})
        self.assertFalse(result.success)
        self.assertIn("rule", result.error)

    def test_transformed_bound(self):
        result = TransformedMethod().execute(50, {})
        self.assertLessEqual(result.record.abs_error, result.record.bound)

    def test_sine_and_versine_within_taylor_bound(self):
        for method in (SineMethod(), VersineMethod()):
            result = method.execute(4, {"angle": "1.2"})
            self.assertTrue(result.success, result.error)
            self.assertLessEqual(result.record.abs_error, result.record.bound)

    def test_leibniz_scheme_option(self):
        for scheme in ("trapezoid", "midpoint"):
            result = LeibnizMethod().execute(200, {"x": "0.5", "scheme": scheme})
            self.assertTrue(result.success, result.error)
            self.assertLessEqual(result.record.abs_error, result.record.bound + BigReal.ulp() * 10)

    def test_param_must_be_positive(self):
        result = TransformedMethod().execute(0, {})
        self.assertFalse(result.success)
        self.assertIn("--terms", result.error)

    @patch("src.methods.trig_methods.sine_estimate")
    def test_domain_errors_become_failed_results(self, mock_estimate):
        mock_estimate.side_effect = DomainError("angle must lie in [0, pi/2], got 3")
        result = SineMethod().execute(2, {"angle": "1"})
        self.assertFalse(result.success)
        self.assertIn("angle", result.error)

    def test_registry(self):
        self.assertIsInstance(get_method("leibniz"), LeibnizMethod)
        with self.assertRaises(ConfigError):
            get_method("euler")
        self.assertEqual(split_method_spec("corrected:cf3"), ("corrected", {"rule": "cf3"}))
        self.assertEqual(split_method_spec(" series "), ("series", {}))
        with self.assertRaises(ConfigError):
            split_method_spec("arcbit:cf1")


if __name__ == "__main__":
    unittest.main()
