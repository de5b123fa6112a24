import mpmath
import pytest

from src.precision.bigreal import BigReal, localscale

SCALE = 50


@pytest.fixture(autouse=True)
def isolate_digits_env(monkeypatch):
    """
    Keeps a developer's PI_DIGITS (shell or .env) out of every test.
    Tests that exercise the variable set it explicitly.
    """
    monkeypatch.delenv("PI_DIGITS", raising=False)
    monkeypatch.setattr("src.utils.config.load_dotenv", lambda *a, **k: False)
    yield


@pytest.fixture
def scale():
    """Runs the test inside a 50-digit precision context."""
    with localscale(SCALE) as s:
        yield s


@pytest.fixture(scope="session")
def mp_pi_quarter():
    """pi/4 from mpmath at 80 digits, independent of the package's own oracle."""
    with mpmath.workdps(80):
        text = mpmath.nstr(mpmath.pi / 4, 75, strip_zeros=False)
    return BigReal.from_decimal_string(text, SCALE)

