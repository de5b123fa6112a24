import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from src.precision.bigreal import DEFAULT_SCALE
from src.precision.errors import ConfigError

logger = logging.getLogger(__name__)

DIGITS_ENV = "PI_DIGITS"
MIN_DIGITS = 10
MAX_DIGITS = 200
OUTPUT_FORMATS = ("table", "csv")


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every CLI command."""

    digits: int = DEFAULT_SCALE
    output_format: str = "table"
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        if not isinstance(self.digits, int) or not MIN_DIGITS <= self.digits <= MAX_DIGITS:
            raise ConfigError(
                f"digits must be in [{MIN_DIGITS}, {MAX_DIGITS}], got {self.digits!r}"
            )
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"Unknown format '{self.output_format}'. Choose from: {', '.join(OUTPUT_FORMATS)}"
            )
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")


def digits_from_env() -> Optional[int]:
    """PI_DIGITS from the environment (or a .env file), None when unset."""
    load_dotenv()
    raw = os.getenv(DIGITS_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigError(f"{DIGITS_ENV} must be an integer, got '{raw}'") from None


def load_config(
    digits: Optional[int] = None,
    output_format: str = "table",
    seed: int = 0,
    jobs: int = 1,
) -> RunConfig:
    """Flag value first, then PI_DIGITS, then the default scale."""
    if digits is None:
        digits = digits_from_env()
        if digits is not None:
            logger.info("Using %s=%d", DIGITS_ENV, digits)
    return RunConfig(
        digits=DEFAULT_SCALE if digits is None else digits,
        output_format=output_format,
        seed=seed,
        jobs=jobs,
    )
