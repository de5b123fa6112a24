"""
CSV and table rendering of ConvergenceRecords.

Every numeric column is rendered as a decimal string at the configured
scale and kept as text end to end (dtype=str), so output never passes
through binary floats and parses back losslessly.
"""

import io
import logging
from typing import List, Sequence

import pandas as pd

from src.core.correction import ConvergenceRecord
from src.precision.bigreal import BigReal

logger = logging.getLogger(__name__)

COLUMNS = ["method", "param", "estimate", "abs_error", "bound"]


def records_to_frame(records: Sequence[ConvergenceRecord]) -> pd.DataFrame:
    rows = [
        {
            "method": r.method,
            "param": str(r.param),
            "estimate": r.estimate.to_decimal_string(),
            "abs_error": r.abs_error.to_decimal_string(),
            "bound": "" if r.bound is None else r.bound.to_decimal_string(),
        }
        for r in records
    ]
    return pd.DataFrame(rows, columns=COLUMNS, dtype=str)


def render_csv(records: Sequence[ConvergenceRecord]) -> str:
    """Header `method,param,estimate,abs_error,bound`, newline-terminated rows."""
    return records_to_frame(records).to_csv(index=False, lineterminator="\n")


def render_table(records: Sequence[ConvergenceRecord]) -> str:
    frame = records_to_frame(records)
    if frame.empty:
        return " ".join(COLUMNS) + "\n"
    return frame.to_string(index=False) + "\n"


def render(records: Sequence[ConvergenceRecord], output_format: str) -> str:
    if output_format == "csv":
        return render_csv(records)
    return render_table(records)


def _parse_real(text: str) -> BigReal:
    digits = text.partition(".")[2]
    return BigReal.from_decimal_string(text, max(len(digits), 1))


def read_records(csv_text: str) -> List[ConvergenceRecord]:
    """Inverse of render_csv."""
    frame = pd.read_csv(io.StringIO(csv_text), dtype=str, keep_default_na=False)
    missing = [c for c in COLUMNS if c not in frame.columns]
    if missing:
        raise ValueError(f"CSV is missing columns: {', '.join(missing)}")
    records = []
    for row in frame.itertuples(index=False):
        records.append(
            ConvergenceRecord(
                method=row.method,
                param=int(row.param),
                estimate=_parse_real(row.estimate),
                abs_error=_parse_real(row.abs_error),
                bound=_parse_real(row.bound) if row.bound else None,
            )
        )
    logger.debug("Parsed %d records from CSV", len(records))
    return records
