from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.core.correction import ConvergenceRecord
from src.utils.config import RunConfig


@dataclass
class BenchCell:
    """One (method, param) evaluation."""

    method: str
    param: int
    options: Dict[str, Any] = field(default_factory=dict)
    id: str = ""
    status: str = "pending"  # pending, completed, failed
    record: Optional[ConvergenceRecord] = None
    error: Optional[str] = None
    metadata: Dict[str, Any] = field(default_factory=dict)


class Blueprint:
    """
    The Blueprint holds the cells of one run and their outcomes.
    Cells keep their input order; rendering follows that order.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.cells: List[BenchCell] = []

    def add_cell(
        self, method: str, param: int, options: Optional[Dict[str, Any]] = None
    ) -> BenchCell:
        cell = BenchCell(
            method=method,
            param=param,
            options=dict(options or {}),
            id=f"cell_{len(self.cells)}",
        )
        self.cells.append(cell)
        return cell

    def load_grid(
        self, methods: List[Dict[str, Any]], params: List[int]
    ) -> None:
        """Method-major grid: every method entry ({'method', 'options'}) at every param."""
        for entry in methods:
            for param in params:
                self.add_cell(entry["method"], param, entry.get("options"))

    def get_pending_cells(self) -> List[BenchCell]:
        return [c for c in self.cells if c.status == "pending"]

    def update_cell(
        self,
        cell_id: str,
        record: Optional[ConvergenceRecord] = None,
        status: Optional[str] = None,
        error: Optional[str] = None,
        metadata: Optional[Dict] = None,
    ) -> bool:
        for cell in self.cells:
            if cell.id == cell_id:
                if record is not None:
                    cell.record = record
                if status is not None:
                    cell.status = status
                if error is not None:
                    cell.error = error
                if metadata:
                    cell.metadata.update(metadata)
                return True
        return False

    def failed_cells(self) -> List[BenchCell]:
        return [c for c in self.cells if c.status == "failed"]

    def records(self) -> List[ConvergenceRecord]:
        return [c.record for c in self.cells if c.record is not None]
