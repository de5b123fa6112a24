import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from src.bench.blueprint import BenchCell, Blueprint
from src.methods.base_method import Method, MethodResult
from src.methods.registry import METHODS
from src.precision.bigreal import localscale

logger = logging.getLogger(__name__)


class Architect:
    """
    The Architect runs the cells of a Blueprint.
    It selects the estimator for each cell, runs it inside the configured
    precision context and records the outcome on the cell.
    """

    def __init__(self, blueprint: Blueprint):
        self.blueprint = blueprint

    def run(self) -> bool:
        """Evaluate every pending cell; True when none failed."""
        pending = self.blueprint.get_pending_cells()
        jobs = self.blueprint.config.jobs
        logger.info("Architect: %d cells, jobs=%d", len(pending), jobs)
        if jobs > 1 and len(pending) > 1:
            # map() yields in submission order, so updates stay in input order
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(self._process_cell, pending))
        else:
            results = [self._process_cell(cell) for cell in pending]

        for cell, (result, elapsed) in zip(pending, results):
            metadata = {"seconds": round(elapsed, 3)}
            if result.success:
                self.blueprint.update_cell(
                    cell.id, record=result.record, status="completed", metadata=metadata
                )
            else:
                self.blueprint.update_cell(
                    cell.id, status="failed", error=result.error, metadata=metadata
                )
                logger.warning(
                    "Architect: cell %s (%s %d) failed: %s",
                    cell.id,
                    cell.method,
                    cell.param,
                    result.error,
                )
        return not self.blueprint.failed_cells()

    def _process_cell(self, cell: BenchCell):
        started = time.perf_counter()
        method = self._select_method(cell)
        if method is None:
            result = MethodResult(success=False, error=f"No method named '{cell.method}'")
        else:
            # contextvars are per thread, so each worker sets its own scale
            with localscale(self.blueprint.config.digits):
                result = method.execute(cell.param, cell.options)
        elapsed = time.perf_counter() - started
        logger.debug("Architect: %s done in %.3fs", cell.id, elapsed)
        return result, elapsed

    def _select_method(self, cell: BenchCell) -> Optional[Method]:
        """Factory method to get the right estimator."""
        cls = METHODS.get(cell.method)
        return cls() if cls else None
