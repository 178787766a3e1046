"""
Batch sweeps over a prime range
One report per prime with its identity checks; the first failing prime aborts
the sweep with its diagnostics
"""

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from pydantic import Field

from quatclass.arith import ExactModel, RationalField, is_prime
from quatclass.config.settings import get_settings
from quatclass.errors import IdentityCheckError, IntegralityError, InvalidInputError, QuatClassError
from quatclass.pipeline.identities import CheckSelection, IdentityResult, first_failure
from quatclass.pipeline.report import report
from quatclass.utils.logger import log_with_extra, setup_logger

logger = setup_logger(__name__)

class BatchRow(ExactModel):
    """Summary of one prime: the values a sweep compares, plus its checks"""

    p: int
    regime: str
    zeta: RationalField
    h1: Dict[str, int]
    h_sc: Dict[str, int]
    type_number_total: int
    checks: List[IdentityResult] = Field(default_factory=list)
    failed_check: Optional[str] = None
    diagnostics: Dict[str, Any] = Field(default_factory=dict)

class BatchSummary(ExactModel):
    p_min: int
    p_max: int
    checks: CheckSelection
    rows: List[BatchRow]

    @property
    def passed(self) -> bool:
        return all(row.failed_check is None for row in self.rows)

def primes_in_range(p_min: int, p_max: int) -> List[int]:
    return [n for n in range(max(p_min, 2), p_max + 1) if is_prime(n)]

def batch_row(p: int, checks: CheckSelection = CheckSelection.ALL) -> BatchRow:
    """
    Report for one prime reduced to a row. Errors are captured in the row so
    that rows can cross process boundaries.
    """
    try:
        result = report(p, checks)
    except QuatClassError as e:
        check = "integrality" if isinstance(e, IntegralityError) else type(e).__name__
        return BatchRow(p=p, regime="", zeta=0, h1={}, h_sc={}, type_number_total=0,
                        failed_check=check, diagnostics=e.to_dict())
    failure = first_failure(result.identities_checked)
    return BatchRow(
        p=p,
        regime=result.regime.value,
        zeta=result.field.zeta_minus_one,
        h1={tag: g.h1 for tag, g in result.per_genus.items()},
        h_sc={tag: g.h_sc for tag, g in result.per_genus.items()},
        type_number_total=result.type_number_total,
        checks=result.identities_checked,
        failed_check=failure.name if failure else None,
        diagnostics={"detail": failure.detail} if failure else {},
    )

def _worker_count(primes: int) -> int:
    workers = get_settings().batch_workers
    if workers == 0:
        workers = os.cpu_count() or 1
    return max(1, min(workers, primes))

def batch(p_min: int, p_max: int, checks: CheckSelection = CheckSelection.ALL,
          raise_on_failure: bool = True) -> BatchSummary:
    """
    Reports for every prime in [p_min, p_max], rows sorted by p.

    Args:
        p_min: Lower bound (inclusive)
        p_max: Upper bound (inclusive), at most the configured ceiling
        checks: Which identity checks to evaluate
        raise_on_failure: Raise on the first failing prime instead of returning

    Raises:
        InvalidInputError: p_max above the ceiling
        IdentityCheckError: a check failed (smallest failing p)
    """
    settings = get_settings()
    if not settings.check_prime_bound(p_max):
        raise InvalidInputError(f"p_max = {p_max} exceeds the configured ceiling {settings.pmax_ceiling}")
    checks = CheckSelection(checks)
    primes = primes_in_range(p_min, p_max)
    workers = _worker_count(len(primes))
    log_with_extra(logger, "info", f"Batch over {len(primes)} primes",
                   p_min=p_min, p_max=p_max, checks=checks.value, workers=workers)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(batch_row, primes, [checks] * len(primes), chunksize=16))
    else:
        rows = [batch_row(p, checks) for p in primes]
    rows.sort(key=lambda row: row.p)

    summary = BatchSummary(p_min=p_min, p_max=p_max, checks=checks, rows=rows)
    failed = next((row for row in rows if row.failed_check is not None), None)
    if failed is not None:
        log_with_extra(logger, "error", f"Batch failed at p={failed.p}",
                       p=failed.p, check=failed.failed_check)
        if raise_on_failure:
            raise IdentityCheckError(failed.p, failed.failed_check, failed.diagnostics)
    return summary
