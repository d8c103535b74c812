"""
Ryser inclusion-exclusion permanent with Gray-code row-sum updates
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from ..errors import CapacityError, DomainError
from ..structmat import IntMatrix
from .base_engine import AnyMatrix, PermanentEngine

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 30
PARALLEL_MIN_N = 16


def _gray(k: int) -> int:
    return k ^ (k >> 1)


def _ryser_chunk(entries: np.ndarray, lo: int, hi: int) -> int:
    """Signed partial sum over Gray codes gray(lo) .. gray(hi - 1), lo >= 1.

    Row sums are seeded from gray(lo - 1) directly, then updated one column at
    a time. Python ints absorb the products; numpy only holds the row sums.
    """
    n = entries.shape[0]
    previous = _gray(lo - 1)
    columns = [j for j in range(n) if previous >> j & 1]
    rowsums = entries[:, columns].sum(axis=1) if columns else np.zeros(n, dtype=np.int64)
    total = 0
    for k in range(lo, hi):
        j = (k & -k).bit_length() - 1
        code = _gray(k)
        if code >> j & 1:
            rowsums = rowsums + entries[:, j]
        else:
            rowsums = rowsums - entries[:, j]
        term = math.prod(rowsums.tolist())
        if term:
            total += term if (n - bin(code).count("1")) % 2 == 0 else -term
    return total


def _split(count: int, parts: int) -> List[Tuple[int, int]]:
    """Split Gray indices 1 .. count-1 into at most parts contiguous ranges"""
    parts = max(1, min(parts, count - 1))
    step = -(-(count - 1) // parts)
    return [(lo, min(lo + step, count)) for lo in range(1, count, step)]


class RyserEngine(PermanentEngine):
    """Square permanents by inclusion-exclusion over column subsets"""

    name = "ryser"

    def __init__(self, limit: int = DEFAULT_LIMIT, workers: Optional[int] = None):
        self.limit = limit
        self.workers = workers
        self.parallel_min_n = PARALLEL_MIN_N

    def capacity_error(self, matrix: AnyMatrix) -> Optional[CapacityError]:
        if not isinstance(matrix, IntMatrix):
            return CapacityError("Ryser engine only handles integer matrices")
        if matrix.rows > self.limit:
            return CapacityError(f"Ryser limit is n <= {self.limit}, got n={matrix.rows}")
        return None

    def permanent(self, matrix: AnyMatrix) -> int:
        if not isinstance(matrix, IntMatrix) or not matrix.is_square:
            raise DomainError(f"Ryser needs a square integer matrix, got {matrix.rows}x{matrix.cols}")
        self._require_capacity(matrix)
        entries = np.asarray(matrix.entries)
        count = 1 << matrix.rows
        parts = self.workers if self.workers and matrix.rows >= self.parallel_min_n else 1
        ranges = _split(count, parts)
        if len(ranges) == 1:
            total = _ryser_chunk(entries, 1, count)
        else:
            logger.debug(f"Ryser n={matrix.rows} over {len(ranges)} workers")
            with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
                futures = [pool.submit(_ryser_chunk, entries, lo, hi) for lo, hi in ranges]
                total = sum(f.result() for f in futures)
        assert total >= 0, f"Ryser produced a negative permanent {total}"
        return total


def permanent_ryser(matrix: IntMatrix, limit: int = DEFAULT_LIMIT, workers: Optional[int] = None) -> int:
    return RyserEngine(limit, workers).permanent(matrix)
