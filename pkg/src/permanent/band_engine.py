"""
Sliding-window dynamic program for permanents of banded matrices

Columns are swept left to right. While column j is being matched, the live
rows are j-d .. j+d and the state is the bitmask of which of them are already
taken (bit k <-> row j-d+k). Row j-d must be taken before the window moves
on, because no later column can reach it. At most 2^(2d) masks survive a
step, so the work is about n * 2^(2d) * (2d+1).
"""

import logging
from collections import defaultdict
from typing import Callable, Dict, Optional

from ..errors import CapacityError, DomainError
from ..structmat import IntMatrix
from .base_engine import AnyMatrix, PermanentEngine

logger = logging.getLogger(__name__)

DEFAULT_WINDOW_LIMIT = 12

Weight = Optional[Callable[[int, int], int]]


def _sweep(d: int, n: int, weight: Weight = None) -> int:
    """Sum over permutations within the band of the product of weights.

    weight(row, col) takes 1-based indices; None means every in-band entry is 1.
    """
    width = 2 * d + 1
    # rows 1-d .. 0 do not exist; mark them taken
    states: Dict[int, int] = {(1 << d) - 1: 1}
    for j in range(1, n + 1):
        expanded: Dict[int, int] = defaultdict(int)
        for mask, count in states.items():
            for k in range(width):
                if mask >> k & 1:
                    continue
                row = j - d + k
                if row < 1 or row > n:
                    continue
                if weight is None:
                    expanded[mask | 1 << k] += count
                else:
                    w = weight(row, j)
                    if w:
                        expanded[mask | 1 << k] += count * w
        shifted: Dict[int, int] = defaultdict(int)
        for mask, count in expanded.items():
            if not mask & 1 and j - d >= 1:
                continue
            shifted[mask >> 1] += count
        states = shifted
        if not states:
            return 0
    return sum(states.values())


class BandEngine(PermanentEngine):
    """Exact permanents of banded square matrices, including V(d, n) for large n"""

    name = "dp"

    def __init__(self, window_limit: int = DEFAULT_WINDOW_LIMIT):
        self.window_limit = window_limit

    def _window_error(self, d: int) -> Optional[CapacityError]:
        if d > self.window_limit:
            return CapacityError(
                f"band DP window limit is d <= {self.window_limit} "
                f"(window 2d+1 <= {2 * self.window_limit + 1}), got d={d}"
            )
        return None

    def capacity_error(self, matrix: AnyMatrix) -> Optional[CapacityError]:
        if not isinstance(matrix, IntMatrix) or not matrix.is_square:
            return CapacityError("band DP only handles square integer matrices")
        return self._window_error(matrix.bandwidth())

    def volume_capacity_error(self, d: int, n: int) -> Optional[CapacityError]:
        return self._window_error(min(d, n - 1))

    def permanent(self, matrix: AnyMatrix) -> int:
        self._require_capacity(matrix)
        entries = matrix.entries
        return _sweep(matrix.bandwidth(), matrix.rows, lambda i, j: int(entries[i - 1, j - 1]))

    def ball_volume(self, d: int, n: int) -> int:
        if d < 0 or n < 1:
            raise DomainError(f"ball volume needs d >= 0 and n >= 1, got d={d}, n={n}")
        # a band wider than n - 1 already covers the whole matrix
        d = min(d, n - 1)
        error = self._window_error(d)
        if error is not None:
            raise error
        return _sweep(d, n)


def permanent_band_dp(d: int, n: int, window_limit: int = DEFAULT_WINDOW_LIMIT) -> int:
    """V(d, n) = per A^(d,n) by the sliding-window sweep"""
    return BandEngine(window_limit).ball_volume(d, n)


def band_permanent(matrix: IntMatrix, window_limit: int = DEFAULT_WINDOW_LIMIT) -> int:
    """Weighted band sweep for any square matrix, e.g. per B^(d,n)"""
    return BandEngine(window_limit).permanent(matrix)
