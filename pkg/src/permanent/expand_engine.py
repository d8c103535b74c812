"""
Row-by-row Laplace expansion memoised on the set of used columns
"""

import logging
from typing import Dict, Optional

from ..errors import CapacityError
from ..polynomial import IntPolynomial
from ..structmat import IntMatrix
from .base_engine import AnyMatrix, PermanentEngine, PermanentValue

logger = logging.getLogger(__name__)

DEFAULT_COLUMN_LIMIT = 22


class ExpansionEngine(PermanentEngine):
    """Rectangular permanents over integers or polynomials.

    Layer r maps each r-subset of used columns to the sum of products of the
    first r rows over injections onto that subset. Independent of any closed
    form, so it serves as a second oracle when literal enumeration is too slow.
    """

    name = "expand"

    def __init__(self, column_limit: int = DEFAULT_COLUMN_LIMIT):
        self.column_limit = column_limit

    def capacity_error(self, matrix: AnyMatrix) -> Optional[CapacityError]:
        if matrix.cols > self.column_limit:
            return CapacityError(
                f"expansion limit is {self.column_limit} columns, got {matrix.cols}"
            )
        return None

    def permanent(self, matrix: AnyMatrix) -> PermanentValue:
        self._require_wide(matrix)
        self._require_capacity(matrix)
        if isinstance(matrix, IntMatrix):
            rows = [[(j, int(v)) for j, v in enumerate(row) if v] for row in matrix.entries.tolist()]
            layer: Dict[int, PermanentValue] = {0: 1}
        else:
            rows = [[(j, p) for j, p in enumerate(row) if not p.is_zero()] for row in matrix.entries]
            layer = {0: IntPolynomial.constant(1)}
        for r, support in enumerate(rows):
            following: Dict[int, PermanentValue] = {}
            for used, value in layer.items():
                for j, entry in support:
                    bit = 1 << j
                    if used & bit:
                        continue
                    term = value * entry
                    key = used | bit
                    following[key] = following[key] + term if key in following else term
            layer = following
            logger.debug(f"expansion row {r + 1}: {len(layer)} column sets")
            if not layer:
                break
        total = sum(layer.values(), 0)
        return total if isinstance(matrix, IntMatrix) else IntPolynomial.zero() + total


def permanent_expand(matrix: AnyMatrix, column_limit: int = DEFAULT_COLUMN_LIMIT) -> PermanentValue:
    return ExpansionEngine(column_limit).permanent(matrix)
