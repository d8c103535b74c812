"""
Literal enumeration of injections: the ground-truth oracle
"""

import logging
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Tuple

from ..errors import CapacityError, OracleTooLarge
from ..polynomial import IntPolynomial
from ..structmat import IntMatrix, PolyMatrix
from .base_engine import AnyMatrix, PermanentEngine, PermanentValue

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8


class EnumerationEngine(PermanentEngine):
    """Sums M[1,s_1] ... M[m,s_m] over every injection s of the rows into the columns.

    Branches through zero entries are cut, so the work is proportional to the
    number of nonzero products; the budget is still checked against the full
    count of m-permutations.
    """

    name = "enumerate"

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget

    def capacity_error(self, matrix: AnyMatrix) -> Optional[CapacityError]:
        count = self.injection_count(matrix.rows, matrix.cols)
        if count > self.budget:
            return OracleTooLarge(
                f"oracle too large: {matrix.rows}x{matrix.cols} has {count} injections, "
                f"budget is {self.budget}"
            )
        return None

    def permanent(self, matrix: AnyMatrix) -> PermanentValue:
        self._require_wide(matrix)
        self._require_capacity(matrix)
        if isinstance(matrix, IntMatrix):
            support = [
                [(j, int(v)) for j, v in enumerate(row) if v]
                for row in matrix.entries.tolist()
            ]
            total = [0]

            def emit_int(acc: int):
                total[0] += acc

            self._walk(support, 1, emit_int, lambda acc, v: acc * v)
            return total[0]
        if matrix.is_monomial():
            return self._monomial_permanent(matrix)
        support = [[(j, p) for j, p in enumerate(row) if not p.is_zero()] for row in matrix.entries]
        result = [IntPolynomial.zero()]

        def emit_poly(acc: IntPolynomial):
            result[0] = result[0] + acc

        self._walk(support, IntPolynomial.constant(1), emit_poly, lambda acc, p: acc * p)
        return result[0]

    def _monomial_permanent(self, matrix: PolyMatrix) -> IntPolynomial:
        """Monomial entries multiply to a monomial, so track (coefficient, degree) pairs"""
        support = [
            [(j, p.as_monomial()) for j, p in enumerate(row) if not p.is_zero()]
            for row in matrix.entries
        ]
        by_degree: Dict[int, int] = defaultdict(int)

        def emit(acc: Tuple[int, int]):
            by_degree[acc[1]] += acc[0]

        self._walk(support, (1, 0), emit, lambda acc, t: (acc[0] * t[0], acc[1] + t[1]))
        if not by_degree:
            return IntPolynomial.zero()
        top = max(by_degree)
        return IntPolynomial(tuple(by_degree.get(k, 0) for k in range(top + 1)))

    @staticmethod
    def _walk(support: List[List[tuple]], start, emit: Callable, mul: Callable):
        m = len(support)
        used = set()

        def descend(row: int, acc):
            if row == m:
                emit(acc)
                return
            for j, value in support[row]:
                if j in used:
                    continue
                used.add(j)
                descend(row + 1, mul(acc, value))
                used.discard(j)

        descend(0, start)


def permanent_enumerate(matrix: AnyMatrix, budget: int = DEFAULT_BUDGET) -> PermanentValue:
    """Ground-truth rectangular permanent by enumeration"""
    return EnumerationEngine(budget).permanent(matrix)
