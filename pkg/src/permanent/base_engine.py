"""
Base engine interface for permanent computations
"""

import math
from abc import ABC, abstractmethod
from typing import Optional, Union
import logging

from ..errors import CapacityError, DomainError
from ..polynomial import IntPolynomial
from ..structmat import IntMatrix, PolyMatrix, build_band_matrix

logger = logging.getLogger(__name__)

AnyMatrix = Union[IntMatrix, PolyMatrix]
PermanentValue = Union[int, IntPolynomial]


class PermanentEngine(ABC):
    """Base class for all permanent engines"""

    name = "base"

    @abstractmethod
    def capacity_error(self, matrix: AnyMatrix) -> Optional[CapacityError]:
        """Return the error this engine would raise for matrix, or None if it can run"""

    @abstractmethod
    def permanent(self, matrix: AnyMatrix) -> PermanentValue:
        """Exact permanent of matrix"""

    def can_compute(self, matrix: AnyMatrix) -> bool:
        return self.capacity_error(matrix) is None

    def volume_capacity_error(self, d: int, n: int) -> Optional[CapacityError]:
        return self.capacity_error(build_band_matrix(d, n))

    def ball_volume(self, d: int, n: int) -> int:
        """V(d, n) = per A^(d,n)"""
        return self.permanent(build_band_matrix(d, n))

    def _require_capacity(self, matrix: AnyMatrix):
        error = self.capacity_error(matrix)
        if error is not None:
            raise error

    @staticmethod
    def _require_wide(matrix: AnyMatrix):
        if matrix.rows > matrix.cols:
            raise DomainError(
                f"rectangular permanent needs rows <= cols, got {matrix.rows}x{matrix.cols}"
            )

    @staticmethod
    def injection_count(rows: int, cols: int) -> int:
        """Number of m-permutations of an n-set"""
        return math.perm(cols, rows)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"
