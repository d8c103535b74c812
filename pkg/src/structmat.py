"""
Structured matrix families: the band matrix A^(d,n), Kløve's balanced
matrix B^(d,n) and the d x 2d polynomial matrix A_{d,x}

All formulas use 1-based (i, j); conversion to 0-based storage happens here.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DomainError
from .polynomial import IntPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """Dense rectangular matrix of small non-negative integers"""

    entries: np.ndarray

    def __post_init__(self):
        data = np.array(self.entries, dtype=np.int64, copy=True)
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            raise DomainError(f"IntMatrix needs a non-empty 2-D array, got shape {data.shape}")
        if (data < 0).any():
            raise DomainError("IntMatrix entries must be non-negative")
        data.setflags(write=False)
        object.__setattr__(self, "entries", data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(np.asarray(rows, dtype=np.int64))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)"""
        return int(self.entries[i - 1, j - 1])

    def row_sums(self) -> List[int]:
        return self.entries.sum(axis=1).tolist()

    def col_sums(self) -> List[int]:
        return self.entries.sum(axis=0).tolist()

    def bandwidth(self) -> int:
        """Largest |i - j| over nonzero entries (0 for an all-zero matrix)"""
        ii, jj = np.nonzero(self.entries)
        if ii.size == 0:
            return 0
        return int(np.abs(ii - jj).max())

    def tolist(self) -> List[List[int]]:
        return self.entries.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool((self.entries == other.entries).all())

    def __hash__(self) -> int:
        return hash((self.entries.shape, self.entries.tobytes()))


@dataclass(frozen=True)
class PolyMatrix:
    """Dense rectangular matrix whose entries are IntPolynomials"""

    entries: Tuple[Tuple[IntPolynomial, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        if not rows or not rows[0]:
            raise DomainError("PolyMatrix needs at least one row and one column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise DomainError("PolyMatrix rows must all have the same length")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def at(self, i: int, j: int) -> IntPolynomial:
        return self.entries[i - 1][j - 1]

    def is_monomial(self) -> bool:
        """True when every nonzero entry is a single term c * x^k"""
        return all(p.is_zero() or p.as_monomial() is not None for row in self.entries for p in row)

    def substitute(self, x0: int) -> IntMatrix:
        return IntMatrix.from_rows([[p(x0) for p in row] for row in self.entries])

    def shift(self, a: int) -> "PolyMatrix":
        """Entry-wise substitution x -> x + a"""
        return PolyMatrix(tuple(tuple(p.shift(a) for p in row) for row in self.entries))

    def tolist(self) -> List[List[str]]:
        return [[str(p) for p in row] for row in self.entries]


def _index_grid(rows: int, cols: int) -> Tuple[np.ndarray, np.ndarray]:
    i = np.arange(1, rows + 1).reshape(-1, 1)
    j = np.arange(1, cols + 1).reshape(1, -1)
    return i, j


def build_band_matrix(d: int, n: int) -> IntMatrix:
    """A^(d,n): 1 where |i - j| <= d, 0 elsewhere"""
    if d < 0 or n < 1:
        raise DomainError(f"band matrix needs d >= 0 and n >= 1, got d={d}, n={n}")
    i, j = _index_grid(n, n)
    return IntMatrix((np.abs(i - j) <= d).astype(np.int64))


def build_klove_matrix(d: int, n: int) -> IntMatrix:
    """B^(d,n): the band matrix with its two corner triangles doubled.

    Every row and column sums to 2d + 1, which needs n >= 2d + 1 so that the
    doubled corners stay clear of each other.
    """
    if d < 1:
        raise DomainError(f"Kløve matrix needs d >= 1, got d={d}")
    if n < 2 * d + 1:
        raise DomainError(f"Kløve matrix needs n >= 2d+1, got d={d}, n={n} (2d+1={2 * d + 1})")
    i, j = _index_grid(n, n)
    doubled = (i + j <= d + 1) | (i + j >= 2 * n + 1 - d)
    entries = np.where(np.abs(i - j) > d, 0, np.where(doubled, 2, 1))
    return IntMatrix(entries)


def build_omega_matrix(d: int) -> PolyMatrix:
    """A_{d,x}: x for j <= d+1-i, 1 for d+2-i <= j <= d+i, 0 beyond"""
    if d < 1:
        raise DomainError(f"omega matrix needs d >= 1, got d={d}")
    x = IntPolynomial.x()
    one = IntPolynomial.constant(1)
    zero = IntPolynomial.zero()
    rows = []
    for i in range(1, d + 1):
        row = []
        for j in range(1, 2 * d + 1):
            if j <= d + 1 - i:
                row.append(x)
            elif j <= d + i:
                row.append(one)
            else:
                row.append(zero)
        rows.append(tuple(row))
    logger.debug(f"Built A_(d,x) for d={d}")
    return PolyMatrix(tuple(rows))


def build_family(family: str, d: int, n: int = 0):
    """Dispatch used by the CLI's matrix command"""
    if family == "band":
        return build_band_matrix(d, n)
    if family == "klove":
        return build_klove_matrix(d, n)
    if family == "omega":
        return build_omega_matrix(d)
    raise DomainError(f"Unknown matrix family '{family}' (expected band, klove or omega)")
