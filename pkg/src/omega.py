"""
Omega polynomial: closed form, shifted form, evaluation and the omega_d factor
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Tuple, Union

from .combinatorics import log_bigint, pascal_row
from .errors import DomainError
from .polynomial import IntPolynomial
from .structmat import PolyMatrix, build_omega_matrix

logger = logging.getLogger(__name__)

# Omega_d = Omega_d(2) for d = 1..9 (OEIS A074932)
REFERENCE_VALUES = (3, 18, 170, 2200, 36232, 725200, 17095248, 463936896, 14246942336)


def _require_positive(d: int):
    if d < 1:
        raise DomainError(f"Omega needs d >= 1, got d={d}")


@lru_cache(maxsize=None)
def omega_closed_form(d: int) -> IntPolynomial:
    """sum_{m=0}^{d} C(d,m) (m+1)^d (x-1)^(d-m)"""
    _require_positive(d)
    row = pascal_row(d)
    x_minus_one = IntPolynomial((-1, 1))
    total = IntPolynomial.zero()
    for m in range(d + 1):
        total = total + (x_minus_one ** (d - m)) * (row[m] * (m + 1) ** d)
    return total


@lru_cache(maxsize=None)
def omega_shifted_form(d: int) -> IntPolynomial:
    """Omega_d(x + 1) = sum_{m=0}^{d} C(d,m) (d-m+1)^d x^m"""
    _require_positive(d)
    row = pascal_row(d)
    return IntPolynomial(tuple(row[m] * (d - m + 1) ** d for m in range(d + 1)))


def omega_at(d: int, x0: Union[int, Fraction]) -> Union[int, Fraction]:
    """Exact value of Omega_d at an integer or rational point"""
    return omega_closed_form(d)(x0)


def omega_constant(d: int) -> int:
    """sum_{m=0}^{d} C(d,m) (m+1)^d, the constant-only form of Omega_d(2)"""
    _require_positive(d)
    row = pascal_row(d)
    return sum(row[m] * (m + 1) ** d for m in range(d + 1))


def omega_factor(d: int) -> float:
    """ln omega_d = ln Omega_d + d - d ln(2d+1)"""
    return log_bigint(omega_constant(d)) + d - d * math.log(2 * d + 1)


def parse_point(text: str) -> Union[int, Fraction]:
    """Parse an integer or rational literal such as 2, -3 or 5/2"""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"'{text}' is not an integer or rational literal")
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class SelectionSequence:
    """rho in R_d: picks[i-1] is the column chosen in row i, all distinct"""

    picks: Tuple[int, ...]

    def is_valid(self, d: int) -> bool:
        return (
            len(self.picks) == d
            and len(set(self.picks)) == d
            and all(1 <= p <= d + i for i, p in enumerate(self.picks, start=1))
        )

    def weight(self, matrix: PolyMatrix) -> IntPolynomial:
        product = IntPolynomial.constant(1)
        for i, p in enumerate(self.picks, start=1):
            product = product * matrix.at(i, p)
        return product


def selection_sequences(d: int) -> Iterator[SelectionSequence]:
    """Every rho in R_d, in lexicographic order"""
    _require_positive(d)
    picks = []
    used = set()

    def extend(i: int):
        if i > d:
            yield SelectionSequence(tuple(picks))
            return
        for p in range(1, d + i + 1):
            if p in used:
                continue
            used.add(p)
            picks.append(p)
            yield from extend(i + 1)
            picks.pop()
            used.discard(p)

    yield from extend(1)


def omega_by_definition(d: int) -> IntPolynomial:
    """Sum of a_{1,rho_1} ... a_{d,rho_d} over R_d, straight from the definition"""
    matrix = build_omega_matrix(d)
    total = IntPolynomial.zero()
    for rho in selection_sequences(d):
        total = total + rho.weight(matrix)
    return total
