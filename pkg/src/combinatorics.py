"""
Exact integer helpers shared by the omega, identities and bounds modules
"""

import math
from functools import lru_cache
from typing import Tuple

from .errors import DomainError

LN2 = math.log(2.0)


@lru_cache(maxsize=None)
def pascal_row(n: int) -> Tuple[int, ...]:
    """Return (C(n,0), ..., C(n,n)) built by the Pascal recurrence"""
    if n < 0:
        raise DomainError(f"pascal_row needs n >= 0, got {n}")
    row = (1,)
    for _ in range(n):
        row = (1,) + tuple(a + b for a, b in zip(row, row[1:])) + (1,)
    return row


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return 0
    return pascal_row(n)[k]


def log_bigint(value: int) -> float:
    """Natural log of a positive integer of any size.

    The top 53 bits go through math.log and the dropped bits come back as a
    multiple of ln 2, so no float overflow happens however large value is.
    """
    if value <= 0:
        raise DomainError(f"log_bigint needs a positive integer, got {value}")
    shift = max(value.bit_length() - 53, 0)
    return math.log(value >> shift) + shift * LN2


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
