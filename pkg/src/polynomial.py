"""
Exact dense univariate integer polynomials

Coefficients are stored low-to-high (index k holds the coefficient of x^k).
Arithmetic is delegated to sympy's dense univariate routines over ZZ, which
keep coefficients high-to-low, so every call converts at the boundary.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_shift
from sympy.polys.domains import ZZ

from .errors import DomainError

Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in one indeterminate x with arbitrary-precision integer coefficients"""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    # constructors

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPolynomial":
        """c * x^k"""
        return cls((0,) * k + (c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls.monomial(1, 1)

    # sympy boundary

    def _dup(self) -> List:
        return dup_strip([ZZ(c) for c in reversed(self.coeffs)])

    @classmethod
    def _from_dup(cls, f: List) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(f)))

    @staticmethod
    def _lift(other) -> Optional["IntPolynomial"]:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return None

    # properties

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def as_monomial(self) -> Optional[Tuple[int, int]]:
        """Return (c, k) when the polynomial is c * x^k with c != 0, else None"""
        nonzero = [k for k, c in enumerate(self.coeffs) if c]
        if len(nonzero) != 1:
            return None
        k = nonzero[0]
        return self.coeffs[k], k

    # arithmetic

    def __add__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self._from_dup(dup_add(self._dup(), rhs._dup(), ZZ))

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self._from_dup(dup_sub(self._dup(), rhs._dup(), ZZ))

    def __rsub__(self, other):
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __neg__(self):
        return self._from_dup(dup_neg(self._dup(), ZZ))

    def __mul__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self._from_dup(dup_mul(self._dup(), rhs._dup(), ZZ))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError(f"negative power {exponent} is not a polynomial")
        result = IntPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, a: int) -> "IntPolynomial":
        """Substitute x -> x + a"""
        return self._from_dup(dup_shift(self._dup(), ZZ(a), ZZ))

    def __call__(self, x0: Scalar) -> Scalar:
        """Exact Horner evaluation; integers stay integers, rationals stay Fractions"""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        if isinstance(acc, Fraction) and acc.denominator == 1:
            return acc.numerator
        return acc

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text
