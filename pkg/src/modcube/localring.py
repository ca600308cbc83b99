"""The local ring k[x] localized at (x), and powers of the ideal (x^e).

Elements are reduced fractions num/den of univariate polynomials whose
denominator does not vanish at the origin.  The canonical form (gcd
removed, denominator constant term 1) makes equality a syntactic check,
and the x-adic valuation is read off the numerator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import univar as uv
from .errors import FieldMismatch, UnitRequired
from .fields import check_same_field


@dataclass(frozen=True)
class ModulusIdeal:
    """The ideal I = (x^e); its v-th power is (x^(e*v))."""

    e: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("modulus exponent must be >= 1")


class LocalElem:
    """Element of k[x] localized at (x), kept in canonical reduced form."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None, *, reduce=True):
        num = uv.trim(field, list(num))
        den = uv.one(field) if den is None else uv.trim(field, list(den))
        if uv.is_zero(den):
            raise ZeroDivisionError("denominator is zero")
        if uv.x_valuation(field, den) != 0:
            raise UnitRequired("denominator must be a unit at x = 0")
        if reduce and uv.deg(den) > 0:
            num, den = self._canonical(field, num, den)
        elif den and den[0] != field.one:
            c = field.inv(den[0])
            num = uv.scalar_mul(field, c, num)
            den = uv.scalar_mul(field, c, den)
        self.field = field
        self.num = num
        self.den = den

    @staticmethod
    def _canonical(field, num, den):
        if uv.is_zero(num):
            return [], uv.one(field)
        g = uv.gcd(field, num, den)
        if uv.deg(g) > 0:
            num, _ = uv.divmod_poly(field, num, g)
            den, _ = uv.divmod_poly(field, den, g)
        c = field.inv(den[0])  # den(0) != 0 survives gcd reduction
        num = uv.scalar_mul(field, c, num)
        den = uv.scalar_mul(field, c, den)
        return num, den

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, field) -> "LocalElem":
        return cls(field, [], reduce=False)

    @classmethod
    def one(cls, field) -> "LocalElem":
        return cls(field, uv.one(field), reduce=False)

    @classmethod
    def from_int(cls, field, n: int) -> "LocalElem":
        return cls(field, uv.const(field, field.from_int(n)), reduce=False)

    @classmethod
    def x_pow(cls, field, k: int) -> "LocalElem":
        return cls(field, uv.x_power(field, k), reduce=False)

    # -- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return uv.is_zero(self.num)

    def is_one(self) -> bool:
        return self.num == uv.one(self.field) and self.den == uv.one(self.field)

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def valuation(self):
        """x-adic valuation; math.inf for the zero element."""
        v = uv.x_valuation(self.field, self.num)
        return math.inf if v is None else v

    # -- arithmetic --------------------------------------------------------
    def _check(self, other) -> "LocalElem":
        if not isinstance(other, LocalElem):
            raise FieldMismatch(f"cannot combine LocalElem with {type(other).__name__}")
        check_same_field(self.field, other.field)
        return other

    def _den_trivial(self) -> bool:
        return uv.deg(self.den) == 0

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        if self._den_trivial() and other._den_trivial():
            return LocalElem(F, uv.add(F, self.num, other.num), reduce=False)
        num = uv.add(F, uv.mul(F, self.num, other.den), uv.mul(F, other.num, self.den))
        return LocalElem(F, num, uv.mul(F, self.den, other.den))

    def __sub__(self, other):
        other = self._check(other)
        F = self.field
        if self._den_trivial() and other._den_trivial():
            return LocalElem(F, uv.sub(F, self.num, other.num), reduce=False)
        num = uv.sub(F, uv.mul(F, self.num, other.den), uv.mul(F, other.num, self.den))
        return LocalElem(F, num, uv.mul(F, self.den, other.den))

    def __neg__(self):
        return LocalElem(self.field, uv.neg(self.field, self.num), self.den, reduce=False)

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        if self._den_trivial() and other._den_trivial():
            return LocalElem(F, uv.mul(F, self.num, other.num), reduce=False)
        return LocalElem(F, uv.mul(F, self.num, other.num), uv.mul(F, self.den, other.den))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def inverse(self) -> "LocalElem":
        if not self.is_unit():
            raise UnitRequired("division by a non-unit of the local ring")
        return LocalElem(self.field, self.den, self.num, reduce=False)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = LocalElem.one(self.field)
        base = self
        while n > 0:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, LocalElem):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.field, tuple(self.num), tuple(self.den)))

    def constant_term(self):
        """Value at x = 0 (den(0) = 1 in canonical form)."""
        return self.num[0] if self.num else self.field.zero

    def __repr__(self):
        return f"LocalElem({self})"

    def __str__(self):
        F = self.field
        num = uv.to_str(F, self.num)
        if self.den == uv.one(F):
            return num
        den = uv.to_str(F, self.den)
        return f"({num})/({den})"


def in_ideal_power(a: LocalElem, ideal: ModulusIdeal, nu: int) -> bool:
    """Membership a in I^nu, i.e. x-adic valuation >= e*nu."""
    if nu <= 0:
        return True
    return a.valuation() >= ideal.e * nu
