"""Exact scalar arithmetic: prime fields GF(p) and the rationals.

A field object holds the arithmetic; scalars themselves are plain values
(canonical ints in ``0..p-1`` for GF(p), ``fractions.Fraction`` for Q).
Keeping scalars unboxed makes the polynomial layers cheap, and every
operation stays exact.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import FieldMismatch

MAX_PRIME = 2**31  # products of canonical representatives fit in 62 bits


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic of GF(p) on canonical representatives ``0 <= v < p``."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise ValueError(f"prime modulus must be < 2**31, got {p}")
        self.p = p

    # -- element constructors ------------------------------------------
    def from_int(self, n: int) -> int:
        return n % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # -- arithmetic ----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    # -- misc ------------------------------------------------------------
    def elements(self):
        return range(self.p)

    def to_str(self, a: int) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """Arithmetic of Q on ``fractions.Fraction`` values (always reduced)."""

    __slots__ = ()

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a: Fraction) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Return the (cached) prime field with p elements."""
    return PrimeField(p)


QQ = RationalField()


def field_from_spec(spec) -> PrimeField | RationalField:
    """Resolve a CLI field spec: a prime as int/str, or ``"Q"``."""
    if isinstance(spec, (PrimeField, RationalField)):
        return spec
    if isinstance(spec, str) and spec.upper() in ("Q", "QQ"):
        return QQ
    return GF(int(spec))


def check_same_field(fa, fb) -> None:
    if fa != fb:
        raise FieldMismatch(f"mixed base fields {fa!r} and {fb!r}")
