"""Admissible polynomials in the (1-t)^lambda basis and their cube structure.

An admissible polynomial over the local ring A = k[x]_(x) with modulus
ideal I = (x^e) is

    f = sum_lambda  a_lambda * (1-t_1)^l1 * ... * (1-t_n)^ln

with a_(0,...,0) a unit of A and every other coefficient lying in
I^w(lambda), where the index weight w is max(lambda_i) by default (the
sum convention from the additive literature is available as an option).
These polynomials form a monoid under multiplication; faces substitute
t_i = 0 or t_i = 1, degeneracies insert a fresh variable, involutions flip
t_i to 1 - t_i, and the diagonal map sends 1-t to (1-t_1)(1-t_2).

Classes modulo units of A are represented by fixing a_(0,...,0) = 1, which
makes equality of unit-normalized fractions a syntactic check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import BadIndex, NotAdmissible, UnitRequired
from .fields import check_same_field
from .localring import LocalElem, ModulusIdeal, in_ideal_power

FACE_ZERO = "0"
FACE_INF = "inf"


@dataclass(frozen=True)
class CubeContext:
    """Base field, modulus ideal and index-weight convention."""

    field: object
    ideal: ModulusIdeal
    weight: str = "max"  # 'max' (default) or 'sum'

    def __post_init__(self):
        if self.weight not in ("max", "sum"):
            raise ValueError("weight convention must be 'max' or 'sum'")

    def index_weight(self, lam: tuple[int, ...]) -> int:
        if not lam:
            return 0
        return max(lam) if self.weight == "max" else sum(lam)


def _insert(lam: tuple[int, ...], pos: int, value: int) -> tuple[int, ...]:
    return lam[:pos] + (value,) + lam[pos:]


def _equal_mod_unit(a: "AdmissiblePoly", b: "AdmissiblePoly") -> bool:
    """a = u * b for a unit u of A, tested without division."""
    ua, ub = a.unit_part(), b.unit_part()
    if ua == ub:
        return a == b
    return a.scale(ub) == b.scale(ua)


def _binom(n: int, k: int) -> int:
    return math.comb(n, k)


class AdmissiblePoly:
    """Polynomial stored as a coefficient map lambda -> LocalElem."""

    __slots__ = ("ctx", "arity", "coeffs")

    def __init__(self, ctx: CubeContext, arity: int, coeffs: dict, *, reduce=True):
        self.ctx = ctx
        self.arity = arity
        if reduce:
            coeffs = {lam: c for lam, c in coeffs.items() if not c.is_zero()}
        self.coeffs = coeffs

    # -- constructors ----------------------------------------------------
    @classmethod
    def one(cls, ctx: CubeContext, arity: int) -> "AdmissiblePoly":
        return cls(ctx, arity, {(0,) * arity: LocalElem.one(ctx.field)}, reduce=False)

    @classmethod
    def from_constant(cls, ctx: CubeContext, arity: int, a: LocalElem) -> "AdmissiblePoly":
        return cls(ctx, arity, {(0,) * arity: a})

    # -- admissibility -----------------------------------------------------
    def admissibility_violation(self):
        """First violated condition, or None when admissible.

        Returns ``(lam, required_valuation, actual_valuation)``; the unit
        condition on the constant coefficient reports ``lam = (0, ..., 0)``.
        """
        zero_idx = (0,) * self.arity
        a0 = self.coeffs.get(zero_idx)
        if a0 is None or not a0.is_unit():
            got = math.inf if a0 is None else a0.valuation()
            return (zero_idx, 0, got)
        e = self.ctx.ideal.e
        for lam in sorted(self.coeffs):
            if lam == zero_idx:
                continue
            need = e * self.ctx.index_weight(lam)
            got = self.coeffs[lam].valuation()
            if got < need:
                return (lam, need, got)
        return None

    def is_admissible(self) -> bool:
        return self.admissibility_violation() is None

    def require_admissible(self) -> "AdmissiblePoly":
        violation = self.admissibility_violation()
        if violation is not None:
            lam, need, got = violation
            raise NotAdmissible(
                f"coefficient at lambda={lam} has valuation {got}, needs >= {need}"
            )
        return self

    # -- ring structure ------------------------------------------------------
    def _check(self, other: "AdmissiblePoly") -> None:
        check_same_field(self.ctx.field, other.ctx.field)
        if self.ctx != other.ctx:
            raise ValueError("operands carry different cube contexts")
        if self.arity != other.arity:
            raise ValueError("operands have different arities")

    def __mul__(self, other: "AdmissiblePoly") -> "AdmissiblePoly":
        self._check(other)
        out: dict = {}
        for la, ca in self.coeffs.items():
            for lb, cb in other.coeffs.items():
                key = tuple(i + j for i, j in zip(la, lb))
                prod = ca * cb
                out[key] = out[key] + prod if key in out else prod
        return AdmissiblePoly(self.ctx, self.arity, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdmissiblePoly):
            return NotImplemented
        return self.ctx == other.ctx and self.arity == other.arity and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.arity, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    def scale(self, u: LocalElem) -> "AdmissiblePoly":
        return AdmissiblePoly(self.ctx, self.arity, {lam: c * u for lam, c in self.coeffs.items()})

    def unit_part(self) -> LocalElem:
        return self.coeffs.get((0,) * self.arity, LocalElem.zero(self.ctx.field))

    def normalize(self) -> "AdmissiblePoly":
        """Divide by the constant-index coefficient so a_(0,...,0) = 1."""
        a0 = self.unit_part()
        if not a0.is_unit():
            raise UnitRequired("constant-index coefficient is not a unit")
        if a0.is_one():
            return self
        return self.scale(a0.inverse())

    # -- cube structure maps ---------------------------------------------------
    def _checked_direction(self, i: int) -> int:
        if not 1 <= i <= self.arity:
            raise BadIndex(f"direction {i} out of range 1..{self.arity}")
        return i - 1

    def face(self, i: int, eps: str) -> "AdmissiblePoly":
        """Substitute t_i = 0 (eps='0') or t_i = 1 (eps='inf')."""
        pos = self._checked_direction(i)
        out: dict = {}
        if eps == FACE_INF:
            for lam, c in self.coeffs.items():
                if lam[pos] == 0:
                    out[lam[:pos] + lam[pos + 1 :]] = c
        elif eps == FACE_ZERO:
            for lam, c in self.coeffs.items():
                key = lam[:pos] + lam[pos + 1 :]
                out[key] = out[key] + c if key in out else c
        else:
            raise BadIndex(f"face side must be '0' or 'inf', got {eps!r}")
        return AdmissiblePoly(self.ctx, self.arity - 1, out)

    def degeneracy(self, i: int) -> "AdmissiblePoly":
        """Insert a new (unused) variable in direction i."""
        if not 1 <= i <= self.arity + 1:
            raise BadIndex(f"direction {i} out of range 1..{self.arity + 1}")
        pos = i - 1
        out = {_insert(lam, pos, 0): c for lam, c in self.coeffs.items()}
        return AdmissiblePoly(self.ctx, self.arity + 1, out, reduce=False)

    def involution(self, i: int) -> "AdmissiblePoly":
        """Substitute t_i <- 1 - t_i and re-expand in the (1-t) basis."""
        pos = self._checked_direction(i)
        F = self.ctx.field
        out: dict = {}
        for lam, c in self.coeffs.items():
            # (1-t)^k  ->  t^k = sum_j binom(k,j) (-1)^j (1-t)^j
            k = lam[pos]
            for j in range(k + 1):
                coeff = c * LocalElem.from_int(F, (-1) ** j * _binom(k, j))
                key = lam[:pos] + (j,) + lam[pos + 1 :]
                out[key] = out[key] + coeff if key in out else coeff
        return AdmissiblePoly(self.ctx, self.arity, out)

    def diagonal(self) -> "AdmissiblePoly":
        """Substitute 1-t  ->  (1-t_1)(1-t_2) on an arity-1 polynomial."""
        if self.arity != 1:
            raise BadIndex("diagonal map is defined on arity-1 polynomials")
        self.require_admissible()
        out = {(lam[0], lam[0]): c for lam, c in self.coeffs.items()}
        return AdmissiblePoly(self.ctx, 2, out, reduce=False)

    def corner_value(self, zeros: frozenset[int] | set[int]) -> LocalElem:
        """Evaluate at the cube corner with t_i = 0 for i in zeros, else t_i = 1."""
        total = LocalElem.zero(self.ctx.field)
        for lam, c in self.coeffs.items():
            if all(lam[i] == 0 for i in range(self.arity) if i + 1 not in zeros):
                total = total + c
        return total

    def value_at_all_zero(self) -> LocalElem:
        return self.corner_value(set(range(1, self.arity + 1)))

    def value_at_all_one(self) -> LocalElem:
        return self.corner_value(set())

    # -- printing ------------------------------------------------------------
    def coeff_lines(self) -> Iterator[str]:
        for lam in sorted(self.coeffs):
            yield f"lambda={lam}: {self.coeffs[lam]}"

    def __repr__(self):
        body = ", ".join(f"{lam}: {c}" for lam, c in sorted(self.coeffs.items()))
        return f"AdmissiblePoly({{{body}}})"


class CubicalFraction:
    """Formal fraction of admissible polynomials, taken modulo units of A.

    Representatives are stored raw; the quotient by units is realized in
    the equality test, which cross-multiplies and corrects by the two
    constant-index units:  num1/den1 = num2/den2  iff

        (num1 * den2) * unit(num2 * den1)  ==  (num2 * den1) * unit(num1 * den2).

    This is the same relation as comparing a_0-normalized representatives
    syntactically, but needs no coefficient division, which keeps the whole
    cubical calculus free of fraction reduction.  ``normalize()`` returns
    the a_0 = 1 representative for presentation.
    """

    __slots__ = ("ctx", "arity", "num", "den")

    def __init__(self, num: AdmissiblePoly, den: AdmissiblePoly | None = None):
        if den is None:
            den = AdmissiblePoly.one(num.ctx, num.arity)
        num._check(den)
        if not num.unit_part().is_unit() or not den.unit_part().is_unit():
            raise UnitRequired("fraction components need unit constant-index terms")
        self.ctx = num.ctx
        self.arity = num.arity
        self.num = num
        self.den = den

    def normalize(self) -> "CubicalFraction":
        return CubicalFraction(self.num.normalize(), self.den.normalize())

    @classmethod
    def unit(cls, ctx: CubeContext, arity: int) -> "CubicalFraction":
        one = AdmissiblePoly.one(ctx, arity)
        return cls(one, one)

    # -- group structure -----------------------------------------------------
    def __mul__(self, other: "CubicalFraction") -> "CubicalFraction":
        return CubicalFraction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "CubicalFraction":
        return CubicalFraction(self.den, self.num)

    def __truediv__(self, other: "CubicalFraction") -> "CubicalFraction":
        return self * other.inverse()

    def __pow__(self, n: int) -> "CubicalFraction":
        if n < 0:
            return self.inverse() ** (-n)
        out = CubicalFraction.unit(self.ctx, self.arity)
        base = self
        while n > 0:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubicalFraction):
            return NotImplemented
        if self.ctx != other.ctx or self.arity != other.arity:
            return False
        left = self.num * other.den
        right = other.num * self.den
        return _equal_mod_unit(left, right)

    def __hash__(self):
        raise TypeError("CubicalFraction is unhashable; equality is cross-multiplied")

    def is_unit_class(self) -> bool:
        return _equal_mod_unit(self.num, self.den)

    def is_admissible(self) -> bool:
        return self.num.is_admissible() and self.den.is_admissible()

    # -- cube structure --------------------------------------------------------
    def face(self, i: int, eps: str) -> "CubicalFraction":
        return CubicalFraction(self.num.face(i, eps), self.den.face(i, eps))

    def degeneracy(self, i: int) -> "CubicalFraction":
        return CubicalFraction(self.num.degeneracy(i), self.den.degeneracy(i))

    def involution(self, i: int) -> "CubicalFraction":
        return CubicalFraction(self.num.involution(i), self.den.involution(i))

    def boundary(self) -> "CubicalFraction":
        """Multiplicative cubical boundary: prod_i (face_inf / face_0)^(-1)^i."""
        out = CubicalFraction.unit(self.ctx, self.arity - 1)
        for i in range(1, self.arity + 1):
            quotient = self.face(i, FACE_INF) / self.face(i, FACE_ZERO)
            out = out * (quotient if i % 2 == 0 else quotient.inverse())
        return out

    def in_normalized(self) -> bool:
        """Membership in the normalized subcomplex.

        All faces must be the unit class except the first 0-face: that is
        face(i, 0) for 2 <= i <= n and face(i, inf) for 1 <= i <= n.
        """
        for i in range(1, self.arity + 1):
            if not self.face(i, FACE_INF).is_unit_class():
                return False
            if i >= 2 and not self.face(i, FACE_ZERO).is_unit_class():
                return False
        return True

    def __repr__(self):
        return f"CubicalFraction(num={self.num!r}, den={self.den!r})"


# ---------------------------------------------------------------------------
# Conversion between the t-monomial and (1-t)^lambda bases
# ---------------------------------------------------------------------------

def expand_basis(tpoly: dict, arity: int, ctx: CubeContext) -> AdmissiblePoly:
    """Change basis from t-monomials (exponent -> LocalElem) to (1-t)^lambda."""
    F = ctx.field
    out: dict = {}
    for expo, c in tpoly.items():
        # t^k = (1 - (1-t))^k = sum_j binom(k,j) (-1)^j (1-t)^j per variable
        partial = {(): 1}
        for k in expo:
            nxt: dict = {}
            for prefix, sign_count in partial.items():
                for j in range(k + 1):
                    key = prefix + (j,)
                    val = sign_count * ((-1) ** j) * _binom(k, j)
                    nxt[key] = nxt.get(key, 0) + val
            partial = nxt
        for lam, n in partial.items():
            if n == 0:
                continue
            coeff = c * LocalElem.from_int(F, n)
            out[lam] = out[lam] + coeff if lam in out else coeff
    return AdmissiblePoly(ctx, arity, out)


def collapse_basis(f: AdmissiblePoly) -> dict:
    """Inverse of expand_basis: coefficients on plain t-monomials."""
    F = f.ctx.field
    out: dict = {}
    for lam, c in f.coeffs.items():
        # (1-t)^l = sum_k binom(l,k) (-1)^k t^k per variable
        partial = {(): 1}
        for l in lam:
            nxt: dict = {}
            for prefix, n in partial.items():
                for k in range(l + 1):
                    key = prefix + (k,)
                    nxt[key] = nxt.get(key, 0) + n * ((-1) ** k) * _binom(l, k)
            partial = nxt
        for expo, n in partial.items():
            if n == 0:
                continue
            coeff = c * LocalElem.from_int(F, n)
            out[expo] = out[expo] + coeff if expo in out else coeff
    return {e: c for e, c in out.items() if not c.is_zero()}


def evaluate_tpoly(tpoly: dict, assignment: dict[int, int]) -> dict:
    """Substitute t_i = 0 or 1 (1-based keys) into a t-monomial map.

    Assigned variables are summed out; the resulting map keeps the original
    positions for the remaining variables removed, re-indexed downward.
    """
    out: dict = {}
    for expo, c in tpoly.items():
        keep = True
        for i, v in assignment.items():
            if v == 0 and expo[i - 1] > 0:
                keep = False
                break
        if not keep:
            continue
        key = tuple(k for j, k in enumerate(expo) if (j + 1) not in assignment)
        out[key] = out[key] + c if key in out else c
    return {e: c for e, c in out.items() if not c.is_zero()}


# ---------------------------------------------------------------------------
# Seedable random generators for property suites
# ---------------------------------------------------------------------------

def random_unit(ctx: CubeContext, rng) -> LocalElem:
    """Random polynomial unit of the local ring: c0 + c1 x with c0 != 0.

    Polynomial units keep the cubical pipeline free of coefficient
    denominators, so products never trigger fraction reduction.
    """
    F = ctx.field
    if hasattr(F, "p"):
        c0 = F.from_int(rng.randrange(1, F.p))
        c1 = F.from_int(rng.randrange(F.p))
    else:
        c0 = F.from_int(rng.choice([n for n in range(-3, 4) if n]))
        c1 = F.from_int(rng.randrange(-3, 4))
    return LocalElem(F, [c0, c1], reduce=False)


def random_admissible(
    ctx: CubeContext,
    arity: int,
    rng,
    *,
    max_total_degree: int = 4,
    max_terms: int = 4,
    normalized: bool = True,
) -> AdmissiblePoly:
    """Random admissible polynomial: coefficients x^(e*w(lam)+j) * unit, j in 0..2."""
    e = ctx.ideal.e
    coeffs = {(0,) * arity: LocalElem.one(ctx.field) if normalized else random_unit(ctx, rng)}
    for _ in range(rng.randrange(1, max_terms + 1)):
        lam = _random_index(arity, rng, max_total_degree)
        if lam is None or lam in coeffs:
            continue
        j = rng.randrange(0, 3)
        power = e * ctx.index_weight(lam) + j
        coeffs[lam] = LocalElem.x_pow(ctx.field, power) * random_unit(ctx, rng)
    return AdmissiblePoly(ctx, arity, coeffs).require_admissible()


def _random_index(arity: int, rng, max_total: int):
    if arity == 0:
        return None
    lam = [0] * arity
    budget = rng.randrange(1, max_total + 1)
    for _ in range(budget):
        lam[rng.randrange(arity)] += 1
    return tuple(lam) if any(lam) else None


def random_fraction(ctx: CubeContext, arity: int, rng, **kwargs) -> CubicalFraction:
    return CubicalFraction(
        random_admissible(ctx, arity, rng, **kwargs),
        random_admissible(ctx, arity, rng, **kwargs),
    )
