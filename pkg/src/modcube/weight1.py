"""The weight-one calculus: homotopy operator, endpoint ratio and witnesses.

The contracting homotopy sends an arity-n class f (normalized so that
f(1,...,1) = 1) to

    H(f) = 1 + (f(t_2, ..., t_{n+1}) - 1) * (1 - t_1),

applied to numerator and denominator separately.  Its faces satisfy exact
identities: the first infinity-face is trivial, the first 0-face recovers
f, and the remaining faces commute with the cone construction provided the
cone keeps the parent's unit normalization (substituting t_i = 0 changes
the value at the all-ones corner, so re-normalizing the face before coning
would differ by a unit section; the explicit arity-1 boundary formula
1 + (f(0)/f(1) - 1)(1 - t_1) is the i = 2 instance of this).

Exactness at arity 1 is witnessed constructively: whenever two classes
have the same endpoint ratio, the quotient of their cones lies in the
normalized subcomplex and its first 0-face recovers their quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubical import (
    FACE_INF,
    FACE_ZERO,
    AdmissiblePoly,
    CubeContext,
    CubicalFraction,
    random_admissible,
    random_unit,
)
from .errors import InternalInvariantViolation, PreconditionFailed
from .localring import LocalElem, ModulusIdeal, in_ideal_power


class UnitOneClass:
    """A unit of the local ring congruent to 1 modulo the modulus ideal."""

    __slots__ = ("elem", "ideal")

    def __init__(self, elem: LocalElem, ideal: ModulusIdeal):
        one = LocalElem.one(elem.field)
        if not elem.is_unit():
            raise PreconditionFailed("element is not a unit of the local ring")
        if not in_ideal_power(elem - one, ideal, 1):
            raise PreconditionFailed(
                f"element is not congruent to 1 modulo x^{ideal.e}"
            )
        self.elem = elem
        self.ideal = ideal

    @classmethod
    def identity(cls, field, ideal: ModulusIdeal) -> "UnitOneClass":
        return cls(LocalElem.one(field), ideal)

    def __mul__(self, other: "UnitOneClass") -> "UnitOneClass":
        return UnitOneClass(self.elem * other.elem, self.ideal)

    def inverse(self) -> "UnitOneClass":
        return UnitOneClass(self.elem.inverse(), self.ideal)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitOneClass):
            return NotImplemented
        return self.elem == other.elem and self.ideal == other.ideal

    def __hash__(self):
        return hash((self.elem, self.ideal))

    def is_identity(self) -> bool:
        return self.elem.is_one()

    def __repr__(self):
        return f"UnitOneClass({self.elem})"


def cone(f: AdmissiblePoly, unit: LocalElem | None = None) -> AdmissiblePoly:
    """The representative u + (f(t_2,...,t_{n+1}) - u)(1 - t_1).

    With u = f's own constant-index coefficient (the default) this is a
    unit multiple of 1 + (f(1)^{-1} f(t_2,...) - 1)(1 - t_1), hence the
    same class, and it needs no division.  Passing the unit of a parent
    polynomial instead gives the raw faces of a cone (the substitution
    t_i = 0 changes the all-ones value, the prefactor unit stays).
    """
    ctx, n = f.ctx, f.arity
    zero_idx = (0,) * n
    if unit is None:
        unit = f.unit_part()
    out = {(0,) * (n + 1): unit}
    for lam, c in f.coeffs.items():
        if lam == zero_idx:
            drop = c - unit
            if not drop.is_zero():
                out[(1,) + lam] = drop
        else:
            out[(1,) + lam] = c
    return AdmissiblePoly(ctx, n + 1, out).require_admissible()


def homotopy(c: CubicalFraction) -> CubicalFraction:
    """Apply the cone to numerator and denominator of a class."""
    return CubicalFraction(cone(c.num), cone(c.den))


@dataclass(frozen=True)
class FaceCheck:
    name: str
    ok: bool
    detail: str = ""


def homotopy_face_checks(c: CubicalFraction) -> list[FaceCheck]:
    """Verify the face identities of the homotopy exactly, face by face.

    Checked: face(H(c), 1, inf) is the unit class; face(H(c), 1, 0)
    recovers c; and for every i >= 2 the face of the cone equals the cone
    of the raw face (parent normalization kept, see the module docstring).
    For infinity-faces the raw face stays normalized, so that case is the
    literal commutation H(face(c)) = face(H(c)).
    """
    h = homotopy(c)
    checks = [
        FaceCheck("face(1,inf)=unit", h.face(1, FACE_INF).is_unit_class()),
        FaceCheck("face(1,0)=class", h.face(1, FACE_ZERO) == c),
    ]
    for i in range(2, c.arity + 2):
        for eps in (FACE_ZERO, FACE_INF):
            expected = CubicalFraction(
                cone(c.num.face(i - 1, eps), c.num.unit_part()),
                cone(c.den.face(i - 1, eps), c.den.unit_part()),
            )
            got = h.face(i, eps)
            checks.append(
                FaceCheck(
                    f"face({i},{eps})=cone(face({i - 1},{eps}))",
                    got == expected,
                )
            )
    return checks


def endpoint_ratio(c: CubicalFraction) -> UnitOneClass:
    """The map f/g -> f(0)g(1)/(g(0)f(1)) on arity-1 classes.

    Invariant under scaling either representative by a unit; lands in the
    units congruent to 1 modulo the ideal.
    """
    if c.arity != 1:
        raise PreconditionFailed("endpoint ratio is defined on arity-1 classes")
    value = (c.num.value_at_all_zero() * c.den.value_at_all_one()) / (
        c.den.value_at_all_zero() * c.num.value_at_all_one()
    )
    try:
        return UnitOneClass(value, c.ctx.ideal)
    except PreconditionFailed as exc:
        raise InternalInvariantViolation(
            f"endpoint ratio {value} escaped (1+I)^x: {exc}"
        ) from exc


def unit_section(u: UnitOneClass, ctx: CubeContext) -> CubicalFraction:
    """The class of 1 + (u - 1)(1 - t); a section of the endpoint ratio."""
    drop = u.elem - LocalElem.one(u.elem.field)
    coeffs = {(0,): LocalElem.one(u.elem.field)}
    if not drop.is_zero():
        coeffs[(1,)] = drop
    return CubicalFraction(AdmissiblePoly(ctx, 1, coeffs, reduce=False))


def exactness_witness(f: CubicalFraction, g: CubicalFraction) -> CubicalFraction:
    """Arity-2 witness for two arity-1 classes with equal endpoint ratio.

    The cone is applied to the cross-multiplied polynomial representatives
    F = f.num * g.den and G = f.den * g.num (which have equal values at
    t = 0 precisely when the endpoint ratios agree), so both postconditions
    hold exactly: the witness lies in the normalized subcomplex and its
    first 0-face is f/g.
    """
    if f.arity != 1 or g.arity != 1:
        raise PreconditionFailed("witness construction needs arity-1 classes")
    if endpoint_ratio(f) != endpoint_ratio(g):
        raise PreconditionFailed("endpoint ratios differ; no witness exists")
    big_num = f.num * g.den
    big_den = f.den * g.num
    witness = CubicalFraction(cone(big_num), cone(big_den))
    quotient = f / g
    if not witness.in_normalized():
        raise InternalInvariantViolation("witness escaped the normalized subcomplex")
    if witness.face(1, FACE_ZERO) != quotient:
        raise InternalInvariantViolation("witness face does not recover the quotient")
    return witness


def contraction_witness(c: CubicalFraction) -> CubicalFraction:
    """Contract a normalized cycle of arity n > 1 with trivial first 0-face.

    Returns H(c) and verifies face(H(c), 1, 0) = c, which exhibits the
    vanishing of the class of c in homology.
    """
    if c.arity <= 1:
        raise PreconditionFailed("contraction needs arity > 1")
    if not c.in_normalized():
        raise PreconditionFailed("class is not in the normalized subcomplex")
    if not c.face(1, FACE_ZERO).is_unit_class():
        raise PreconditionFailed("first 0-face is not the unit class")
    witness = homotopy(c)
    if witness.face(1, FACE_ZERO) != c:
        raise InternalInvariantViolation("contraction face does not recover the cycle")
    return witness


# ---------------------------------------------------------------------------
# Seedable generators for the identity suites
# ---------------------------------------------------------------------------

def ratio_matched_pair(ctx: CubeContext, rng, *, factors: int = 2):
    """Two arity-1 polynomial classes with equal endpoint ratio.

    Builds g = f * h where h = 1 + sum b_nu (1-t)^nu has h(0) = h(1): the
    b_nu are drawn from I^m (m the top index) and sum to zero.
    """
    f = CubicalFraction(random_admissible(ctx, 1, rng))
    F = ctx.field
    e = ctx.ideal.e
    m = rng.randrange(2, 2 + factors)
    coeffs = {(0,): LocalElem.one(F)}
    total = LocalElem.zero(F)
    for nu in range(1, m):
        b = LocalElem.x_pow(F, e * m + rng.randrange(0, 2)) * random_unit(ctx, rng)
        coeffs[(nu,)] = b
        total = total + b
    coeffs[(m,)] = -total
    h = AdmissiblePoly(ctx, 1, coeffs).require_admissible()
    g = CubicalFraction(f.num * h)
    return f, g


def _vanishing_factor_coeffs(kill_zero_face: bool) -> dict[int, int]:
    # (1-t) - (1-t)^2 vanishes at both t=0 and t=1; (1-t)^2 only at t=1
    if kill_zero_face:
        return {1: 1, 2: -1}
    return {2: 1}


def normalized_subcomplex_element(
    ctx: CubeContext, arity: int, rng, *, kernel: bool = True
) -> CubicalFraction:
    """A nontrivial class whose killed faces match strictly.

    Returns f/g with f = g + delta, where delta vanishes on every face the
    normalized subcomplex kills (and, when ``kernel`` is true, on the first
    0-face as well, giving an element of the kernel of the differential).
    Strict face matching makes the homotopy of the class land in the
    normalized subcomplex exactly.
    """
    if arity < 2:
        raise PreconditionFailed("need arity >= 2")
    F = ctx.field
    g = random_admissible(ctx, arity, rng)
    delta = {(): LocalElem.one(F)}
    for direction in range(arity):
        factor = _vanishing_factor_coeffs(kernel or direction > 0)
        nxt = {}
        for lam, c in delta.items():
            for k, n in factor.items():
                key = lam + (k,)
                nxt[key] = c * LocalElem.from_int(F, n)
        delta = nxt
    scale = LocalElem.x_pow(F, 2 * ctx.ideal.e) * random_unit(ctx, rng)
    delta_poly = AdmissiblePoly(ctx, arity, {lam: c * scale for lam, c in delta.items()})
    f = AdmissiblePoly(ctx, arity, _coeff_sum(g.coeffs, delta_poly.coeffs)).require_admissible()
    return CubicalFraction(f, g)


def _coeff_sum(a: dict, b: dict) -> dict:
    out = dict(a)
    for lam, c in b.items():
        out[lam] = out[lam] + c if lam in out else c
    return out
