"""Zero-cycles with modulus on the projective line.

Rational equivalence with modulus D = sum n_i x_i identifies two cycles
(supported away from D) exactly when they have the same degree and the
same residue class: writing a degree-0 difference as div(h), the images of
h in the local quotient rings k[x]/pi_i^(n_i) (and k[u]/u^(n_inf) at
infinity, u = 1/x), taken together modulo the diagonal k^x, form a
complete invariant.  Every degree-0 divisor on the line is principal, so
the invariant is computable by elementary arithmetic; a brute-force
union-find oracle over small finite fields double-checks it.

The module also carries the arity-1 relative-cycle presentations used by
the norm/graph correspondence: a curve in the (x, y)-plane cut out by

    f = (1-y)^m + sum_nu a_nu(x) (1-y)^(m-nu),

with coefficient valuations nu * n_i along D, has boundary (fiber over
y = 0 minus fiber over y = infinity) equal to the divisor of the norm
f(0) = 1 + sum a_nu.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import univar as uv
from .errors import (
    NoBasePoint,
    NotAdmissible,
    NotInG,
    PreconditionFailed,
    ResourceBound,
    ZeroFunction,
)
from .fields import check_same_field


# ---------------------------------------------------------------------------
# Closed points and divisors
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ClosedPoint:
    """A closed point of the projective line.

    ``minpoly`` is the coefficient tuple of a monic irreducible polynomial
    for a finite point; the empty tuple denotes the point at infinity.
    """

    minpoly: tuple

    @classmethod
    def infinity(cls) -> "ClosedPoint":
        return cls(())

    @classmethod
    def finite(cls, field, coeffs) -> "ClosedPoint":
        coeffs = uv.trim(field, list(coeffs))
        if uv.deg(coeffs) < 1:
            raise ValueError("a finite point needs a nonconstant minimal polynomial")
        return cls(tuple(uv.monic(field, coeffs)))

    @classmethod
    def rational(cls, field, c) -> "ClosedPoint":
        return cls.finite(field, [field.neg(c), field.one])

    @property
    def is_infinity(self) -> bool:
        return not self.minpoly

    @property
    def degree(self) -> int:
        return 1 if self.is_infinity else len(self.minpoly) - 1

    def to_str(self, field) -> str:
        if self.is_infinity:
            return "inf"
        return uv.to_str(field, list(self.minpoly))


class EffDivisor:
    """Effective divisor: finitely many closed points with multiplicities."""

    __slots__ = ("field", "mults")

    def __init__(self, field, mults: dict):
        for point, n in mults.items():
            if n < 1:
                raise ValueError("effective divisor needs positive multiplicities")
        self.field = field
        self.mults = dict(mults)

    def points(self) -> list[ClosedPoint]:
        return sorted(self.mults)

    def degree(self) -> int:
        return sum(p.degree * n for p, n in self.mults.items())

    def contains(self, point: ClosedPoint) -> bool:
        return point in self.mults

    def finite_part_poly(self) -> list:
        """Product of pi_i^(n_i) over the finite points of the divisor."""
        out = uv.one(self.field)
        for p, n in self.mults.items():
            if not p.is_infinity:
                for _ in range(n):
                    out = uv.mul(self.field, out, list(p.minpoly))
        return out

    def to_str(self) -> str:
        return " + ".join(
            f"{n}*[{p.to_str(self.field)}]" for p, n in sorted(self.mults.items())
        )


def parse_divisor(text: str, field) -> EffDivisor:
    """Parse divisor strings like ``2*[0] + 1*[inf]`` or ``[x^2+1]``."""
    from .poly import parse_poly

    chunks, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "+" and depth == 0:
            chunks.append("".join(current))
            current = []
        else:
            current.append(ch)
    chunks.append("".join(current))

    mults: dict = {}
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            continue
        if "*" in chunk:
            n_str, _, body = chunk.partition("*")
            n = int(n_str.strip())
        else:
            n, body = 1, chunk
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"divisor term {chunk!r} is not of the form n*[point]")
        inner = body[1:-1].strip()
        if inner in ("inf", "infty", "oo"):
            point = ClosedPoint.infinity()
        else:
            poly = parse_poly(inner, field, ["x"])
            dense = _sparse_to_dense(field, poly)
            if uv.deg(dense) <= 0:
                value = dense[0] if dense else field.zero
                point = ClosedPoint.rational(field, value)
            else:
                point = ClosedPoint.finite(field, dense)
        mults[point] = mults.get(point, 0) + n
    return EffDivisor(field, mults)


def _sparse_to_dense(field, poly) -> list:
    out = [field.zero] * (poly.degree_in(0) + 1)
    for e, c in poly.terms.items():
        out[e[0]] = c
    return uv.trim(field, out)


# Zero-cycles are plain dicts ClosedPoint -> int with zero entries dropped.

def cycle_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for p, n in b.items():
        out[p] = out.get(p, 0) + n
        if not out[p]:
            del out[p]
    return out


def cycle_neg(a: dict) -> dict:
    return {p: -n for p, n in a.items()}


def cycle_degree(a: dict) -> int:
    return sum(p.degree * n for p, n in a.items())


def cycle_key(a: dict) -> tuple:
    return tuple(sorted((p.minpoly, n) for p, n in a.items()))


def cycle_to_str(a: dict, field) -> str:
    if not a:
        return "0"
    return " + ".join(f"{n}*[{p.to_str(field)}]" for p, n in sorted(a.items()))


# ---------------------------------------------------------------------------
# Rational functions on the line
# ---------------------------------------------------------------------------

class RatFunc:
    """Nonzero-or-zero rational function in x, reduced, with monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None, *, reduce=True):
        num = uv.trim(field, list(num))
        den = uv.one(field) if den is None else uv.trim(field, list(den))
        if uv.is_zero(den):
            raise ZeroDivisionError("denominator is zero")
        if reduce:
            if uv.is_zero(num):
                den = uv.one(field)
            else:
                g = uv.gcd(field, num, den)
                if uv.deg(g) > 0:
                    num, _ = uv.divmod_poly(field, num, g)
                    den, _ = uv.divmod_poly(field, den, g)
                c = field.inv(den[-1])
                num = uv.scalar_mul(field, c, num)
                den = uv.scalar_mul(field, c, den)
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, field) -> "RatFunc":
        return cls(field, [], reduce=False)

    @classmethod
    def one(cls, field) -> "RatFunc":
        return cls(field, uv.one(field), reduce=False)

    @classmethod
    def from_int(cls, field, n: int) -> "RatFunc":
        return cls(field, uv.const(field, field.from_int(n)), reduce=False)

    def is_zero(self) -> bool:
        return uv.is_zero(self.num)

    def is_one(self) -> bool:
        return self.num == uv.one(self.field) and self.den == uv.one(self.field)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        check_same_field(self.field, other.field)
        F = self.field
        num = uv.add(F, uv.mul(F, self.num, other.den), uv.mul(F, other.num, self.den))
        return RatFunc(F, num, uv.mul(F, self.den, other.den))

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        return RatFunc(self.field, uv.neg(self.field, self.num), self.den, reduce=False)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        check_same_field(self.field, other.field)
        F = self.field
        return RatFunc(F, uv.mul(F, self.num, other.num), uv.mul(F, self.den, other.den))

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        F = self.field
        return RatFunc(F, uv.mul(F, self.num, other.den), uv.mul(F, self.den, other.num))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.field, tuple(self.num), tuple(self.den)))

    def valuation_at(self, point: ClosedPoint) -> int:
        """Order of vanishing at a closed point (negative at poles)."""
        if self.is_zero():
            raise ZeroFunction("the zero function has no valuation")
        F = self.field
        if point.is_infinity:
            return uv.deg(self.den) - uv.deg(self.num)
        pi = list(point.minpoly)
        return _mult_of(F, self.num, pi) - _mult_of(F, self.den, pi)

    def to_str(self) -> str:
        F = self.field
        num = uv.to_str(F, self.num)
        if self.den == uv.one(F):
            return num
        return f"({num})/({uv.to_str(F, self.den)})"

    def __repr__(self):
        return f"RatFunc({self.to_str()})"


def _mult_of(F, poly, pi) -> int:
    count = 0
    while True:
        q, r = uv.divmod_poly(F, poly, pi)
        if r:
            return count
        poly = q
        count += 1


def principal_divisor(g: RatFunc) -> dict:
    """The divisor of zeros and poles of g on the projective line.

    Total degree is always 0 (the point at infinity balances the finite
    part).  Over Q only linear factors are extracted; a nonlinear remainder
    raises, matching the restriction of rational points to linear ones.
    """
    if g.is_zero():
        raise ZeroFunction("the zero function has no divisor")
    F = g.field
    out: dict = {}
    for poly, sign in ((g.num, 1), (g.den, -1)):
        if uv.deg(poly) == 0:
            continue
        for coeffs, mult in _factor(F, poly).items():
            p = ClosedPoint(coeffs)
            out[p] = out.get(p, 0) + sign * mult
            if not out[p]:
                del out[p]
    inf_mult = uv.deg(g.den) - uv.deg(g.num)
    if inf_mult:
        out[ClosedPoint.infinity()] = out.get(ClosedPoint.infinity(), 0) + inf_mult
        if not out[ClosedPoint.infinity()]:
            del out[ClosedPoint.infinity()]
    return out


def _factor(F, poly) -> dict:
    if hasattr(F, "p"):
        return uv.factor_monic(F, poly)
    return _factor_rational(F, poly)


def _factor_rational(F, poly) -> dict:
    """Linear factorization over Q via rational roots; nonlinear rest raises."""
    out: dict = {}
    poly = uv.monic(F, poly)
    progress = True
    while uv.deg(poly) > 0 and progress:
        progress = False
        for root in _rational_root_candidates(poly):
            lin = [F.neg(root), F.one]
            q, r = uv.divmod_poly(F, poly, lin)
            if not r:
                key = tuple(lin)
                out[key] = out.get(key, 0) + 1
                poly = q
                progress = True
                break
    if uv.deg(poly) > 0:
        raise PreconditionFailed(
            "over Q only functions with linear-split divisors are supported"
        )
    return out


def _rational_root_candidates(poly):
    from fractions import Fraction

    scale = 1
    for c in poly:
        scale = scale * c.denominator // _gcd_int(scale, c.denominator)
    ints = [int(c * scale) for c in poly]
    lead, const = ints[-1], ints[0]
    if const == 0:
        yield Fraction(0)
        return
    for p in _int_divisors(abs(const)):
        for q in _int_divisors(abs(lead)):
            yield Fraction(p, q)
            yield Fraction(-p, q)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _int_divisors(n: int):
    for d in range(1, n + 1):
        if n % d == 0:
            yield d


# ---------------------------------------------------------------------------
# The relation group G and the residue-class invariant
# ---------------------------------------------------------------------------

def in_G(g: RatFunc, D: EffDivisor) -> bool:
    """Is g a unit congruent to 1 along every point of D (including inf)?"""
    if g.is_zero():
        raise ZeroFunction("the zero function is not in G")
    one = RatFunc.one(g.field)
    diff = g - one
    if diff.is_zero():
        return True
    for point, n in D.mults.items():
        if g.valuation_at(point) != 0:
            return False
        if diff.valuation_at(point) < n:
            return False
    return True


class ResidueClass:
    """Units of the local quotient rings along D, modulo the diagonal k^x.

    Components are stored per point in sorted point order, each reduced
    mod pi^n (mod u^n at infinity); the whole tuple is scaled so that the
    first component's lowest nonzero coefficient is 1.
    """

    __slots__ = ("field", "components")

    def __init__(self, field, components: list[tuple[ClosedPoint, tuple]]):
        self.field = field
        self.components = self._canonical(field, components)

    @staticmethod
    def _canonical(field, components):
        components = sorted(components, key=lambda pc: pc[0])
        if not components:
            return ()
        first = components[0][1]
        pivot = next(c for c in first if not field.is_zero(c))
        scale = field.inv(pivot)
        return tuple(
            (p, tuple(field.mul(scale, c) for c in comp)) for p, comp in components
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResidueClass):
            return NotImplemented
        return self.field == other.field and self.components == other.components

    def __hash__(self):
        return hash((self.field, self.components))

    def is_trivial(self) -> bool:
        one = uv.one(self.field)
        return all(uv.trim(self.field, list(comp)) == one for _, comp in self.components)

    def to_json(self) -> list:
        return [
            [p.to_str(self.field), uv.to_str(self.field, uv.trim(self.field, list(comp)))]
            for p, comp in self.components
        ]

    def __repr__(self):
        body = ", ".join(f"{p.to_str(self.field)}: {uv.to_str(self.field, list(c))}" for p, c in self.components)
        return f"ResidueClass({body})"


def residue_class(h: RatFunc, D: EffDivisor) -> ResidueClass:
    """Componentwise image of h in the local quotient rings of D."""
    F = h.field
    components = []
    for point, n in D.mults.items():
        if point.is_infinity:
            if uv.deg(h.num) != uv.deg(h.den):
                raise PreconditionFailed("function has a zero or pole at infinity")
            modulus = uv.x_power(F, n)
            num = uv.mod(F, uv.reverse(F, h.num), modulus)
            den = uv.mod(F, uv.reverse(F, h.den), modulus)
        else:
            modulus = uv.one(F)
            for _ in range(n):
                modulus = uv.mul(F, modulus, list(point.minpoly))
            num = uv.mod(F, h.num, modulus)
            den = uv.mod(F, h.den, modulus)
        comp = uv.mod(F, uv.mul(F, num, uv.inv_mod(F, den, modulus)), modulus)
        width = len(modulus) - 1
        padded = tuple(comp[i] if i < len(comp) else F.zero for i in range(width))
        components.append((point, padded))
    return ResidueClass(F, components)


@dataclass(frozen=True)
class ChowClass:
    degree: int
    residue: ResidueClass

    def to_json(self) -> dict:
        return {"degree": self.degree, "residue": self.residue.to_json()}


def canonical_function(alpha: dict, base: ClosedPoint, field) -> RatFunc:
    """The monic function h with div(h) = alpha - deg(alpha) * [base]."""
    F = field
    num, den = uv.one(F), uv.one(F)
    for point, n in sorted(alpha.items()):
        if point.is_infinity:
            continue
        piece = list(point.minpoly)
        for _ in range(abs(n)):
            if n > 0:
                num = uv.mul(F, num, piece)
            else:
                den = uv.mul(F, den, piece)
    total = cycle_degree(alpha)
    if not base.is_infinity:
        shift = list(base.minpoly)
        for _ in range(abs(total)):
            if total > 0:
                den = uv.mul(F, den, shift)
            else:
                num = uv.mul(F, num, shift)
    return RatFunc(F, num, den)


def chow_class(alpha: dict, D: EffDivisor, base: ClosedPoint | None = None) -> ChowClass:
    """The complete invariant (degree, residue class) of a zero-cycle.

    The base point must have degree 1 and avoid D; it defaults to infinity
    when infinity is off D, else to a rational point off D.
    """
    F = D.field
    for point in alpha:
        if D.contains(point):
            raise PreconditionFailed(
                f"cycle meets the modulus at {point.to_str(F)}"
            )
    base = _resolve_base(D, base)
    h = canonical_function(alpha, base, F)
    return ChowClass(cycle_degree(alpha), residue_class(h, D))


def _resolve_base(D: EffDivisor, base: ClosedPoint | None) -> ClosedPoint:
    if base is not None:
        if base.degree != 1:
            raise NoBasePoint("base point must have degree 1")
        if D.contains(base):
            raise NoBasePoint("base point meets the modulus")
        return base
    inf = ClosedPoint.infinity()
    if not D.contains(inf):
        return inf
    F = D.field
    candidates = F.elements() if hasattr(F, "p") else range(0, 3)
    for c in candidates:
        p = ClosedPoint.rational(F, F.from_int(c))
        if not D.contains(p):
            return p
    raise NoBasePoint("no degree-1 point available off the modulus")


def equal_in_chow(alpha: dict, beta: dict, D: EffDivisor, base: ClosedPoint | None = None) -> bool:
    ca = chow_class(alpha, D, base)
    cb = chow_class(beta, D, base)
    return ca.degree == cb.degree and ca.residue == cb.residue


def group_order(D: EffDivisor, q: int) -> int:
    """Order of the degree-0 part: prod q^(d_i (n_i - 1)) (q^d_i - 1) / (q - 1)."""
    order = 1
    for point, n in D.mults.items():
        d = point.degree
        order *= q ** (d * (n - 1)) * (q**d - 1)
    return order // (q - 1)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        elif self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.parent[ry] = rx

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass
class OracleResult:
    order: int
    expected_order: int
    match: bool
    separated: bool
    class_reps: list
    relation_count: int
    cycle_count: int

    def to_json(self, field) -> dict:
        return {
            "oracle_order": self.order,
            "order": self.expected_order,
            "match": self.match,
            "separated": self.separated,
            "relations": self.relation_count,
            "cycles": self.cycle_count,
            "sample_classes": [
                {"cycle": cycle_to_str(rep, field), "class": cls.to_json()}
                for rep, cls in self.class_reps
            ],
        }


MAX_ORACLE_Q = 9
MAX_ORACLE_DEGREE = 4


def enumerate_points(F, max_degree: int, D: EffDivisor) -> list[ClosedPoint]:
    """Closed points of degree <= max_degree avoiding the modulus."""
    points = []
    inf = ClosedPoint.infinity()
    if not D.contains(inf):
        points.append(inf)
    for pi in uv.monic_irreducibles(F, max_degree):
        p = ClosedPoint(tuple(pi))
        if not D.contains(p):
            points.append(p)
    return sorted(points)


def _effective_divisors(points, degree: int):
    """All effective cycles of exact degree on the given points."""
    if degree == 0:
        yield {}
        return
    for i, p in enumerate(points):
        if p.degree > degree:
            continue
        for rest in _effective_divisors(points[i:], degree - p.degree):
            out = dict(rest)
            out[p] = out.get(p, 0) + 1
            yield out


def enumerate_degree0_cycles(points, max_degree: int) -> list[dict]:
    """Degree-0 cycles A - B with disjoint supports, deg A = deg B <= bound."""
    seen: dict = {}
    for d in range(max_degree + 1):
        effectives = list(_effective_divisors(points, d))
        for pos in effectives:
            for neg in effectives:
                if any(p in pos for p in neg):
                    continue
                cycle = cycle_add(pos, cycle_neg(neg))
                seen.setdefault(cycle_key(cycle), cycle)
    return [seen[k] for k in sorted(seen)]


def relation_divisors(F, D: EffDivisor, points, max_degree: int, height: int) -> list[dict]:
    """Divisors of a spanning family of relation functions g = (b + M r)/b.

    b runs over monic polynomials of degree <= height coprime to the finite
    part M of the modulus; r over polynomials bounded so that the numerator
    keeps the required contact at infinity when infinity lies on D.  Only
    relations supported on the enumerated points are returned.
    """
    point_set = set(points)
    M = D.finite_part_poly()
    inf_mult = D.mults.get(ClosedPoint.infinity(), 0)
    out: dict = {}
    for b_deg in range(height + 1):
        for b in uv.monic_polys(F, b_deg):
            if uv.deg(uv.gcd(F, b, M)) > 0:
                continue
            r_max = b_deg - inf_mult - uv.deg(M) if inf_mult else height - uv.deg(M) + 1
            if r_max < 0:
                continue
            for r in uv.all_polys(F, r_max):
                if uv.is_zero(r):
                    continue
                num = uv.add(F, b, uv.mul(F, M, r))
                if uv.is_zero(num) or uv.deg(num) == 0 and b_deg == 0:
                    continue
                g = RatFunc(F, num, b)
                if g.is_one() or g.num == g.den:
                    continue
                if inf_mult and uv.deg(g.num) != uv.deg(g.den):
                    continue
                try:
                    div = principal_divisor(g)
                except PreconditionFailed:
                    continue
                if not div:
                    continue
                if any(p not in point_set for p in div):
                    continue
                out.setdefault(cycle_key(div), div)
    return [out[k] for k in sorted(out)]


def brute_force_chow(
    D: EffDivisor,
    q: int,
    degree_bound: int = 3,
    *,
    height: int | None = None,
) -> OracleResult:
    """Quotient the enumerated degree-0 cycles by the relation closure.

    Union-find merges alpha with alpha + div(g) whenever both lie in the
    enumeration window; the canonical invariant is then cross-checked for
    consistency on each class and injectivity across classes.
    """
    F = D.field
    if not hasattr(F, "p"):
        raise ResourceBound("the brute-force oracle runs over prime fields only")
    if q != F.p:
        raise ValueError(f"field size mismatch: divisor over GF({F.p}), q={q}")
    if q > MAX_ORACLE_Q:
        raise ResourceBound(f"oracle bound: q <= {MAX_ORACLE_Q}")
    if degree_bound > MAX_ORACLE_DEGREE:
        raise ResourceBound(f"oracle bound: degree_bound <= {MAX_ORACLE_DEGREE}")
    if height is None:
        height = degree_bound

    points = enumerate_points(F, degree_bound, D)
    cycles = enumerate_degree0_cycles(points, degree_bound)
    index = {cycle_key(c): c for c in cycles}
    uf = UnionFind(index.keys())
    relations = relation_divisors(F, D, points, degree_bound, height)
    for rel in relations:
        for key, cycle in index.items():
            moved = cycle_add(cycle, rel)
            mkey = cycle_key(moved)
            if mkey in index:
                uf.union(key, mkey)

    classes = uf.classes()
    class_of: dict = {}
    separated = True
    reps = []
    for root, members in sorted(classes.items()):
        invariants = {chow_class(index[k], D) for k in members}
        if len(invariants) != 1:
            separated = False
        inv = chow_class(index[root], D)
        if inv in class_of:
            separated = False
        class_of[inv] = root
        reps.append((index[min(members)], inv))

    expected = group_order(D, q)
    return OracleResult(
        order=len(classes),
        expected_order=expected,
        match=len(classes) == expected,
        separated=separated,
        class_reps=reps,
        relation_count=len(relations),
        cycle_count=len(cycles),
    )


# ---------------------------------------------------------------------------
# Arity-1 relative cycles: norm and graph
# ---------------------------------------------------------------------------

class CurvePoly:
    """A curve presentation (1-y)^m + sum a_nu(x) (1-y)^(m-nu), a_0 = 1."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: list[RatFunc]):
        if not coeffs or not coeffs[0].is_one():
            raise PreconditionFailed("leading coefficient must be 1")
        self.field = field
        self.coeffs = list(coeffs)

    @property
    def y_degree(self) -> int:
        return len(self.coeffs) - 1

    def check_modulus_shape(self, D: EffDivisor) -> None:
        """Coefficient valuations nu * n_i at every point of D."""
        for nu, a in enumerate(self.coeffs[1:], start=1):
            if a.is_zero():
                continue
            for point, n in D.mults.items():
                if a.valuation_at(point) < nu * n:
                    raise NotAdmissible(
                        f"coefficient {nu} has valuation "
                        f"{a.valuation_at(point)} < {nu * n} at {point.to_str(self.field)}"
                    )


def norm_of_coordinate(f: CurvePoly, D: EffDivisor) -> RatFunc:
    """The norm of the y-coordinate along the curve: f(y=0) = 1 + sum a_nu."""
    f.check_modulus_shape(D)
    total = RatFunc.one(f.field)
    for a in f.coeffs[1:]:
        total = total + a
    if not in_G(total, D):
        raise NotAdmissible("norm escaped G; modulus shape violated")
    return total


def graph_cycle(g: RatFunc, D: EffDivisor) -> CurvePoly:
    """The curve (1-y) - (1-g) = g - y cut out by the graph of g."""
    if g.is_zero():
        raise ZeroFunction("the zero function has no graph cycle")
    if not in_G(g, D):
        raise NotInG("function is not congruent to 1 along the modulus")
    f = CurvePoly(g.field, [RatFunc.one(g.field), g - RatFunc.one(g.field)])
    f.check_modulus_shape(D)
    return f


def boundary_divisor(f: CurvePoly) -> dict:
    """The cycle (fiber over y=0) - (fiber over y=infinity) of div(f).

    Computed chart by chart from the content-cleared bivariate polynomial:
    clearing denominators and content leaves no vertical components, so
    face multiplicities are orders of the substituted one-variable
    polynomials; the same bookkeeping in the u = 1/x chart covers the point
    at infinity.
    """
    F = f.field
    # clear denominators: B * f has polynomial coefficients b_nu
    B = uv.one(F)
    for a in f.coeffs:
        if a.is_zero():
            continue
        g = uv.gcd(F, B, a.den)
        extra, _ = uv.divmod_poly(F, a.den, g)
        B = uv.mul(F, B, extra)
    bs = []
    for a in f.coeffs:
        if a.is_zero():
            bs.append([])
            continue
        q, r = uv.divmod_poly(F, uv.mul(F, a.num, B), a.den)
        assert not r, "lcm denominator failed to clear"
        bs.append(q)
    # remove content (gcd over all coefficients)
    content = []
    for b in bs:
        content = uv.gcd(F, content, b)
    bs = [uv.divmod_poly(F, b, content)[0] if b else [] for b in bs]

    # finite parts of the two fibers
    at_zero = []
    for b in bs:
        at_zero = uv.add(F, at_zero, b)
    if uv.is_zero(at_zero):
        raise ZeroFunction("curve contains the fiber over y = 0")
    lead = bs[0]  # fiber over y = infinity: lowest w-coefficient, w = 1/(1-y)

    out: dict = {}
    for poly, sign in ((at_zero, 1), (lead, -1)):
        if uv.deg(poly) >= 1:
            for coeffs, mult in _factor(F, poly).items():
                p = ClosedPoint(coeffs)
                out[p] = out.get(p, 0) + sign * mult
                if not out[p]:
                    del out[p]

    # the u = 1/x chart: reversal by the maximal x-degree is content-free
    h = max(uv.deg(b) for b in bs)
    rev_at_zero = []
    for b in bs:
        if uv.is_zero(b):
            continue
        shifted = uv.mul(F, uv.reverse(F, b), uv.x_power(F, h - uv.deg(b)))
        rev_at_zero = uv.add(F, rev_at_zero, shifted)
    inf_zero_mult = uv.x_valuation(F, rev_at_zero)
    inf_zero_mult = 0 if inf_zero_mult is None else inf_zero_mult
    inf_inf_mult = h - uv.deg(bs[0])
    inf_total = inf_zero_mult - inf_inf_mult
    if inf_total:
        inf = ClosedPoint.infinity()
        out[inf] = out.get(inf, 0) + inf_total
        if not out[inf]:
            del out[inf]
    return out


def random_curve(D: EffDivisor, rng, *, max_y_degree: int = 3, pole_pool=None) -> CurvePoly:
    """Random curve presentation satisfying the modulus shape along D."""
    F = D.field
    M = D.finite_part_poly()
    inf_mult = D.mults.get(ClosedPoint.infinity(), 0)
    if pole_pool is None:
        pole_pool = _default_pole_pool(F, D)
    m = rng.randrange(1, max_y_degree + 1)
    coeffs = [RatFunc.one(F)]
    for nu in range(1, m + 1):
        if rng.random() < 0.25 and nu < m:
            coeffs.append(RatFunc.zero(F))
            continue
        # numerator multiple of M^nu, denominator off |D|
        base = uv.one(F)
        for _ in range(nu):
            base = uv.mul(F, base, M)
        extra = _random_poly(F, rng, rng.randrange(0, 3))
        num = uv.mul(F, base, extra) if not uv.is_zero(extra) else []
        den = rng.choice(pole_pool)
        if uv.is_zero(num):
            coeffs.append(RatFunc.zero(F))
            continue
        a = RatFunc(F, num, den)
        if inf_mult:
            # enforce contact at infinity: raise denominator degree as needed
            deficit = nu * inf_mult - (uv.deg(a.den) - uv.deg(a.num))
            if deficit > 0:
                filler = _coprime_power(F, pole_pool, deficit)
                a = RatFunc(F, a.num, uv.mul(F, a.den, filler))
        coeffs.append(a)
    curve = CurvePoly(F, coeffs)
    curve.check_modulus_shape(D)
    return curve


def _default_pole_pool(F, D: EffDivisor) -> list:
    pool = [uv.one(F)]
    values = range(F.p) if hasattr(F, "p") else range(-2, 3)
    for c in values:
        lin = [F.neg(F.from_int(c)), F.one]
        if not D.contains(ClosedPoint(tuple(lin))):
            pool.append(lin)
            pool.append(uv.mul(F, lin, lin))
    return pool


def _coprime_power(F, pole_pool, degree: int) -> list:
    for cand in pole_pool:
        if uv.deg(cand) == 1:
            out = uv.one(F)
            for _ in range(degree):
                out = uv.mul(F, out, cand)
            return out
    return uv.one(F)


def _random_poly(F, rng, degree: int) -> list:
    if hasattr(F, "p"):
        coeffs = [F.from_int(rng.randrange(F.p)) for _ in range(degree)]
        coeffs.append(F.from_int(rng.randrange(1, F.p)))
    else:
        coeffs = [F.from_int(rng.randrange(-3, 4)) for _ in range(degree)]
        coeffs.append(F.from_int(rng.choice([n for n in range(-3, 4) if n])))
    return uv.trim(F, coeffs)
