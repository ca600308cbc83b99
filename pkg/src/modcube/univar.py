"""Dense univariate polynomial kernel over an exact field.

Polynomials are coefficient lists in ascending degree with a nonzero last
entry; ``[]`` is the zero polynomial (same convention as the classic
GF(p)[x] coefficient-list representation).  These helpers back both the
local ring at the origin and the rational-function layer on the projective
line, so they stay free of any ring-specific policy.
"""

from __future__ import annotations

from itertools import product

from .errors import ZeroFunction

Poly = list  # list of field scalars, ascending degree, no trailing zeros


def trim(F, cs) -> Poly:
    while cs and F.is_zero(cs[-1]):
        cs.pop()
    return cs


def zero() -> Poly:
    return []


def const(F, c) -> Poly:
    return [] if F.is_zero(c) else [c]


def one(F) -> Poly:
    return [F.one]


def x_power(F, k: int) -> Poly:
    return [F.zero] * k + [F.one]


def is_zero(cs: Poly) -> bool:
    return not cs


def deg(cs: Poly) -> int:
    """Degree, with deg(0) = -1."""
    return len(cs) - 1


def add(F, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else F.zero
        bi = b[i] if i < len(b) else F.zero
        out.append(F.add(ai, bi))
    return trim(F, out)


def sub(F, a: Poly, b: Poly) -> Poly:
    return add(F, a, neg(F, b))


def neg(F, a: Poly) -> Poly:
    return [F.neg(c) for c in a]


def mul(F, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if F.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return trim(F, out)


def scalar_mul(F, c, a: Poly) -> Poly:
    if F.is_zero(c):
        return []
    return trim(F, [F.mul(c, ai) for ai in a])


def divmod_poly(F, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = list(a)
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] = F.sub(a[k + i], F.mul(c, bi))
        trim(F, a)
        if not a:
            break
    return trim(F, q), a


def mod(F, a: Poly, b: Poly) -> Poly:
    return divmod_poly(F, a, b)[1]


def gcd(F, a: Poly, b: Poly) -> Poly:
    """Monic gcd (returns zero poly only when both inputs are zero)."""
    while b:
        a, b = b, mod(F, a, b)
    if a:
        a = scalar_mul(F, F.inv(a[-1]), a)
    return a


def xgcd(F, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = one(F), zero()
    t0, t1 = zero(), one(F)
    while r1:
        q, r = divmod_poly(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if r0:
        c = F.inv(r0[-1])
        r0 = scalar_mul(F, c, r0)
        s0 = scalar_mul(F, c, s0)
        t0 = scalar_mul(F, c, t0)
    return r0, s0, t0


def inv_mod(F, a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m; raises when gcd(a, m) != 1."""
    g, s, _ = xgcd(F, a, m)
    if deg(g) != 0:
        raise ZeroDivisionError("element not invertible in quotient ring")
    return mod(F, s, m)


def pow_mod(F, a: Poly, n: int, m: Poly) -> Poly:
    result = mod(F, one(F), m)
    base = mod(F, a, m)
    while n > 0:
        if n & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        n >>= 1
    return result


def evaluate(F, a: Poly, v):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, v), c)
    return acc


def derivative(F, a: Poly) -> Poly:
    out = []
    for i in range(1, len(a)):
        out.append(F.mul(F.from_int(i), a[i]))
    return trim(F, out)


def monic(F, a: Poly) -> Poly:
    if not a:
        raise ZeroFunction("zero polynomial cannot be made monic")
    return scalar_mul(F, F.inv(a[-1]), a)


def reverse(F, a: Poly, n: int | None = None) -> Poly:
    """Coefficient reversal x^n * a(1/x); n defaults to deg(a)."""
    if not a:
        return []
    if n is None:
        n = len(a) - 1
    if n < len(a) - 1:
        raise ValueError("reversal length below degree")
    out = [F.zero] * (n + 1)
    for i, c in enumerate(a):
        out[n - i] = c
    return trim(F, out)


def x_valuation(F, a: Poly) -> int | None:
    """Order of vanishing at x = 0; None means +infinity (a = 0)."""
    for i, c in enumerate(a):
        if not F.is_zero(c):
            return i
    return None


def shift_down(a: Poly, k: int) -> Poly:
    """Exact division by x^k (caller guarantees valuation >= k)."""
    return list(a[k:])


def monic_polys(F, d: int):
    """Yield all monic polynomials of degree exactly d over a finite field."""
    for tail in product(list(F.elements()), repeat=d):
        yield list(tail) + [F.one]


def all_polys(F, max_deg: int):
    """Yield every polynomial of degree <= max_deg (including zero)."""
    yield []
    els = list(F.elements())
    for d in range(max_deg + 1):
        for tail in product(els, repeat=d):
            for lead in els:
                if F.is_zero(lead):
                    continue
                yield list(tail) + [lead]


_IRRED_CACHE: dict[int, dict] = {}  # field size -> {"polys": [...], "done": max degree}


def monic_irreducibles(F, max_deg: int) -> list[Poly]:
    """Monic irreducibles of degree <= max_deg (cached incrementally per field)."""
    cache = _IRRED_CACHE.setdefault(F.p, {"polys": [], "done": 0})
    while cache["done"] < max_deg:
        d = cache["done"] + 1
        for cand in monic_polys(F, d):
            if any(2 * deg(p) <= d and not mod(F, cand, p) for p in cache["polys"]):
                continue
            cache["polys"].append(cand)
        cache["done"] = d
    return [p for p in cache["polys"] if deg(p) <= max_deg]


def factor_monic(F, a: Poly) -> dict[tuple, int]:
    """Factor a nonzero polynomial into monic irreducibles by trial division.

    Divisors are searched degree by degree; once the trial degree passes
    half the remaining degree the cofactor is itself irreducible, so the
    irreducible table only ever grows to deg(a) / 2.  Returns a map from
    coefficient tuples to multiplicities; the unit constant is dropped.
    """
    if not a:
        raise ZeroFunction("cannot factor the zero polynomial")
    a = monic(F, a)
    out: dict[tuple, int] = {}
    d = 1
    while deg(a) > 0:
        if 2 * d > deg(a):
            out[tuple(a)] = out.get(tuple(a), 0) + 1
            break
        for p in monic_irreducibles(F, d):
            if deg(p) != d:
                continue
            while deg(a) >= d:
                q, r = divmod_poly(F, a, p)
                if r:
                    break
                out[tuple(p)] = out.get(tuple(p), 0) + 1
                a = q
        d += 1
    return out


def to_str(F, a: Poly, var: str = "x") -> str:
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if F.is_zero(c):
            continue
        cs = F.to_str(c)
        if i == 0:
            parts.append(cs)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            parts.append(xpow if cs == "1" else f"{cs}*{xpow}")
    return " + ".join(parts)
