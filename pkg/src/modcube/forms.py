"""Exact symbolic calculus of logarithmic differential forms.

Forms live over a polynomial ring in a fixed variable list; the divisor
data assigns each coordinate hyperplane {x_i = 0} a multiplicity in D and
a flag for membership in the auxiliary normal-crossing divisor F.  The
wedge basis is mixed: coordinates supporting D or F contribute the symbol
dlog x_i, all others the plain dx_i, and the two never coexist for the
same variable (dx_i = x_i dlog x_i is normalized to the dlog symbol).

Coefficients are exact fractions of sparse polynomials.  Only monomial
content is cancelled (general multivariate gcd is out of scope), so
equality tests cross-multiply; membership checks require monomial-times-
unit denominators, which is all the generator families produce.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PreconditionFailed
from .poly import SparsePoly


@dataclass(frozen=True)
class FormContext:
    """Variable list plus divisor multiplicities and face flags."""

    field: object
    nvars: int
    d_mult: tuple[int, ...]
    f_flags: tuple[bool, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.f_flags is None:
            object.__setattr__(self, "f_flags", (False,) * self.nvars)
        if len(self.d_mult) != self.nvars or len(self.f_flags) != self.nvars:
            raise ValueError("divisor data must match the variable count")

    def uses_dlog(self, i: int) -> bool:
        return self.d_mult[i] > 0 or self.f_flags[i]

    def var_names(self) -> list[str]:
        return [f"x{i + 1}" for i in range(self.nvars)]

    def symbol(self, i: int) -> str:
        name = self.var_names()[i]
        return f"dlog({name})" if self.uses_dlog(i) else f"d({name})"


class Coef:
    """Exact fraction of sparse polynomials, monomial content cancelled."""

    __slots__ = ("num", "den")

    def __init__(self, num: SparsePoly, den: SparsePoly | None = None, *, normalize=True):
        if den is None:
            den = SparsePoly.one(num.field, num.arity)
        if den.is_zero():
            raise ZeroDivisionError("coefficient denominator is zero")
        if num.is_zero():
            den = SparsePoly.one(num.field, num.arity)
        elif normalize:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num: SparsePoly, den: SparsePoly):
        F = num.field
        common = tuple(
            min(num.min_degree_in(i), den.min_degree_in(i)) for i in range(num.arity)
        )
        if any(common):
            num = _shift_monomial(num, common)
            den = _shift_monomial(den, common)
        lead = den.terms[max(den.terms)]
        if lead != F.one:
            scale = F.inv(lead)
            num = num.scalar_mul(scale)
            den = den.scalar_mul(scale)
        return num, den

    @classmethod
    def zero(cls, field, arity: int) -> "Coef":
        return cls(SparsePoly.zero(field, arity), normalize=False)

    @classmethod
    def one(cls, field, arity: int) -> "Coef":
        return cls(SparsePoly.one(field, arity), normalize=False)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "Coef") -> "Coef":
        return Coef(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "Coef") -> "Coef":
        return Coef(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Coef":
        return Coef(-self.num, self.den, normalize=False)

    def __mul__(self, other: "Coef") -> "Coef":
        return Coef(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Coef") -> "Coef":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero coefficient")
        return Coef(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coef):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("Coef is unhashable; equality cross-multiplies")

    def derivative(self, i: int) -> "Coef":
        num = self.num.derivative(i) * self.den - self.num * self.den.derivative(i)
        return Coef(num, self.den * self.den)

    def substitute_zero(self, i: int) -> "Coef":
        """Restrict to {x_i = 0}; the denominator must not vanish there."""
        den0 = self.den.substitute_scalars({i: self.den.field.zero})
        if den0.is_zero():
            raise PreconditionFailed("coefficient has a pole along the restriction divisor")
        return Coef(self.num.substitute_scalars({i: self.num.field.zero}), den0)

    def is_monomial_den(self) -> bool:
        return len(self.den.terms) == 1

    def min_degrees(self) -> tuple[int, ...]:
        """Per-variable minimal exponent of the fraction (needs monomial den)."""
        if not self.is_monomial_den():
            raise PreconditionFailed("membership checks need monomial denominators")
        den_e = next(iter(self.den.terms))
        return tuple(
            self.num.min_degree_in(i) - den_e[i] for i in range(self.num.arity)
        )

    def to_str(self, names) -> str:
        if self.den == SparsePoly.one(self.num.field, self.num.arity):
            return self.num.to_str(names)
        return f"({self.num.to_str(names)})/({self.den.to_str(names)})"


def _shift_monomial(poly: SparsePoly, shift: tuple[int, ...]) -> SparsePoly:
    terms = {
        tuple(e[i] - shift[i] for i in range(len(e))): c for e, c in poly.terms.items()
    }
    return SparsePoly(poly.field, poly.arity, terms, reduce=False)


class LogForm:
    """Differential form in the mixed {dx_i, dlog x_i} wedge basis."""

    __slots__ = ("ctx", "degree", "terms")

    def __init__(self, ctx: FormContext, degree: int, terms: dict | None = None, *, reduce=True):
        self.ctx = ctx
        self.degree = degree
        terms = terms or {}
        if reduce:
            terms = {w: c for w, c in terms.items() if not c.is_zero()}
        self.terms = terms

    @classmethod
    def zero(cls, ctx: FormContext, degree: int) -> "LogForm":
        return cls(ctx, degree, {}, reduce=False)

    @classmethod
    def function(cls, ctx: FormContext, coef: Coef) -> "LogForm":
        return cls(ctx, 0, {(): coef})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LogForm") -> "LogForm":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return LogForm(self.ctx, self.degree, out)

    def __sub__(self, other: "LogForm") -> "LogForm":
        return self + (-other)

    def __neg__(self) -> "LogForm":
        return LogForm(self.ctx, self.degree, {w: -c for w, c in self.terms.items()}, reduce=False)

    def _check(self, other: "LogForm"):
        if self.ctx != other.ctx or self.degree != other.degree:
            raise ValueError("forms live in different modules")

    def coef_mul(self, c: Coef) -> "LogForm":
        return LogForm(self.ctx, self.degree, {w: v * c for w, v in self.terms.items()})

    def wedge(self, other: "LogForm") -> "LogForm":
        if self.ctx != other.ctx:
            raise ValueError("forms live over different contexts")
        out: dict = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                merged = _merge_wedge(wa, wb)
                if merged is None:
                    continue
                key, sign = merged
                c = ca * cb
                if sign < 0:
                    c = -c
                out[key] = out[key] + c if key in out else c
        return LogForm(self.ctx, self.degree + other.degree, out)

    def ext_d(self) -> "LogForm":
        """Exterior derivative; dx_i is normalized to x_i dlog x_i on divisor coords."""
        ctx = self.ctx
        F = ctx.field
        out: dict = {}
        for w, c in self.terms.items():
            for i in range(ctx.nvars):
                dc = c.derivative(i)
                if dc.is_zero():
                    continue
                if i in w:
                    continue
                if ctx.uses_dlog(i):
                    dc = dc * Coef(SparsePoly.var(F, ctx.nvars, i))
                sign = 1 if sum(1 for k in w if k < i) % 2 == 0 else -1
                key = tuple(sorted(w + (i,)))
                if sign < 0:
                    dc = -dc
                out[key] = out[key] + dc if key in out else dc
        return LogForm(ctx, self.degree + 1, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogForm):
            return NotImplemented
        if self.ctx != other.ctx or self.degree != other.degree:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = Coef.zero(self.ctx.field, self.ctx.nvars)
        return all(
            self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys
        )

    def __hash__(self):
        raise TypeError("LogForm is unhashable")

    def restrict_zero(self, i: int) -> "LogForm":
        """Reduce every coefficient modulo x_i (restriction to {x_i = 0})."""
        return LogForm(
            self.ctx, self.degree, {w: c.substitute_zero(i) for w, c in self.terms.items()}
        )

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        names = self.ctx.var_names()
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            symbols = " ^ ".join(self.ctx.symbol(i) for i in w)
            cs = c.to_str(names)
            if not symbols:
                parts.append(cs)
            elif cs == "1":
                parts.append(symbols)
            else:
                parts.append(f"{cs} * {symbols}")
        return "  +  ".join(parts)

    def __repr__(self):
        return f"LogForm({self.to_str()})"


def _merge_wedge(wa: tuple, wb: tuple):
    if set(wa) & set(wb):
        return None
    inversions = sum(1 for i in wa for j in wb if j < i)
    return tuple(sorted(wa + wb)), (-1) ** inversions


def symbol_form(ctx: FormContext, i: int) -> LogForm:
    """The basis 1-form in direction i (dlog x_i on divisor coords, else dx_i)."""
    return LogForm(ctx, 1, {(i,): Coef.one(ctx.field, ctx.nvars)})


def dlog(ctx: FormContext, f: SparsePoly) -> LogForm:
    """The logarithmic differential df/f, canonicalized to the mixed basis."""
    if f.is_zero():
        raise ZeroDivisionError("dlog of zero")
    F = ctx.field
    out: dict = {}
    for i in range(ctx.nvars):
        df = f.derivative(i)
        if df.is_zero():
            continue
        if ctx.uses_dlog(i):
            c = Coef(df * SparsePoly.var(F, ctx.nvars, i), f)
        else:
            c = Coef(df, f)
        out[(i,)] = c
    return LogForm(ctx, 1, out)


def fundamental_cocycle(ctx: FormContext, polys: list[SparsePoly]) -> LogForm:
    """The cocycle dlog f_1 ^ ... ^ dlog f_r over the localization at prod f_i."""
    out = LogForm(ctx, 0, {(): Coef.one(ctx.field, ctx.nvars)})
    for f in polys:
        out = out.wedge(dlog(ctx, f))
    return out


def in_relative_module(
    omega: LogForm, mults: tuple[int, ...] | None = None, flags: tuple[bool, ...] | None = None
) -> bool:
    """Coefficientwise membership in the twisted module of log forms.

    True when only permitted dlog symbols appear and every coefficient is
    divisible by prod x_i^(mults_i); negative entries grant pole allowance,
    which is how the rewritten containment certificates are re-checked.
    """
    ctx = omega.ctx
    mults = ctx.d_mult if mults is None else mults
    flags = ctx.f_flags if flags is None else flags
    for w, c in omega.terms.items():
        for i in w:
            if ctx.uses_dlog(i) and not (mults[i] != 0 or flags[i]):
                return False
        mins = c.min_degrees()
        if any(mins[i] < mults[i] for i in range(ctx.nvars)):
            return False
    return True


# ---------------------------------------------------------------------------
# The coordinate-shift dlog identity and its membership certificate
# ---------------------------------------------------------------------------

def dlog_shift_check(
    ctx: FormContext, s: int, pi: int, a: SparsePoly, extras: list[SparsePoly] | None = None
) -> tuple[bool, dict]:
    """Verify dlog((s + pi*a)/s) = (pi/f)(-a dlog s + da + a dlog pi) exactly,
    wedge with the extra dlog factors, and certify membership of the result
    in the twisted log-form module localized away from f and the extras.

    ``s`` and ``pi`` are variable indices (the face and divisor coordinates);
    ``a`` is any polynomial.  The membership identity cross-multiplies to

        f * prod(g_j) * omega  =  x_pi * (xi ^ dg_1 ^ ... ^ dg_l),

    whose right side has polynomial coefficients with an explicit x_pi
    factor; its exactness is the certificate.
    """
    extras = extras or []
    F = ctx.field
    if not ctx.uses_dlog(s) or not ctx.uses_dlog(pi):
        raise PreconditionFailed("face and divisor coordinates must carry dlog symbols")
    x_s = SparsePoly.var(F, ctx.nvars, s)
    x_pi = SparsePoly.var(F, ctx.nvars, pi)
    f = x_s + x_pi * a
    if f.is_zero():
        raise PreconditionFailed("f = s + pi*a vanishes identically")

    lhs = dlog(ctx, f) - dlog(ctx, x_s)
    a_coef = Coef(a)
    xi = (
        symbol_form(ctx, s).coef_mul(-a_coef)
        + LogForm.function(ctx, a_coef).ext_d()
        + symbol_form(ctx, pi).coef_mul(a_coef)
    )
    rhs = xi.coef_mul(Coef(x_pi, f))
    identity_ok = lhs == rhs

    omega = lhs
    poly_side = xi
    clear = Coef(f)
    for g in extras:
        omega = omega.wedge(dlog(ctx, g))
        poly_side = poly_side.wedge(LogForm.function(ctx, Coef(g)).ext_d())
        clear = clear * Coef(g)
    cleared = omega.coef_mul(clear)
    factored = poly_side.coef_mul(Coef(x_pi))
    membership_ok = cleared == factored and all(
        c.is_monomial_den() and c.min_degrees()[pi] >= 1 for c in factored.terms.values()
    )
    certificate = {
        "identity": identity_ok,
        "cleared_equals_factored": cleared == factored,
        "pi_divisibility": membership_ok,
        "lhs": lhs.to_str(),
        "rhs": rhs.to_str(),
    }
    return identity_ok and membership_ok, certificate


# ---------------------------------------------------------------------------
# Twisted graded pieces and the residue homotopy
# ---------------------------------------------------------------------------

class TwistedPiece:
    """A section x^m (tensor) omega of a graded piece along {x_nu = 0}.

    ``weights`` is the twisting multi-index m (supported on divisor
    coordinates); coefficients of the carried form are reduced mod x_nu.
    """

    __slots__ = ("ctx", "weights", "nu", "form")

    def __init__(self, ctx: FormContext, weights: tuple[int, ...], nu: int, form: LogForm):
        if len(weights) != ctx.nvars:
            raise ValueError("weight multi-index must match the variable count")
        if not ctx.uses_dlog(nu):
            raise PreconditionFailed("the distinguished coordinate must lie on the divisor")
        for i, w in enumerate(weights):
            if w and not ctx.uses_dlog(i):
                raise PreconditionFailed("weights must be supported on divisor coordinates")
        self.ctx = ctx
        self.weights = tuple(weights)
        self.nu = nu
        self.form = form.restrict_zero(nu)

    @property
    def degree(self) -> int:
        return self.form.degree

    def twisted_d(self) -> "TwistedPiece":
        """x^m (tensor) (d omega + sum_i m_i dlog x_i ^ omega)."""
        total = self.form.ext_d()
        F = self.ctx.field
        for i, m in enumerate(self.weights):
            if not m:
                continue
            twist = symbol_form(self.ctx, i).wedge(self.form)
            total = total + twist.coef_mul(
                Coef(SparsePoly.const(F, self.ctx.nvars, F.from_int(m)))
            )
        return TwistedPiece(self.ctx, self.weights, self.nu, total)

    def residue(self) -> "TwistedPiece":
        """Extract the dlog x_nu component: dlog x_nu ^ alpha + beta -> alpha."""
        out: dict = {}
        for w, c in self.form.terms.items():
            if self.nu not in w:
                continue
            pos = sum(1 for k in w if k < self.nu)
            key = tuple(k for k in w if k != self.nu)
            val = c if pos % 2 == 0 else -c
            out[key] = out[key] + val if key in out else val
        return TwistedPiece(
            self.ctx, self.weights, self.nu, LogForm(self.ctx, self.form.degree - 1, out)
        )

    def scale_int(self, n: int) -> "TwistedPiece":
        F = self.ctx.field
        c = Coef(SparsePoly.const(F, self.ctx.nvars, F.from_int(n)))
        return TwistedPiece(self.ctx, self.weights, self.nu, self.form.coef_mul(c))

    def __add__(self, other: "TwistedPiece") -> "TwistedPiece":
        if (self.weights, self.nu) != (other.weights, other.nu):
            raise ValueError("graded pieces carry different twisting data")
        return TwistedPiece(self.ctx, self.weights, self.nu, self.form + other.form)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedPiece):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.weights == other.weights
            and self.nu == other.nu
            and self.form == other.form
        )

    def __hash__(self):
        raise TypeError("TwistedPiece is unhashable")

    def __repr__(self):
        return f"TwistedPiece(m={self.weights}, nu={self.nu}, {self.form.to_str()})"


def homotopy_identity_check(piece: TwistedPiece) -> tuple[bool, str]:
    """Verify d(Res(w)) + Res(d(w)) = m_nu * w exactly on a graded piece."""
    m_nu = piece.weights[piece.nu]
    second = piece.twisted_d().residue()
    if piece.degree > 0:
        lhs = piece.residue().twisted_d() + second
    else:
        lhs = second  # the residue of a function vanishes
    rhs = piece.scale_int(m_nu)
    ok = lhs == rhs
    detail = "" if ok else f"lhs={lhs.form.to_str()} rhs={rhs.form.to_str()}"
    return ok, detail


# ---------------------------------------------------------------------------
# Closed-form containment (pole-order drop for closed 1-forms)
# ---------------------------------------------------------------------------

def closed_form_containment(
    omega: LogForm, mults: tuple[int, ...]
) -> tuple[bool, LogForm | None, dict]:
    """Decide membership of a closed 1-form with poles bounded by D in the
    log-form module twisted by D - D_red, and exhibit the rewriting.

    The input is xi / prod x_i^(n_i) with polynomial xi; closedness is a
    precondition.  Writes xi = sum a_i dx_i + sum b_j dx_j and checks the
    divisibility of every b_j and every x_i a_i by the reduced product of
    the divisor coordinates, then returns the rewritten form

        (sum (x_i a_i / pi) dlog x_i + sum (b_j / pi) dx_j) / prod x^(n_i - 1)

    whose equality with the input and membership at pole order n_i - 1 are
    re-verified exactly.
    """
    ctx = omega.ctx
    F = ctx.field
    if omega.degree != 1:
        raise PreconditionFailed("containment check applies to 1-forms")
    if not omega.ext_d().is_zero():
        raise PreconditionFailed("form is not closed")

    divisor_vars = [i for i in range(ctx.nvars) if mults[i] >= 1]
    pole = {i: mults[i] for i in range(ctx.nvars)}

    # extract polynomial numerator data: xi = sum a_i dx_i over all coords
    a: dict[int, SparsePoly] = {}
    for (i,), c in omega.terms.items():
        shift = list(pole.values())
        if ctx.uses_dlog(i):
            shift[i] -= 1  # dlog x_i = dx_i / x_i
        scaled = c * Coef(_monomial(F, ctx.nvars, shift))
        if not scaled.is_monomial_den():
            raise PreconditionFailed("coefficients must have monomial denominators")
        if any(m < 0 for m in scaled.min_degrees()):
            raise PreconditionFailed("pole order exceeds the divisor multiplicities")
        a[i] = scaled.num if scaled.den.is_constant() else _force_poly(scaled)

    # divisibility by the reduced divisor product
    pi_red = _monomial(F, ctx.nvars, [1 if i in divisor_vars else 0 for i in range(ctx.nvars)])
    rewritten_terms: dict = {}
    shift_back = tuple(-(pole[i] - 1) if i in divisor_vars else 0 for i in range(ctx.nvars))
    for i, coeff in a.items():
        if i in divisor_vars:
            numerator = coeff * SparsePoly.var(F, ctx.nvars, i)
        else:
            numerator = coeff
        quotient = _exact_divide(numerator, pi_red)
        if quotient is None:
            return False, None, {"failed_at": ctx.var_names()[i]}
        rewritten_terms[(i,)] = Coef(
            quotient, _monomial(F, ctx.nvars, [-s for s in shift_back])
        )
    rewritten = LogForm(ctx, 1, rewritten_terms)

    reduced_flags = tuple(m >= 1 for m in mults)
    ok = rewritten == omega and in_relative_module(rewritten, shift_back, reduced_flags)
    detail = {"pole_drop": {ctx.var_names()[i]: pole[i] - 1 for i in divisor_vars}}
    return ok, rewritten, detail


def _monomial(F, nvars: int, exps) -> SparsePoly:
    return SparsePoly(F, nvars, {tuple(exps): F.one}, reduce=False)


def _force_poly(c: Coef) -> SparsePoly:
    den_e = next(iter(c.den.terms))
    shifted = _shift_monomial(c.num, den_e)
    return shifted


def _exact_divide(poly: SparsePoly, monomial: SparsePoly) -> SparsePoly | None:
    e = next(iter(monomial.terms))
    if any(poly.min_degree_in(i) < e[i] for i in range(poly.arity)):
        return None
    return _shift_monomial(poly, e)


# ---------------------------------------------------------------------------
# Generators for the verification suites
# ---------------------------------------------------------------------------

def random_poly(ctx: FormContext, rng, *, max_degree: int = 2, terms: int = 3) -> SparsePoly:
    F = ctx.field
    out = SparsePoly.zero(F, ctx.nvars)
    for _ in range(rng.randrange(1, terms + 1)):
        e = [0] * ctx.nvars
        for _ in range(rng.randrange(0, max_degree + 1)):
            e[rng.randrange(ctx.nvars)] += 1
        c = _random_scalar(F, rng)
        out = out + SparsePoly(F, ctx.nvars, {tuple(e): c})
    if out.is_zero():
        out = SparsePoly.one(F, ctx.nvars)
    return out


def _random_scalar(F, rng):
    if hasattr(F, "p"):
        return F.from_int(rng.randrange(1, F.p))
    return F.from_int(rng.choice([n for n in range(-3, 4) if n]))


def random_form(ctx: FormContext, rng, degree: int, *, with_fractions: bool = True) -> LogForm:
    """Random form of the given degree; some coefficients carry denominators."""
    F = ctx.field
    out = LogForm.zero(ctx, degree)
    wedges = list(itertools.combinations(range(ctx.nvars), degree))
    if not wedges:
        return out
    for _ in range(rng.randrange(1, 4)):
        w = rng.choice(wedges)
        num = random_poly(ctx, rng)
        if with_fractions and rng.random() < 0.4:
            den_choices = [
                SparsePoly.one(F, ctx.nvars) + random_poly(ctx, rng, max_degree=1, terms=1),
                _monomial(F, ctx.nvars, [rng.randrange(0, 2) for _ in range(ctx.nvars)]),
            ]
            den = rng.choice(den_choices)
            if den.is_zero():
                den = SparsePoly.one(F, ctx.nvars)
            c = Coef(num, den)
        else:
            c = Coef(num)
        out = out + LogForm(ctx, degree, {w: c})
    return out


def twisted_monomial_basis(ctx: FormContext, nu: int, m_nu: int, *, max_form_degree: int = 3, max_coef_degree: int = 2):
    """Enumerate basis graded pieces: monomial coefficient times a wedge."""
    F = ctx.field
    weights = tuple(
        m_nu if i == nu else (1 if ctx.d_mult[i] > 0 else 0) for i in range(ctx.nvars)
    )
    free_vars = [i for i in range(ctx.nvars) if i != nu]
    exponents = itertools.product(range(max_coef_degree + 1), repeat=len(free_vars))
    monomials = []
    for e in exponents:
        full = [0] * ctx.nvars
        for var, k in zip(free_vars, e):
            full[var] = k
        monomials.append(tuple(full))
    for q in range(0, max_form_degree + 1):
        for w in itertools.combinations(range(ctx.nvars), q):
            for e in monomials:
                coef = Coef(_monomial(F, ctx.nvars, e))
                yield TwistedPiece(ctx, weights, nu, LogForm(ctx, q, {w: coef}))


def containment_generators(ctx: FormContext, mults: tuple[int, ...], rng, count: int):
    """Closed 1-forms with poles bounded by D: exact differentials of
    u / prod x^j (j_i <= n_i - 1) plus, for a single divisor coordinate,
    integer multiples of dlog x / prod x^(n-1); and their sums."""
    F = ctx.field
    divisor_vars = [i for i in range(ctx.nvars) if mults[i] >= 1]
    for _ in range(count):
        pieces = []
        for _ in range(rng.randrange(1, 3)):
            u = random_poly(ctx, rng)
            j = [rng.randrange(0, max(1, mults[i])) if i in divisor_vars else 0 for i in range(ctx.nvars)]
            pot = Coef(u, _monomial(F, ctx.nvars, j))
            pieces.append(LogForm.function(ctx, pot).ext_d())
        if len(divisor_vars) == 1 and rng.random() < 0.5:
            i = divisor_vars[0]
            j = [mults[k] - 1 if k == i else 0 for k in range(ctx.nvars)]
            c = Coef(
                SparsePoly.const(F, ctx.nvars, _random_scalar(F, rng)),
                _monomial(F, ctx.nvars, j),
            )
            pieces.append(symbol_form(ctx, i).coef_mul(c))
        total = pieces[0]
        for p in pieces[1:]:
            total = total + p
        yield total
