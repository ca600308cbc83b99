"""Sparse multivariate polynomials and the shared expression grammar.

A polynomial is a map from exponent tuples (one entry per variable) to
nonzero scalars of the base field.  Terms are kept canonical (no zero
coefficients), so equality is syntactic.

The expression grammar accepted by :func:`parse_fraction` covers every
textual input in the package: integers, variable symbols, ``+ - * / ^``
and parentheses, whitespace-insensitive.  Division is tracked as an exact
numerator/denominator pair so rational inputs parse losslessly.
"""

from __future__ import annotations

from .errors import FieldMismatch, ParseError
from .fields import check_same_field


class SparsePoly:
    """Multivariate polynomial with exact coefficients, canonical form."""

    __slots__ = ("field", "arity", "terms")

    def __init__(self, field, arity: int, terms=None, *, reduce=True):
        self.field = field
        self.arity = arity
        if terms is None:
            terms = {}
        if reduce:
            terms = {e: c for e, c in terms.items() if not field.is_zero(c)}
        self.terms = terms

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, field, arity: int) -> "SparsePoly":
        return cls(field, arity, {}, reduce=False)

    @classmethod
    def const(cls, field, arity: int, c) -> "SparsePoly":
        if field.is_zero(c):
            return cls.zero(field, arity)
        return cls(field, arity, {(0,) * arity: c}, reduce=False)

    @classmethod
    def one(cls, field, arity: int) -> "SparsePoly":
        return cls.const(field, arity, field.one)

    @classmethod
    def var(cls, field, arity: int, i: int) -> "SparsePoly":
        if not 0 <= i < arity:
            raise ValueError(f"variable index {i} out of range for arity {arity}")
        e = [0] * arity
        e[i] = 1
        return cls(field, arity, {tuple(e): field.one}, reduce=False)

    # -- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(k == 0 for k in e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.arity, self.field.zero)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def min_degree_in(self, i: int) -> int:
        """Smallest exponent of variable i across terms (0 for the zero poly)."""
        return min((e[i] for e in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------
    def _check(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            raise FieldMismatch(f"cannot combine SparsePoly with {type(other).__name__}")
        check_same_field(self.field, other.field)
        if self.arity != other.arity:
            raise ValueError("polynomials have different arities")
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out.get(e, F.zero), c)
        return SparsePoly(F, self.arity, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        return SparsePoly(F, self.arity, {e: F.neg(c) for e, c in self.terms.items()}, reduce=False)

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                prod = F.mul(ca, cb)
                out[e] = F.add(out.get(e, F.zero), prod)
        return SparsePoly(F, self.arity, out)

    def scalar_mul(self, c):
        F = self.field
        if F.is_zero(c):
            return SparsePoly.zero(F, self.arity)
        return SparsePoly(F, self.arity, {e: F.mul(c, v) for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = SparsePoly.one(self.field, self.arity)
        base = self
        while n > 0:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.arity, tuple(sorted(self.terms.items()))))

    # -- substitution ------------------------------------------------------
    def substitute_scalars(self, assignment: dict) -> "SparsePoly":
        """Substitute field scalars for a subset of variables (exact).

        Unassigned variables remain symbolic; the arity is unchanged.
        """
        F = self.field
        out: dict = {}
        for e, c in self.terms.items():
            coeff = c
            new_e = list(e)
            for i, v in assignment.items():
                if e[i]:
                    coeff = F.mul(coeff, pow_scalar(F, v, e[i]))
                new_e[i] = 0
            key = tuple(new_e)
            out[key] = F.add(out.get(key, F.zero), coeff)
        return SparsePoly(F, self.arity, out)

    def substitute_polys(self, assignment: dict) -> "SparsePoly":
        """Substitute polynomials (same field/arity) for variables."""
        F = self.field
        out = SparsePoly.zero(F, self.arity)
        for e, c in self.terms.items():
            term = SparsePoly.const(F, self.arity, c)
            for i, k in enumerate(e):
                if not k:
                    continue
                if i in assignment:
                    term = term * assignment[i] ** k
                else:
                    mono = [0] * self.arity
                    mono[i] = k
                    term = term * SparsePoly(F, self.arity, {tuple(mono): F.one}, reduce=False)
            out = out + term
        return out

    def derivative(self, i: int) -> "SparsePoly":
        F = self.field
        out: dict = {}
        for e, c in self.terms.items():
            if not e[i]:
                continue
            new_e = list(e)
            new_e[i] -= 1
            key = tuple(new_e)
            dc = F.mul(F.from_int(e[i]), c)
            out[key] = F.add(out.get(key, F.zero), dc)
        return SparsePoly(F, self.arity, out)

    def extend_arity(self, new_arity: int) -> "SparsePoly":
        """View this polynomial inside a larger variable list (indices kept)."""
        if new_arity < self.arity:
            raise ValueError("cannot shrink arity")
        pad = (0,) * (new_arity - self.arity)
        return SparsePoly(
            self.field, new_arity, {e + pad: c for e, c in self.terms.items()}, reduce=False
        )

    # -- printing ------------------------------------------------------------
    def to_str(self, var_names: list[str]) -> str:
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for e, c in sorted(self.terms.items()):
            factors = []
            cs = F.to_str(c)
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(var_names[i])
                elif k > 1:
                    factors.append(f"{var_names[i]}^{k}")
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                parts.append("*".join([cs] + factors))
        return " + ".join(parts)

    def __repr__(self):
        names = [f"v{i}" for i in range(self.arity)]
        return f"SparsePoly({self.to_str(names)})"


def pow_scalar(F, v, k: int):
    out = F.one
    for _ in range(k):
        out = F.mul(out, v)
    return out


# ---------------------------------------------------------------------------
# Expression parsing
# ---------------------------------------------------------------------------

class _Parser:
    """Recursive-descent parser over numerator/denominator pairs."""

    def __init__(self, text: str, field, var_names: list[str]):
        self.text = text
        self.pos = 0
        self.field = field
        self.names = {name: i for i, name in enumerate(var_names)}
        self.arity = len(var_names)

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _fail(self, msg: str):
        raise ParseError(msg, self.pos)

    def parse(self):
        num, den = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail(f"unexpected character {self.text[self.pos]!r}")
        return num, den

    def _expr(self):
        ch = self._peek()
        if ch == "-":
            self.pos += 1
            num, den = self._term()
            num = -num
        else:
            if ch == "+":
                self.pos += 1
            num, den = self._term()
        while True:
            ch = self._peek()
            if ch not in ("+", "-"):
                return num, den
            self.pos += 1
            n2, d2 = self._term()
            combined = num * d2 + n2 * den if ch == "+" else num * d2 - n2 * den
            num, den = combined, den * d2

    def _term(self):
        num, den = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                n2, d2 = self._factor()
                num, den = num * n2, den * d2
            elif ch == "/":
                self.pos += 1
                n2, d2 = self._factor()
                if n2.is_zero():
                    self._fail("division by zero")
                num, den = num * d2, den * n2
            else:
                return num, den

    def _factor(self):
        num, den = self._atom()
        while self._peek() == "^":
            self.pos += 1
            self._skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                self._fail("exponent must be a non-negative integer")
            k = int(self.text[start : self.pos])
            num, den = num**k, den**k
        return num, den

    def _atom(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            self._fail("unexpected end of expression")
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            num, den = self._expr()
            if self._peek() != ")":
                self._fail("missing closing parenthesis")
            self.pos += 1
            return num, den
        if ch == "-":
            self.pos += 1
            num, den = self._atom()
            return -num, den
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            c = self.field.from_int(int(self.text[start : self.pos]))
            return (
                SparsePoly.const(self.field, self.arity, c),
                SparsePoly.one(self.field, self.arity),
            )
        if ch.isalpha():
            start = self.pos
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start : self.pos]
            if name not in self.names:
                self.pos = start
                self._fail(f"unknown variable {name!r}")
            return (
                SparsePoly.var(self.field, self.arity, self.names[name]),
                SparsePoly.one(self.field, self.arity),
            )
        self._fail(f"unexpected character {ch!r}")


def parse_fraction(text: str, field, var_names: list[str]) -> tuple[SparsePoly, SparsePoly]:
    """Parse an expression into an exact (numerator, denominator) pair."""
    return _Parser(text, field, var_names).parse()


def parse_poly(text: str, field, var_names: list[str]) -> SparsePoly:
    """Parse an expression required to be polynomial (constant denominator)."""
    num, den = parse_fraction(text, field, var_names)
    if not den.is_constant():
        raise ParseError("expected a polynomial, found a non-constant denominator")
    c = den.constant_value()
    return num.scalar_mul(field.inv(c))
