"""Exact rational functions in the highest-weight coordinates l1..l8 and eps.

Numerators and denominators are sparse ``fmpq_mpoly`` objects in one shared
context, so values built in different places always combine.  A value is kept
in lowest terms with a monic denominator (leading coefficient 1 under graded
lex), which makes ``==`` a structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Mapping

import flint

MAX_RANK = 8
VARIABLES = tuple(f"l{i}" for i in range(1, MAX_RANK + 1)) + ("eps",)
EPS = len(VARIABLES) - 1
CTX = flint.fmpq_mpoly_ctx.get(VARIABLES, "deglex")
_GENS = CTX.gens()
_INDEX = {name: i for i, name in enumerate(VARIABLES)}


def to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def to_fraction(c) -> Fraction:
    c = to_fmpq(c)
    return Fraction(int(c.p), int(c.q))


def _as_poly(x) -> flint.fmpq_mpoly:
    if isinstance(x, flint.fmpq_mpoly):
        return x
    return CTX.constant(to_fmpq(x))


class RatFunc:
    """Quotient ``num/den`` of polynomials over Q, always in lowest terms."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        if isinstance(num, RatFunc):
            if den == 1:
                self.num, self.den, self._hash = num.num, num.den, num._hash
                return
            other = num / RatFunc(den)
            self.num, self.den, self._hash = other.num, other.den, None
            return
        n, d = _as_poly(num), _as_poly(den)
        if d.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not _reduced:
            n, d = _reduce(n, d)
        self.num, self.den, self._hash = n, d, None

    # -- constructors -----------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls(_GENS[_INDEX[name]], _reduced=True)

    @classmethod
    def lam(cls, i: int) -> "RatFunc":
        """The 1-based highest-weight coordinate l_i."""
        return cls(_GENS[i - 1], _reduced=True)

    @classmethod
    def eps(cls) -> "RatFunc":
        return cls(_GENS[EPS], _reduced=True)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return to_fraction(self.num.leading_coefficient()) if not self.is_zero() else Fraction(0)

    def variables(self) -> tuple[str, ...]:
        used = [max(a, b) for a, b in zip(self.num.degrees(), self.den.degrees())]
        return tuple(v for v, deg in zip(VARIABLES, used) if deg > 0)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.is_one():
            return RatFunc(self.num * other.den + other.num, other.den, _reduced=True)
        if other.den.is_one():
            return RatFunc(self.num + other.num * self.den, self.den, _reduced=True)
        g = self.den.gcd(other.den)
        d1 = self.den / g
        d2 = other.den / g
        return RatFunc(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        # cross-cancel so the product is already reduced
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num / g1) * (other.num / g2)
        den = (self.den / g2) * (other.den / g1)
        lc = den.leading_coefficient()
        return RatFunc(num / lc, den / lc, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero RatFunc")
        lc = self.num.leading_coefficient()
        return RatFunc(self.den / lc, self.num / lc, _reduced=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    # -- evaluation -------------------------------------------------------
    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Evaluate at exact rationals (plain Python arithmetic, no flint)."""
        d = eval_poly(self.den, point)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at {dict(point)}")
        return eval_poly(self.num, point) / d

    def specialize(self, values: Mapping[str, Fraction]) -> "RatFunc":
        """Substitute exact rationals for some of the variables."""
        args = [
            CTX.constant(to_fmpq(values[v])) if v in values else g
            for v, g in zip(VARIABLES, _GENS)
        ]
        num = self.num.compose(*args)
        den = self.den.compose(*args)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator of {self} vanishes at {dict(values)}")
        return RatFunc(num, den)

    # -- presentation -----------------------------------------------------
    def __str__(self):
        return pretty(self)

    def __repr__(self):
        return f"RatFunc({pretty(self)!r})"

    def to_json(self) -> dict:
        names = self.variables()
        idx = [_INDEX[v] for v in names]

        def terms(p):
            return [
                [[int(e[i]) for i in idx], str(to_fraction(c))]
                for e, c in p.terms()
            ]

        return {"vars": list(names), "num": terms(self.num), "den": terms(self.den)}

    @classmethod
    def from_json(cls, data: Mapping) -> "RatFunc":
        idx = [_INDEX[v] for v in data.get("vars", [])]

        def poly(terms):
            out = {}
            for exps, c in terms:
                full = [0] * len(VARIABLES)
                for i, e in zip(idx, exps):
                    full[i] = e
                out[tuple(full)] = to_fmpq(Fraction(c))
            return CTX.from_dict(out) if out else CTX.constant(0)

        return cls(poly(data["num"]), poly(data["den"]), _reduced=True)


def _reduce(n, d):
    if n.is_zero():
        return n, CTX.constant(1)
    if not d.is_constant():
        g = n.gcd(d)
        if not g.is_one():
            n, d = n / g, d / g
    lc = d.leading_coefficient()
    if lc != 1:
        n, d = n / lc, d / lc
    return n, d


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, flint.fmpq, flint.fmpq_mpoly)):
        return RatFunc(x, _reduced=not isinstance(x, flint.fmpq_mpoly))
    return NotImplemented


ZERO = RatFunc(0, _reduced=True)
ONE = RatFunc(1, _reduced=True)


def eval_poly(p: flint.fmpq_mpoly, point: Mapping[str, Fraction]) -> Fraction:
    total = Fraction(0)
    for exps, c in p.terms():
        term = to_fraction(c)
        for name, e in zip(VARIABLES, exps):
            if e:
                if name not in point:
                    raise KeyError(f"no value given for {name}")
                term *= Fraction(point[name]) ** int(e)
        total += term
    return total


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# -- pretty printing ------------------------------------------------------

def _monomial_str(exps) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_str(p: flint.fmpq_mpoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for exps, c in p.terms():
        c = to_fraction(c)
        mono = _monomial_str(exps)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += sign + body
    return s


def _primitive(p: flint.fmpq_mpoly):
    """Split p = c * f with f integral, primitive, positive leading coefficient."""
    coeffs = [to_fraction(c) for c in p.coeffs()]
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    g = reduce(gcd, ints, 0)
    if ints[0] < 0:
        g = -g
    c = Fraction(g, den)
    return c, p / to_fmpq(c)


def _factored(p: flint.fmpq_mpoly):
    content, factors = p.factor()
    const = to_fraction(content)
    fs = []
    for f, e in factors:
        c, f = _primitive(f)
        const *= c**e
        fs.append((f, e))
    fs.sort(key=lambda fe: (fe[0].total_degree(), len(fe[0]), poly_str(fe[0])))
    return const, fs


def _product_str(const: int, factors, wrap: bool = False) -> str:
    """Join factors with '*'; a lone unpowered sum is left bare unless ``wrap``."""
    parts = [] if const == 1 else [str(const)]
    if not parts and len(factors) == 1 and factors[0][1] == 1 and not wrap:
        return poly_str(factors[0][0])
    for f, e in factors:
        s = poly_str(f)
        if len(f) > 1:
            s = f"({s})"
        if e > 1:
            s = f"{s}^{e}"
        parts.append(s)
    return "*".join(parts) if parts else "1"


def pretty(x: RatFunc) -> str:
    """Factored display form, e.g. ``(l1+l2)/(l1*l2*(l1+l2+1))``."""
    if x.is_zero():
        return "0"
    cn, fn = _factored(x.num)
    cd, fd = _factored(x.den)
    c = cn / cd
    sign = "-" if c < 0 else ""
    c = abs(c)
    if not fd and c.denominator == 1:
        return sign + _product_str(c.numerator, fn, wrap=bool(sign))
    top = _product_str(c.numerator, fn, wrap=True)
    bottom = _product_str(c.denominator, fd, wrap=True)
    if len(fd) + (c.denominator != 1) > 1:
        bottom = f"({bottom})"
    return f"{sign}{top}/{bottom}"
