"""q-Laurent sums with rational exponents and their quotients.

A ``QLaurent`` is stored as ``q**(shift/scale) * P(q**(1/scale))`` with ``P`` a
univariate ``fmpq_poly`` whose constant term is nonzero.  The scale is always
reduced as far as possible, so two equal sums have identical
``(scale, shift, P)``.  Quotients are reduced with a univariate gcd after
bringing both sides to a common scale.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping

import flint

from .ratfunc import to_fmpq, to_fraction


def _inflate(p: flint.fmpq_poly, k: int) -> flint.fmpq_poly:
    if k == 1 or p.degree() <= 0:
        return p
    return p(flint.fmpq_poly([0] * k + [1]))


class QLaurent:
    """Finite sum of c * q**e, exponents e in Q."""

    __slots__ = ("scale", "shift", "poly")

    def __init__(self, scale: int, shift: int, poly: flint.fmpq_poly):
        self.scale, self.shift, self.poly = _canonical(scale, shift, poly)

    @classmethod
    def from_terms(cls, terms: Mapping) -> "QLaurent":
        terms = {Fraction(e): Fraction(c) for e, c in terms.items() if c != 0}
        if not terms:
            return QL_ZERO
        scale = lcm(*(e.denominator for e in terms))
        ints = {int(e * scale): c for e, c in terms.items()}
        low = min(ints)
        coeffs = [0] * (max(ints) - low + 1)
        for k, c in ints.items():
            coeffs[k - low] = to_fmpq(c)
        return cls(scale, low, flint.fmpq_poly(coeffs))

    @classmethod
    def monomial(cls, exponent, coeff=1) -> "QLaurent":
        return cls.from_terms({Fraction(exponent): Fraction(coeff)})

    def terms(self) -> dict[Fraction, Fraction]:
        out = {}
        for k, c in enumerate(self.poly.coeffs()):
            if c != 0:
                out[Fraction(self.shift + k, self.scale)] = to_fraction(c)
        return out

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def lowest_exponent(self) -> Fraction:
        return Fraction(self.shift, self.scale)

    def _at_scale(self, scale: int) -> tuple[int, flint.fmpq_poly]:
        k = scale // self.scale
        return self.shift * k, _inflate(self.poly, k)

    def __add__(self, other: "QLaurent") -> "QLaurent":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m = lcm(self.scale, other.scale)
        s1, p1 = self._at_scale(m)
        s2, p2 = other._at_scale(m)
        low = min(s1, s2)
        return QLaurent(m, low, p1.left_shift(s1 - low) + p2.left_shift(s2 - low))

    def __neg__(self):
        return QLaurent(self.scale, self.shift, -self.poly)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QLaurent(self.scale, self.shift, self.poly * to_fmpq(other))
        if self.is_zero() or other.is_zero():
            return QL_ZERO
        m = lcm(self.scale, other.scale)
        s1, p1 = self._at_scale(m)
        s2, p2 = other._at_scale(m)
        return QLaurent(m, s1 + s2, p1 * p2)

    __rmul__ = __mul__

    def bar(self) -> "QLaurent":
        """Substitute q -> 1/q."""
        if self.is_zero():
            return self
        coeffs = self.poly.coeffs()[::-1]
        top = self.shift + len(coeffs) - 1
        return QLaurent(self.scale, -top, flint.fmpq_poly(coeffs))

    def evaluate(self, root, denom: int) -> Fraction:
        """Value at ``q = root**denom`` for exponents with denominators dividing ``denom``."""
        root = Fraction(root)
        total = Fraction(0)
        for e, c in self.terms().items():
            k = e * denom
            if k.denominator != 1:
                raise ValueError(f"exponent {e} not in (1/{denom})Z")
            total += c * root ** int(k)
        return total

    def __eq__(self, other):
        if not isinstance(other, QLaurent):
            return NotImplemented
        return (self.scale, self.shift) == (other.scale, other.shift) and self.poly == other.poly

    def __hash__(self):
        return hash((self.scale, self.shift, str(self.poly)))

    def __str__(self):
        return laurent_str(self)

    def __repr__(self):
        return f"QLaurent({laurent_str(self)!r})"

    def to_json(self) -> list:
        return [[str(e), str(c)] for e, c in sorted(self.terms().items())]

    @classmethod
    def from_json(cls, data) -> "QLaurent":
        return cls.from_terms({Fraction(e): Fraction(c) for e, c in data})


def _canonical(scale, shift, poly):
    if poly.is_zero():
        return 1, 0, flint.fmpq_poly([])
    coeffs = poly.coeffs()
    low = next(i for i, c in enumerate(coeffs) if c != 0)
    if low:
        poly = poly.right_shift(low)
        shift += low
    g = gcd(scale, shift)
    if g > 1 and poly.degree() > 0:
        _, step = poly.deflation()
        g = gcd(g, step)
    if g > 1:
        if poly.degree() > 0:
            poly = flint.fmpq_poly(poly.coeffs()[::g])
        scale //= g
        shift //= g
    return scale, shift, poly


QL_ZERO = QLaurent(1, 0, flint.fmpq_poly([]))
QL_ONE = QLaurent(1, 0, flint.fmpq_poly([1]))


def laurent_str(x: QLaurent) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for e, c in sorted(x.terms().items(), reverse=True):
        mono = "" if e == 0 else ("q" if e == 1 else f"q^({e})" if e.denominator != 1 or e < 0 else f"q^{e}")
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += sign + body
    return s


class QRatFunc:
    """Quotient of two QLaurent sums in lowest terms.

    Normalization: the denominator's lowest exponent is 0 and its lowest
    coefficient is 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = _as_laurent(num)
        den = QL_ONE if den is None else _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("QRatFunc with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num, self.den = num, den

    @classmethod
    def q_power(cls, exponent) -> "QRatFunc":
        return cls(QLaurent.monomial(exponent), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return QRatFunc(self.num + other.num, self.den)
        return QRatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRatFunc(-self.num, self.den, _reduced=True)

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
            return QRatFunc(QL_ZERO, _reduced=True)
        if self.den == QL_ONE and other.den == QL_ONE:
            return QRatFunc(self.num * other.num, _reduced=True)
        return QRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero QRatFunc")
        return QRatFunc(self.den, self.num)

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
        out = QRatFunc(QL_ONE, _reduced=True)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def bar(self) -> "QRatFunc":
        return QRatFunc(self.num.bar(), self.den.bar())

    def evaluate(self, root, denom: int) -> Fraction:
        d = self.den.evaluate(root, denom)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes")
        return self.num.evaluate(root, denom) / d

    def classical_limit(self) -> Fraction:
        """Limit q -> 1, taken as q = exp(h), h -> 0.

        Each q**e expands as sum_n (e h)**n / n!, so the order of vanishing of
        a sum is the first n with sum c*e**n != 0, and the limit is the ratio
        of those moments when num and den vanish to the same order.
        """
        kn, mn = _vanishing_order(self.num)
        kd, md = _vanishing_order(self.den)
        if kn > kd:
            return Fraction(0)
        if kn < kd:
            raise ZeroDivisionError("pole at q = 1")
        return mn / md

    def __str__(self):
        if self.den == QL_ONE:
            return laurent_str(self.num)
        return f"({laurent_str(self.num)})/({laurent_str(self.den)})"

    def __repr__(self):
        return f"QRatFunc({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "QRatFunc":
        return cls(QLaurent.from_json(data["num"]), QLaurent.from_json(data["den"]), _reduced=True)


def _vanishing_order(x: QLaurent, max_order: int = 512):
    terms = x.terms()
    for n in range(max_order):
        m = sum(c * e**n for e, c in terms.items())
        if m != 0:
            return n, m
    raise ValueError("vanishing order not found")


def _as_laurent(x) -> QLaurent:
    if isinstance(x, QLaurent):
        return x
    x = Fraction(x)
    return QLaurent.monomial(0, x) if x else QL_ZERO


def _coerce(x):
    if isinstance(x, QRatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return QRatFunc(_as_laurent(x), _reduced=True)
    if isinstance(x, QLaurent):
        return QRatFunc(x, _reduced=True)
    return NotImplemented


def _reduce(num: QLaurent, den: QLaurent):
    if num.is_zero():
        return QL_ZERO, QL_ONE
    m = lcm(num.scale, den.scale)
    sn, pn = num._at_scale(m)
    sd, pd = den._at_scale(m)
    if pd.degree() > 0 and pn.degree() > 0:
        g = pn.gcd(pd)
        if g.degree() > 0:
            pn = pn / g
            pd = pd / g
    c = pd.coeffs()[0]
    if c != 1:
        pn = pn / c
        pd = pd / c
    return QLaurent(m, sn - sd, pn), QLaurent(m, 0, pd)


def qlaurent_arith(a: QRatFunc, b: QRatFunc, op: str) -> QRatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def q_number(x) -> QRatFunc:
    """The q-number [x] = (q**x - q**-x) / (q - 1/q)."""
    x = Fraction(x)
    if x == 0:
        return QRatFunc(QL_ZERO, _reduced=True)
    num = QLaurent.from_terms({x: 1, -x: -1})
    return QRatFunc(num, QLaurent.from_terms({Fraction(1): 1, Fraction(-1): -1}))


def bar_involution(a: QRatFunc) -> QRatFunc:
    return a.bar()
