"""Rational functions: quotients of sparse polynomials in lowest terms.

Normal form: gcd(num, den) = 1, the denominator is primitive with positive
graded-lex leading coefficient, and zero is 0/1. Construction always
normalizes, so equality is structural.
"""

from __future__ import annotations

from .mpoly import MPoly, QQ, DivisionByZeroPoly, exact_div, poly_gcd


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None, _normalized=False):
        if den is None:
            den = MPoly.constant(1)
        if not isinstance(num, MPoly):
            num = MPoly.constant(num)
        if not isinstance(den, MPoly):
            den = MPoly.constant(den)
        if den.is_zero():
            raise DivisionByZeroPoly("rational function with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def from_const(cls, c) -> "RatFunc":
        return cls(MPoly.constant(c))

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls(MPoly.var(name))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> MPoly:
        if not self.is_poly():
            raise ValueError("denominator is not constant: %s" % self.den.pretty())
        return self.num.scale(QQ(1) / self.den.constant_value())

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (MPoly, int)) or type(other) is type(QQ(0)):
            return self == RatFunc(other if isinstance(other, MPoly) else MPoly.constant(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce(other)
        num = self.num * other.den + other.num * self.den
        return RatFunc(num, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.num.is_zero():
            raise DivisionByZeroPoly("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __pow__(self, k: int):
        if k == 0:
            return RatFunc.from_const(1)
        if k < 0:
            return RatFunc.from_const(1) / (self ** (-k))
        return RatFunc(self.num ** k, self.den ** k)

    def __repr__(self):
        if self.is_poly():
            return "RatFunc(%s)" % self.as_poly().pretty()
        return "RatFunc((%s) / (%s))" % (self.num.pretty(), self.den.pretty())

    def pretty(self) -> str:
        if self.den == MPoly.constant(1):
            return self.num.pretty()
        return "(%s) / (%s)" % (self.num.pretty(), self.den.pretty())


def _normalize(num: MPoly, den: MPoly):
    if num.is_zero():
        return MPoly.constant(0), MPoly.constant(1)
    g = poly_gcd(num, den)
    if not (g.is_constant() and g.constant_value() == 1):
        num = exact_div(num, g)
        den = exact_div(den, g)
    c = den.content()
    if den.leading_coeff() < 0:
        c = -c
    if c != 1:
        num = num.scale(QQ(1) / c)
        den = den.scale(QQ(1) / c)
    return num, den


def _coerce(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, MPoly):
        return RatFunc(x)
    return RatFunc(MPoly.constant(x))
