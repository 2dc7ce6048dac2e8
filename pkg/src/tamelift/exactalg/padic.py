"""p-adic valuations of exact rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mpoly import QQ


def vp(x, p: int):
    """Valuation of a rational at p. vp(0) is +infinity (math.inf sentinel).

    Satisfies vp(x*y) = vp(x) + vp(y) and vp(x+y) >= min(vp(x), vp(y)),
    with equality when the two valuations differ.
    """
    if p < 2:
        raise ValueError("valuation base must be >= 2, got %r" % (p,))
    x = QQ(x)
    if x == 0:
        return math.inf
    v = 0
    num = abs(int(x.numerator))
    while num % p == 0:
        num //= p
        v += 1
    den = int(x.denominator)
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicRat:
    """A rational remembered together with a prime, for valuation bookkeeping."""

    value: object
    prime: int

    def __post_init__(self):
        object.__setattr__(self, "value", QQ(self.value))
        if self.prime < 2:
            raise ValueError("prime must be >= 2")

    @property
    def valuation(self):
        return vp(self.value, self.prime)

    def __repr__(self):
        return "PadicRat(%s, p=%d, v=%s)" % (self.value, self.prime, self.valuation)
