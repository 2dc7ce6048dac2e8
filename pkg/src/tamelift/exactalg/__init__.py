"""Exact arithmetic kernel: rationals, sparse multivariate polynomials,
rational functions, p-adic valuations, and plain-text serialization.

No Groebner bases, no general factorization. Ideal membership is only ever
decided for principal or monomial ideals via exact division, which is all the
rest of the package needs.
"""

from .mpoly import (
    QQ,
    MPoly,
    NotDivisible,
    DivisionByZeroPoly,
    NotUnivariateInVar,
    poly_arith,
    exact_div,
    resultant,
    det_fraction,
)
from .ratfunc import RatFunc
from .padic import vp, PadicRat
from .sexpr import (
    poly_to_sexpr,
    poly_from_sexpr,
    poly_to_json,
    poly_from_json,
    ratfunc_to_sexpr,
    ratfunc_from_sexpr,
    ratfunc_to_json,
    ratfunc_from_json,
)

__all__ = [
    "QQ",
    "MPoly",
    "NotDivisible",
    "DivisionByZeroPoly",
    "NotUnivariateInVar",
    "poly_arith",
    "exact_div",
    "resultant",
    "det_fraction",
    "RatFunc",
    "vp",
    "PadicRat",
    "poly_to_sexpr",
    "poly_from_sexpr",
    "poly_to_json",
    "poly_from_json",
    "ratfunc_to_sexpr",
    "ratfunc_from_sexpr",
    "ratfunc_to_json",
    "ratfunc_from_json",
]
