"""Sparse multivariate polynomials over the rationals.

Representation: an ordered tuple of variable names plus a dict mapping
exponent vectors (tuples aligned with the variable list) to nonzero rational
coefficients. The variable list is kept sorted so that two polynomials over
the same universe compare structurally. Term order everywhere is graded
lexicographic: compare total degree first, then the exponent vector.

Arithmetic between polynomials over different universes goes through
poly_arith, which takes the union of the two variable lists first.

Coefficients are gmpy2.mpq when available, fractions.Fraction otherwise.
Both are kept reduced with positive denominator by construction.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

try:
    from gmpy2 import mpq as QQ  # type: ignore
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ


class NotDivisible(ArithmeticError):
    """Exact division requested but the quotient does not exist in the ring."""


class DivisionByZeroPoly(ZeroDivisionError):
    """Division by the zero polynomial."""


class NotUnivariateInVar(ValueError):
    """Resultant input has positive degree in a variable other than the given one."""


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """Immutable sparse polynomial.

    :param variables: iterable of variable names, stored sorted
    :param terms: mapping exponent tuple -> coefficient, zero coefficients dropped
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object]):
        vs = tuple(variables)
        if list(vs) != sorted(vs):
            order = sorted(range(len(vs)), key=lambda i: vs[i])
            remap = {old: new for new, old in enumerate(order)}
            vs_sorted = tuple(vs[i] for i in order)
            fixed = {}
            for exps, c in terms.items():
                new_e = [0] * len(vs)
                for i, e in enumerate(exps):
                    new_e[remap[i]] = e
                c = QQ(c)
                if c != 0:
                    fixed[tuple(new_e)] = fixed.get(tuple(new_e), QQ(0)) + c
            vs, terms = vs_sorted, fixed
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names: %r" % (vs,))
        clean = {}
        for exps, c in terms.items():
            c = QQ(c)
            if c == 0:
                continue
            if len(exps) != len(vs):
                raise ValueError("exponent arity mismatch")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            clean[tuple(int(e) for e in exps)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c, variables: Iterable[str] = ()) -> "MPoly":
        vs = tuple(sorted(variables))
        c = QQ(c)
        if c == 0:
            return cls(vs, {})
        return cls(vs, {tuple([0] * len(vs)): c})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls((name,), {(1,): QQ(1)})

    @classmethod
    def from_name_terms(cls, terms: Mapping[tuple, object], variables=None) -> "MPoly":
        """Build from terms keyed by ((name, exp), ...) pairs."""
        names = set()
        for key in terms:
            names.update(n for n, _ in key)
        if variables is not None:
            names.update(variables)
        vs = tuple(sorted(names))
        idx = {n: i for i, n in enumerate(vs)}
        out: dict = {}
        for key, c in terms.items():
            e = [0] * len(vs)
            for n, k in key:
                e[idx[n]] += k
            t = tuple(e)
            out[t] = out.get(t, QQ(0)) + QQ(c)
        return cls(vs, out)

    # -- canonical views ---------------------------------------------------

    def name_terms(self) -> dict:
        """Terms keyed by name: {((name, exp), ...): coeff}, zero exponents dropped."""
        out = {}
        for exps, c in self.terms.items():
            key = tuple((v, e) for v, e in zip(self.vars, exps) if e != 0)
            out[key] = c
        return out

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        if not self.terms:
            return QQ(0)
        return next(iter(self.terms.values()))

    def used_vars(self) -> tuple:
        used = set()
        for exps in self.terms:
            for v, e in zip(self.vars, exps):
                if e:
                    used.add(v)
        return tuple(sorted(used))

    def degree(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def leading_term(self):
        """(exps, coeff) maximal in graded-lex order. Raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def leading_coeff(self):
        return self.leading_term()[1]

    def __eq__(self, other):
        if isinstance(other, MPoly):
            if self.vars == other.vars:
                return self.terms == other.terms
            return self.name_terms() == other.name_terms()
        if isinstance(other, (int,)) or type(other) is type(QQ(0)):
            return self.is_constant() and self.constant_value() == QQ(other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset((k, v) for k, v in self.name_terms().items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "MPoly(%s)" % self.pretty()

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                (v if e == 1 else "%s^%d" % (v, e))
                for v, e in zip(self.vars, exps)
                if e
            )
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append("-" + mono)
            else:
                chunks.append("%s*%s" % (c, mono))
        s = " + ".join(chunks)
        return s.replace("+ -", "- ")

    # -- arithmetic over a shared universe ---------------------------------

    def _add_like(self, other: "MPoly", sign: int) -> "MPoly":
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = out.get(exps, QQ(0)) + (c if sign > 0 else -c)
            if acc == 0:
                out.pop(exps, None)
            else:
                out[exps] = acc
        return MPoly(self.vars, out)

    def _mul_like(self, other: "MPoly") -> "MPoly":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(e, QQ(0)) + c1 * c2
                if acc == 0:
                    out.pop(e, None)
                else:
                    out[e] = acc
        return MPoly(self.vars, out)

    def __add__(self, other):
        return poly_arith(self, _coerce(other, self.vars), "add")

    def __radd__(self, other):
        return poly_arith(_coerce(other, self.vars), self, "add")

    def __sub__(self, other):
        return poly_arith(self, _coerce(other, self.vars), "sub")

    def __rsub__(self, other):
        return poly_arith(_coerce(other, self.vars), self, "sub")

    def __mul__(self, other):
        return poly_arith(self, _coerce(other, self.vars), "mul")

    def __rmul__(self, other):
        return poly_arith(_coerce(other, self.vars), self, "mul")

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        acc = MPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def scale(self, c) -> "MPoly":
        c = QQ(c)
        if c == 0:
            return MPoly(self.vars, {})
        return MPoly(self.vars, {e: c * v for e, v in self.terms.items()})

    # -- structure helpers -------------------------------------------------

    def align(self, variables) -> "MPoly":
        """Re-express over a (sorted) superset universe."""
        vs = tuple(sorted(variables))
        if vs == self.vars:
            return self
        if not set(self.vars) <= set(vs):
            raise ValueError("alignment universe must contain current variables")
        pos = [vs.index(v) for v in self.vars]
        out = {}
        for exps, c in self.terms.items():
            e = [0] * len(vs)
            for p, k in zip(pos, exps):
                e[p] = k
            out[tuple(e)] = c
        return MPoly(vs, out)

    def drop_unused(self) -> "MPoly":
        used = self.used_vars()
        if used == self.vars:
            return self
        keep = [i for i, v in enumerate(self.vars) if v in used]
        return MPoly(
            used,
            {tuple(e[i] for i in keep): c for e, c in self.terms.items()},
        )

    def coeffs_in(self, name: str) -> list:
        """List of MPoly coefficients [c0, c1, ...] viewing self in K[rest][name]."""
        if name not in self.vars:
            return [self]
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        d = self.degree(name)
        buckets: list = [dict() for _ in range(d + 1)]
        for exps, c in self.terms.items():
            e_rest = tuple(e for j, e in enumerate(exps) if j != i)
            buckets[exps[i]][e_rest] = c
        return [MPoly(rest, b) for b in buckets]

    def from_coeffs(self, name: str, coeffs: list) -> "MPoly":
        """Inverse of coeffs_in, reusing self only for the target universe."""
        vs = tuple(sorted(set(self.vars) | {name}))
        acc = MPoly.constant(0, vs)
        x = MPoly.var(name).align(vs)
        for k, c in enumerate(coeffs):
            acc = acc + c.align(vs) * (x ** k)
        return acc

    def evaluate(self, mapping: Mapping[str, object], one=None):
        """Substitute values for every used variable.

        Values only need +, * and ** among themselves and with rationals.
        """
        if one is None:
            one = QQ(1)
        acc = None
        for exps, c in self.terms.items():
            term = one * c
            for v, e in zip(self.vars, exps):
                if e:
                    term = term * (mapping[v] ** e)
            acc = term if acc is None else acc + term
        if acc is None:
            return one * QQ(0)
        return acc

    def content(self):
        """Positive rational c with self/c integral, primitive. Zero poly gives 0."""
        if not self.terms:
            return QQ(0)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(int(c.numerator)))
            den_lcm = den_lcm * int(c.denominator) // math.gcd(den_lcm, int(c.denominator))
        return QQ(num_gcd, den_lcm)

    def primitive(self) -> "MPoly":
        """Divide out content and normalize the graded-lex lead to be positive."""
        if not self.terms:
            return self
        c = self.content()
        p = self.scale(QQ(1) / c)
        if p.leading_coeff() < 0:
            p = -p
        return p


def _coerce(x, variables) -> MPoly:
    if isinstance(x, MPoly):
        return x
    return MPoly.constant(x, variables)


def poly_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    """Add, subtract or multiply after taking the union of variable universes."""
    if a.vars != b.vars:
        union = tuple(sorted(set(a.vars) | set(b.vars)))
        a = a.align(union)
        b = b.align(union)
    if op == "add":
        return a._add_like(b, +1)
    if op == "sub":
        return a._add_like(b, -1)
    if op == "mul":
        return a._mul_like(b)
    raise ValueError("unknown op %r, want add, sub or mul" % (op,))


def exact_div(a: MPoly, b: MPoly) -> MPoly:
    """Quotient q with a == q*b, or raise NotDivisible.

    Works by repeated graded-lex leading-term elimination, so it decides
    membership in the principal ideal (b) exactly.
    """
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    if a.is_zero():
        return MPoly.constant(0, a.vars)
    if a.vars != b.vars:
        union = tuple(sorted(set(a.vars) | set(b.vars)))
        a = a.align(union)
        b = b.align(union)
    lb_e, lb_c = b.leading_term()
    q: dict = {}
    r = a
    while not r.is_zero():
        lr_e, lr_c = r.leading_term()
        de = tuple(x - y for x, y in zip(lr_e, lb_e))
        if any(e < 0 for e in de):
            raise NotDivisible("leading term %r not divisible" % (lr_e,))
        dc = lr_c / lb_c
        q[de] = dc
        r = r._add_like(MPoly(b.vars, {de: dc})._mul_like(b), -1)
    return MPoly(b.vars, q)


# -- gcd -------------------------------------------------------------------


def _prem(f: list, g: list) -> list:
    """Pseudo-remainder of coefficient lists (univariate over MPoly coeffs)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and any(not c.is_zero() for c in f):
        while f and f[-1].is_zero():
            f.pop()
        if len(f) - 1 < dg:
            break
        df = len(f) - 1
        shift = df - dg
        top = f[-1]
        f = [c * lg for c in f]
        for i, gc in enumerate(g):
            f[i + shift] = f[i + shift] - top * gc
        f.pop()
        while f and f[-1].is_zero():
            f.pop()
    return f


def _gcd_univ_rational(f: list, g: list) -> list:
    """Monic Euclid over QQ for coefficient lists of constants."""
    fv = [c.constant_value() for c in f]
    gv = [c.constant_value() for c in g]

    def trim(h):
        while h and h[-1] == 0:
            h.pop()
        return h

    fv, gv = trim(fv), trim(gv)
    while gv:
        inv = QQ(1) / gv[-1]
        gv = [c * inv for c in gv]
        while len(fv) >= len(gv):
            shift = len(fv) - len(gv)
            top = fv[-1]
            for i, c in enumerate(gv):
                fv[i + shift] = fv[i + shift] - top * c
            fv = trim(fv)
            if not fv:
                break
        fv, gv = gv, fv
    return [MPoly.constant(c) for c in fv]


def poly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Primitive positive gcd via recursive primitive-PRS on the first used variable."""
    if a.is_zero():
        return b.primitive() if not b.is_zero() else MPoly.constant(0)
    if b.is_zero():
        return a.primitive()
    union = tuple(sorted(set(a.vars) | set(b.vars)))
    a = a.align(union)
    b = b.align(union)
    used = sorted(set(a.used_vars()) | set(b.used_vars()))
    if not used:
        return MPoly.constant(1)
    x = used[0]
    fa = [c.drop_unused() for c in a.coeffs_in(x)]
    fb = [c.drop_unused() for c in b.coeffs_in(x)]
    cont_a = _list_gcd(fa)
    cont_b = _list_gcd(fb)
    cont = poly_gcd(cont_a, cont_b)
    pa = [exact_div(c, cont_a) for c in fa]
    pb = [exact_div(c, cont_b) for c in fb]
    if len(used) == 1:
        prs = _gcd_univ_rational(pa, pb)
    else:
        prs = _prs_primitive(pa, pb)
    if not prs:
        g = MPoly.constant(1)
    else:
        g = MPoly.constant(0, union)
        xv = MPoly.var(x).align(union)
        gg = _list_gcd(prs)
        prim = [exact_div(c, gg) for c in prs]
        for k, c in enumerate(prim):
            g = g + c.align(union) * (xv ** k)
    return (g * cont.align(union)).primitive()


def _list_gcd(cs: list) -> MPoly:
    g = MPoly.constant(0)
    for c in cs:
        if not c.is_zero():
            g = poly_gcd(g, c)
    if g.is_zero():
        g = MPoly.constant(1)
    return g


def _prs_primitive(f: list, g: list) -> list:
    """Primitive polynomial remainder sequence; returns last nonzero entry."""

    def trim(h):
        while h and h[-1].is_zero():
            h.pop()
        return h

    f, g = trim(list(f)), trim(list(g))
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = trim(_prem(f, g))
        if r:
            cont = _list_gcd(r)
            r = [exact_div(c, cont) for c in r]
        f, g = g, r
    return f


# -- resultant -------------------------------------------------------------


def _strict_univariate_coeffs(f: MPoly, name: str) -> list:
    for v in f.used_vars():
        if v != name:
            raise NotUnivariateInVar(
                "polynomial involves %r, expected only %r" % (v, name)
            )
    return [c.constant_value() for c in f.coeffs_in(name)]


def resultant(f: MPoly, g: MPoly, name: str) -> "QQ":
    """Sylvester resultant of two univariate polynomials in the named variable.

    The matrix is laid out with the f coefficient rows first. Raises
    NotUnivariateInVar if either input has positive degree elsewhere.
    """
    fc = _strict_univariate_coeffs(f, name)
    gc = _strict_univariate_coeffs(g, name)
    if f.is_zero() or g.is_zero():
        return QQ(0)
    m = len(fc) - 1
    n = len(gc) - 1
    if m == 0 and n == 0:
        return QQ(1)
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    size = m + n
    rows = []
    frow = list(reversed(fc))
    grow = list(reversed(gc))
    for i in range(n):
        rows.append([QQ(0)] * i + frow + [QQ(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([QQ(0)] * i + grow + [QQ(0)] * (m - 1 - i))
    assert all(len(r) == size for r in rows)
    return det_fraction(rows)


def det_fraction(rows: list) -> "QQ":
    """Exact determinant of a square matrix of rationals by fraction Gauss."""
    n = len(rows)
    a = [list(map(QQ, r)) for r in rows]
    det = QQ(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return QQ(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col]
        inv = QQ(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det
