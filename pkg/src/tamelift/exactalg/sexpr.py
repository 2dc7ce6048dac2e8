"""Plain-text and JSON serialization for polynomials and rational functions.

The s-expression form is line-free and stable: variables sorted, terms in
descending graded-lex order, coefficients as "n" or "n/d".

    (poly (vars x y) (t 3/2 (2 0)) (t -1 (0 1)))
    (ratfunc <poly> <poly>)
"""

from __future__ import annotations

from .mpoly import MPoly, QQ
from .ratfunc import RatFunc


def poly_to_sexpr(p: MPoly) -> str:
    parts = ["(vars %s)" % " ".join(p.vars)]
    for exps, c in p.sorted_terms():
        parts.append("(t %s (%s))" % (c, " ".join(str(e) for e in exps)))
    return "(poly %s)" % " ".join(parts)


def poly_to_json(p: MPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [
            {"c": str(c), "e": list(exps)} for exps, c in p.sorted_terms()
        ],
    }


def poly_from_json(d: dict) -> MPoly:
    return MPoly(tuple(d["vars"]), {tuple(t["e"]): QQ(t["c"]) for t in d["terms"]})


def ratfunc_to_sexpr(r: RatFunc) -> str:
    return "(ratfunc %s %s)" % (poly_to_sexpr(r.num), poly_to_sexpr(r.den))


def ratfunc_to_json(r: RatFunc) -> dict:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(d: dict) -> RatFunc:
    return RatFunc(poly_from_json(d["num"]), poly_from_json(d["den"]))


# -- s-expression reader ---------------------------------------------------


def _tokenize(s: str):
    return s.replace("(", " ( ").replace(")", " ) ").split()


def _read(tokens: list, pos: int):
    if tokens[pos] != "(":
        return tokens[pos], pos + 1
    out = []
    pos += 1
    while tokens[pos] != ")":
        node, pos = _read(tokens, pos)
        out.append(node)
    return out, pos + 1


def _parse_poly_node(node) -> MPoly:
    if not (isinstance(node, list) and node and node[0] == "poly"):
        raise ValueError("expected (poly ...), got %r" % (node,))
    varnode = node[1]
    if not (isinstance(varnode, list) and varnode and varnode[0] == "vars"):
        raise ValueError("expected (vars ...) after poly")
    variables = tuple(varnode[1:])
    terms = {}
    for t in node[2:]:
        if not (isinstance(t, list) and len(t) == 3 and t[0] == "t"):
            raise ValueError("bad term node %r" % (t,))
        coeff = QQ(t[1])
        exps = tuple(int(e) for e in t[2])
        terms[exps] = coeff
    return MPoly(variables, terms)


def poly_from_sexpr(s: str) -> MPoly:
    node, _ = _read(_tokenize(s), 0)
    return _parse_poly_node(node)


def ratfunc_from_sexpr(s: str) -> RatFunc:
    node, _ = _read(_tokenize(s), 0)
    if not (isinstance(node, list) and node and node[0] == "ratfunc"):
        raise ValueError("expected (ratfunc ...)")
    return RatFunc(_parse_poly_node(node[1]), _parse_poly_node(node[2]))
