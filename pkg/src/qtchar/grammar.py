"""Monomial text grammar and element serialization.

A monomial string is a whitespace-separated product of factors, evaluated
left to right in the twisted algebra:

    Y[i,l]       generator, optional ^e with e a nonzero integer
    Y[l]         shorthand for node 1 (rank-1 inputs)
    A[i,l]^-e    inverse A-variable; positive A exponents are rejected
    t^a          central t-power (bare t means t^1)
    : ... :      normal-ordered group; the enclosed Y/A factors are combined
                 as a plain exponent map, with no commutation t-powers

Serialized elements carry each basis monomial as its plain exponent map
(the normal-ordered string), so parse(serialize(x)) == x exactly.
"""

from __future__ import annotations

import re

from .algebra import Monomial, YtAlgebra, YtElement
from .errors import ParseError
from .tpoly import TPoly

_FACTOR = re.compile(
    r"^(?P<var>[YA])\[(?P<idx>-?\d+(?:,-?\d+)?)\](?:\^(?P<exp>-?\d+))?$"
)
_TPOW = re.compile(r"^t(?:\^(?P<exp>-?\d+))?$")


def _parse_factor(tok: str):
    """Return ('t', a) or (var, i, l, e)."""
    m = _TPOW.match(tok)
    if m:
        return ("t", int(m.group("exp") or 1))
    m = _FACTOR.match(tok)
    if not m:
        raise ParseError(f"bad factor {tok!r}")
    idx = m.group("idx").split(",")
    if len(idx) == 1:
        i, l = 1, int(idx[0])
    else:
        i, l = int(idx[0]), int(idx[1])
    e = int(m.group("exp")) if m.group("exp") is not None else 1
    var = m.group("var")
    if e == 0:
        raise ParseError(f"zero exponent in {tok!r}")
    if var == "A" and e > 0:
        raise ParseError(f"positive A exponent in {tok!r}")
    return (var, i, l, e)


def _factor_exponents(alg: YtAlgebra, factor) -> Monomial:
    var, i, l, e = factor
    if i not in alg.cartan.nodes():
        raise ParseError(f"node {i} outside rank-{alg.cartan.n} algebra")
    if var == "Y":
        return Monomial.y(i, l, e)
    return alg.a_expand_inv(i, l).power(-e)


def parse_monomial(alg: YtAlgebra, text: str) -> YtElement:
    """Evaluate a monomial string to a single-term element."""
    toks = text.split()
    if not toks:
        raise ParseError("empty monomial")
    result = YtElement.unit()
    group = None  # exponent dict while inside : ... :
    for tok in toks:
        if tok == ":":
            if group is None:
                group = {}
            else:
                result = alg.mul(result, YtElement.from_monomial(Monomial(group)))
                group = None
            continue
        factor = _parse_factor(tok)
        if factor[0] == "t":
            if group is not None:
                raise ParseError("t-powers are not allowed inside : ... : groups")
            result = result.scale(TPoly.t_power(factor[1]))
            continue
        exps = _factor_exponents(alg, factor)
        if group is not None:
            for k, e in exps.items():
                group[k] = group.get(k, 0) + e
        else:
            result = alg.mul(result, YtElement.from_monomial(exps))
    if group is not None:
        raise ParseError("unterminated : ... : group")
    return result


def parse_element_lines(alg: YtAlgebra, text: str) -> YtElement:
    """Sum of monomial strings, one term per line; '#' starts a comment."""
    total = YtElement.zero()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            total = total + parse_monomial(alg, line)
    return total


def parse_basis_monomial(text: str) -> Monomial:
    """Plain exponent map: Y factors only, no evaluation order involved."""
    d = {}
    for tok in text.split():
        factor = _parse_factor(tok)
        if factor[0] != "Y":
            raise ParseError(f"basis monomial may only contain Y factors, got {tok!r}")
        _, i, l, e = factor
        d[(i, l)] = d.get((i, l), 0) + e
    return Monomial(d)


def format_basis_monomial(m: Monomial) -> str:
    return str(m)  # Monomial.__str__ already emits the grammar


def serialize_tpoly(p: TPoly) -> dict:
    return {str(e): c for e, c in p.sorted_items()}


def parse_tpoly(obj: dict) -> TPoly:
    return TPoly({int(e): int(c) for e, c in obj.items()})


def serialize_element(x: YtElement) -> dict:
    return {
        "terms": [
            {"coeff": serialize_tpoly(p), "monomial": format_basis_monomial(m)}
            for m, p in x.sorted_terms()
        ]
    }


def parse_element(obj: dict) -> YtElement:
    terms = {}
    for item in obj.get("terms", []):
        m = parse_basis_monomial(item["monomial"])
        terms[m] = terms.get(m, TPoly.zero()) + parse_tpoly(item["coeff"])
    return YtElement(terms)


def format_element_text(x: YtElement) -> str:
    if x.is_zero():
        return "0"
    return "\n".join(f"({p})  {m}" for m, p in x.sorted_terms())


# Rep-monomials reuse the same grammar with X in place of Y.


def parse_rep_monomial(text: str) -> Monomial:
    d = {}
    for tok in text.split():
        tok2 = tok.replace("X[", "Y[", 1) if tok.startswith("X[") else tok
        factor = _parse_factor(tok2)
        if factor[0] != "Y":
            raise ParseError(f"Rep-monomial may only contain X factors, got {tok!r}")
        _, i, l, e = factor
        if e < 0:
            raise ParseError(f"negative exponent in Rep-monomial factor {tok!r}")
        d[(i, l)] = d.get((i, l), 0) + e
    return Monomial(d)
