"""Algebraic plethysm from the power-sum rewrite rules.

``p_n`` acts on an expression by structural recursion: constants are fixed,
a parameter ``q`` goes to ``q^n``, an alphabet to its n-th power sum, sums and
products are preserved, ``-`` negates and ``eps`` contributes ``(-1)^n``.
Everything else follows by linearity and multiplicativity in the outer
function.  This is the reference the combinatorial formulas are checked
against, so it shares no code with :mod:`chromapleth.csf`.
"""

from __future__ import annotations

from typing import Union

from .alphabet import (
    Alphabet,
    Bounds,
    Eps,
    Int,
    Neg,
    One,
    Param,
    PlethExpr,
    Prod,
    Sum,
    Var,
    _resolve_bound,
)
from .poly import Poly, var_key
from .symfunc import SymFunc

PlethResult = Union[Poly, SymFunc]


def pleth_p_on_expr(n: int, e: PlethExpr, bounds: Bounds = None) -> Poly:
    """``p_n[e]`` as a truncated polynomial."""
    if n < 1:
        raise ValueError("power-sum index must be positive")
    if isinstance(e, One):
        return Poly.const(1)
    if isinstance(e, Int):
        return Poly.const(e.value)
    if isinstance(e, Param):
        return Poly.var(e.name, n)
    if isinstance(e, Var):
        return Poly.var(f"{e.name}{e.index}", n)
    if isinstance(e, Alphabet):
        size = e.bound if e.bound is not None else _resolve_bound(e.name, bounds)
        return Poly({((f"{e.name}{i}", n),): 1 for i in range(1, size + 1)})
    if isinstance(e, Sum):
        return pleth_p_on_expr(n, e.left, bounds) + pleth_p_on_expr(n, e.right, bounds)
    if isinstance(e, Prod):
        return pleth_p_on_expr(n, e.left, bounds) * pleth_p_on_expr(n, e.right, bounds)
    if isinstance(e, Neg):
        return -pleth_p_on_expr(n, e.child, bounds)
    if isinstance(e, Eps):
        child = pleth_p_on_expr(n, e.child, bounds)
        return -child if n % 2 else child
    raise TypeError(f"not an expression node: {e!r}")


def pleth_symfunc(f: SymFunc, g: SymFunc) -> SymFunc:
    """``f[g]`` in the power-sum basis; coefficient parameters stay fixed."""
    gp = g.to_p()
    cache: dict[int, SymFunc] = {}

    def pn(k: int) -> SymFunc:
        if k not in cache:
            cache[k] = SymFunc("p", {lam.scaled(k): c for lam, c in gp.terms.items()})
        return cache[k]

    out = SymFunc.zero()
    for lam, c in f.to_p().terms.items():
        term = SymFunc.one() * c
        for part in lam:
            term = term * pn(part)
        out = out + term
    return out


def pleth(f: SymFunc, e: "PlethExpr | SymFunc", bounds: Bounds = None) -> PlethResult:
    """``f[e]``: a :class:`SymFunc` when ``e`` is one, else a truncated :class:`Poly`."""
    if isinstance(e, SymFunc):
        return pleth_symfunc(f, e)
    cache: dict[int, Poly] = {}
    out = Poly()
    for lam, c in f.to_p().terms.items():
        term = c
        for part in lam:
            if part not in cache:
                cache[part] = pleth_p_on_expr(part, e, bounds)
            term = term * cache[part]
        out = out + term
    return out


def expr_from_poly(poly: Poly, params: frozenset[str] = frozenset("abcqrs")) -> PlethExpr:
    """Monomial-expansion alphabet of a polynomial with integer coefficients.

    Each monomial becomes a product of single variables, repeated ``|c|`` times
    and negated when ``c < 0``; e.g. ``x1*x2 + x1*x3`` gives the alphabet
    ``{x1 x2, x1 x3}``.
    """
    pieces: list[PlethExpr] = []
    for mono, c in sorted(poly.terms.items(), key=lambda kv: [(var_key(v), e) for v, e in kv[0]]):
        if c != int(c):
            raise ValueError("only integer coefficients have a monomial alphabet")
        factors: list[PlethExpr] = []
        for v, k in mono:
            name, idx = var_key(v)
            atom = Param(v) if (idx == 0 and v in params) else Var(name, idx)
            factors.extend([atom] * k)
        node = factors[0] if factors else One()
        for fac in factors[1:]:
            node = Prod(node, fac)
        if c < 0:
            node = Neg(node)
        pieces.extend([node] * abs(int(c)))
    if not pieces:
        return Int(0)
    out = pieces[0]
    for piece in pieces[1:]:
        out = Sum(out, piece)
    return out


def expr_from_symfunc(g: SymFunc, n_vars: int, alphabet: str = "x") -> PlethExpr:
    """Alphabet of ``g`` restricted to ``n_vars`` variables."""
    return expr_from_poly(g.expand(n_vars, alphabet))
