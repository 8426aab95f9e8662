"""Brute-force reference computations used as independent test oracles.

Everything here works directly from definitions (monomials, colourings,
orientations) and shares no code with the algorithms under test beyond the
Poly container.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations, product

from chromapleth.poly import Poly


def mono(exps: dict) -> Poly:
    return Poly({tuple(sorted((k, e) for k, e in exps.items() if e)): 1})


def xs(n: int, name: str = "x") -> list[str]:
    return [f"{name}{i}" for i in range(1, n + 1)]


def power_sum(k: int, n: int, name: str = "x") -> Poly:
    out = Poly()
    for v in xs(n, name):
        out = out + Poly.var(v, k)
    return out


def elementary(k: int, n: int) -> Poly:
    out = Poly()
    for combo in combinations(xs(n), k):
        out = out + mono({v: 1 for v in combo})
    return out


def complete(k: int, n: int) -> Poly:
    out = Poly()
    for combo in combinations_with_replacement(xs(n), k):
        exps: dict = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + 1
        out = out + mono(exps)
    return out


def monomial_sym(lam, n: int) -> Poly:
    """m_lam(x1..xn): sum over distinct rearrangements of lam padded with zeros."""
    lam = list(lam)
    if len(lam) > n:
        return Poly()
    padded = lam + [0] * (n - len(lam))
    out = Poly()
    for perm in set(permutations(padded)):
        out = out + mono(dict(zip(xs(n), perm)))
    return out


def product_of(fn, parts, n: int) -> Poly:
    out = Poly.const(1)
    for k in parts:
        out = out * fn(k, n)
    return out


def proper_colouring_sum(n_vertices: int, weights, edges, colours) -> Poly:
    """X(G) evaluated at the monomials ``colours`` (each a dict of exponents).

    Adjacent vertices need different colour indices; a loop forbids everything.
    """
    out = Poly()
    for assign in product(range(len(colours)), repeat=n_vertices):
        if any(assign[i] == assign[j] for i, j in edges):
            continue
        exps: dict = {}
        for v, c in enumerate(assign):
            for k, e in colours[c].items():
                exps[k] = exps.get(k, 0) + e * weights[v]
        out = out + mono(exps)
    return out


def all_colouring_sum(n_vertices: int, weights, edges, colours) -> Poly:
    """XB(G) at ``colours``: every colouring, weighted by (1+t)^(monochromatic edges)."""
    one_t = Poly.const(1) + Poly.var("t")
    out = Poly()
    for assign in product(range(len(colours)), repeat=n_vertices):
        bad = sum(1 for i, j in edges if assign[i] == assign[j])
        exps: dict = {}
        for v, c in enumerate(assign):
            for k, e in colours[c].items():
                exps[k] = exps.get(k, 0) + e * weights[v]
        out = out + mono(exps) * one_t ** bad
    return out


def count_acyclic(n_vertices: int, edges) -> int:
    """Acyclic orientations, by trying all 2^|E| and testing for a topological order."""
    count = 0
    for dirs in product((0, 1), repeat=len(edges)):
        arcs = [(i, j) if d == 0 else (j, i) for (i, j), d in zip(edges, dirs)]
        if any(a == b for a, b in arcs):
            continue
        remaining = set(range(n_vertices))
        live = list(arcs)
        while remaining:
            sources = [v for v in remaining if not any(b == v for _, b in live)]
            if not sources:
                break
            remaining -= set(sources)
            live = [(a, b) for a, b in live if a in remaining]
        if not remaining:
            count += 1
    return count


def chromatic_count(n_vertices: int, edges, n: int) -> int:
    """Proper colourings with n colours, by brute force."""
    return sum(
        1
        for assign in product(range(n), repeat=n_vertices)
        if all(assign[i] != assign[j] for i, j in edges)
    )
