"""Chromatic and Tutte symmetric functions of vertex-weighted graphs.

Three independent routes compute each function exactly: a fold over edge
subsets, a sum over (stable) set partitions, and memoized
deletion-contraction.  The plethysms ``X[f]`` and ``XB[f]`` are computed
combinatorially, as sums over pairs of an (acyclic) orientation or
biorientation and a colouring by the variable set of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .alphabet import Bounds, PlethExpr, VarSet, integer, ordering_from_spec, var_set
from .poly import Poly
from .symfunc import Partition, SymFunc
from .wgraph import (
    BOTH,
    BWD,
    FWD,
    Biorientation,
    Orientation,
    WeightedGraph,
    _is_dag,
    acyclic_biorientations,
    acyclic_orientations,
    all_set_partitions,
    biorientation_is_acyclic,
    stable_partitions,
)

T = Poly.var("t")
ONE_PLUS_T = Poly.const(1) + T


# ---------------------------------------------------------------------------
# edge-subset expansion
# ---------------------------------------------------------------------------

def subset_statistics(g: WeightedGraph) -> dict[tuple[Partition, int], int]:
    """Number of edge subsets ``S`` for each ``(lambda(S), |S|)``.

    Folds the ``2^|E|`` subsets edge by edge, keeping only the component
    structure of the vertices reached so far.
    """
    n = g.n
    states: dict[tuple, dict[int, int]] = {tuple(range(n)): {0: 1}}
    for i, j in g.edges:
        nxt: dict[tuple, dict[int, int]] = {}
        for comp, counts in states.items():
            bucket = nxt.setdefault(comp, {})
            for k, c in counts.items():
                bucket[k] = bucket.get(k, 0) + c
            a, b = comp[i], comp[j]
            if a == b:
                merged = comp
            else:
                lo, hi = min(a, b), max(a, b)
                merged = tuple(lo if x == hi else x for x in comp)
            bucket = nxt.setdefault(merged, {})
            for k, c in counts.items():
                bucket[k + 1] = bucket.get(k + 1, 0) + c
        states = nxt
    out: dict[tuple[Partition, int], int] = {}
    for comp, counts in states.items():
        totals: dict[int, int] = {}
        for v, root in enumerate(comp):
            totals[root] = totals.get(root, 0) + g.weights[v]
        lam = Partition.of(totals.values())
        for k, c in counts.items():
            out[(lam, k)] = out.get((lam, k), 0) + c
    return out


def x_via_subsets(g: WeightedGraph) -> SymFunc:
    acc: dict[Partition, int] = {}
    for (lam, k), c in subset_statistics(g).items():
        acc[lam] = acc.get(lam, 0) + (-c if k % 2 else c)
    return SymFunc("p", acc)


def xb_via_subsets(g: WeightedGraph) -> SymFunc:
    acc: dict[Partition, Poly] = {}
    for (lam, k), c in subset_statistics(g).items():
        term = Poly.var("t", k) * c if k else Poly.const(c)
        acc[lam] = acc.get(lam, Poly()) + term
    return SymFunc("p", acc)


# ---------------------------------------------------------------------------
# set-partition expansion
# ---------------------------------------------------------------------------

def x_via_stable_partitions(g: WeightedGraph) -> SymFunc:
    acc: dict[Partition, int] = {}
    for pi in stable_partitions(g):
        lam = pi.lam(g)
        acc[lam] = acc.get(lam, 0) + 1
    return SymFunc("mt", acc)


def xb_via_partitions(g: WeightedGraph) -> SymFunc:
    acc: dict[Partition, Poly] = {}
    for pi in all_set_partitions(g):
        lam = pi.lam(g)
        acc[lam] = acc.get(lam, Poly()) + ONE_PLUS_T ** pi.internal_edges(g)
    return SymFunc("mt", acc)


# ---------------------------------------------------------------------------
# deletion-contraction
# ---------------------------------------------------------------------------

_X_MEMO: dict[tuple, SymFunc] = {}
_XB_MEMO: dict[tuple, SymFunc] = {}


def clear_memo() -> None:
    _X_MEMO.clear()
    _XB_MEMO.clear()


def x_via_delcon(g: WeightedGraph) -> SymFunc:
    """``X(G) = X(G - e) - X(G / e)`` down to edgeless graphs."""
    key = g.key()
    hit = _X_MEMO.get(key)
    if hit is not None:
        return hit
    if not g.edges:
        out = SymFunc("p", {g.weight_partition(): 1})
    else:
        out = x_via_delcon(g.delete_edge(0)) - x_via_delcon(g.contract_edge(0))
    _X_MEMO[key] = out
    return out


def xb_via_delcon(g: WeightedGraph) -> SymFunc:
    """``XB(G) = XB(G - e) + t XB(G / e)`` down to edgeless graphs."""
    key = g.key()
    hit = _XB_MEMO.get(key)
    if hit is not None:
        return hit
    if not g.edges:
        out = SymFunc("p", {g.weight_partition(): 1})
    else:
        out = xb_via_delcon(g.delete_edge(0)) + xb_via_delcon(g.contract_edge(0)) * T
    _XB_MEMO[key] = out
    return out


# ---------------------------------------------------------------------------
# colourings by a variable set
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    """A map from vertices to elements of a variable set (by element index)."""

    varset: VarSet
    colours: tuple

    def negative_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.colours) if self.varset[c].sign < 0]

    def negative_weight(self, g: WeightedGraph) -> int:
        return g.weight_of(self.negative_vertices())

    def monochromatic_edges(self, g: WeightedGraph) -> int:
        return sum(1 for i, j in g.edges if self.colours[i] == self.colours[j])

    def monomial(self, g: WeightedGraph) -> Poly:
        """``prod_v kappa(v)^w(v)`` with primes erased, sign flags ignored."""
        out = Poly.const(1)
        for v, c in enumerate(self.colours):
            z = self.varset[c]
            w = g.weights[v]
            mono = Poly({tuple(sorted((k, e * w) for k, e in z.base_exponents().items())): 1})
            if z.parity and w % 2:
                mono = -mono
            out = out * mono
        return out


class _Encoded:
    """Dense exponent-vector encoding of a variable set for the inner loops."""

    def __init__(self, vs: VarSet):
        from .poly import var_key

        names = sorted({k for z in vs for k in z.base_exponents()}, key=var_key)
        self.names = names
        index = {k: i for i, k in enumerate(names)}
        self.base = []
        for z in vs:
            vec = [0] * len(names)
            for k, e in z.base_exponents().items():
                vec[index[k]] = e
            self.base.append(vec)
        self.sign = [z.sign for z in vs]
        self.parity = [z.parity for z in vs]

    def to_poly(self, acc: dict[tuple, object]) -> Poly:
        names = self.names
        return Poly({
            tuple((names[i], e) for i, e in enumerate(vec) if e): c for vec, c in acc.items()
        })


def _pattern(colours: Sequence[int], rank: Sequence[int], sign: Sequence[int]) -> tuple:
    ranks = [rank[c] for c in colours]
    dense = {r: k for k, r in enumerate(sorted(set(ranks)))}
    return tuple((dense[r], sign[c]) for r, c in zip(ranks, colours))


def _classes(g: WeightedGraph, pattern: tuple):
    """Split edges by colour class.

    Returns ``None`` if some edge joins two vertices of one positive colour,
    else the map from each negative class to its vertices and internal edges.
    Edges between classes are always singly directed up the order, so no
    directed cycle can leave a class and the count factors over classes.
    """
    classes: dict[int, tuple[list[int], list[tuple[int, int]]]] = {}
    for i, j in g.edges:
        (ri, si), (rj, _) = pattern[i], pattern[j]
        if ri != rj:
            continue
        if si > 0:
            return None
        classes.setdefault(ri, ([], []))[1].append((i, j))
    for v, (r, s) in enumerate(pattern):
        if r in classes:
            classes[r][0].append(v)
    return classes


def _relabel(vertices: list[int], edges: list[tuple[int, int]]) -> tuple[int, list[tuple[int, int]]]:
    pos = {v: k for k, v in enumerate(vertices)}
    return len(vertices), [(pos[i], pos[j]) for i, j in edges]


def _compatible_orientations(g: WeightedGraph, pattern: tuple) -> int:
    """Acyclic orientations with ``u -> v`` only when ``kappa(u) <= kappa(v)``.

    Edges between different colours are forced upward in the order; edges
    between equal negative colours are free and enumerated with a cycle check.
    """
    classes = _classes(g, pattern)
    if classes is None:
        return 0
    total = 1
    for vertices, edges in classes.values():
        n, local = _relabel(vertices, edges)
        count = 0
        for dirs in product((FWD, BWD), repeat=len(local)):
            arcs = [(i, j) if d == FWD else (j, i) for (i, j), d in zip(local, dirs)]
            if _is_dag(n, arcs):
                count += 1
        if not count:
            return 0
        total *= count
    return total


def _compatible_biorientations(g: WeightedGraph, pattern: tuple) -> dict[int, int]:
    """``{|B|: sum of (-1)^c(N)}`` over compatible acyclic biorientations."""
    n_both = 0
    for i, j in g.edges:
        (ri, si), (rj, _) = pattern[i], pattern[j]
        if ri == rj and si > 0:
            n_both += 1
    negative = [(v, r) for v, (r, s) in enumerate(pattern) if s < 0]
    classes: dict[int, tuple[list[int], list[tuple[int, int]]]] = {}
    for v, r in negative:
        classes.setdefault(r, ([], []))[0].append(v)
    for i, j in g.edges:
        (ri, si), (rj, _) = pattern[i], pattern[j]
        if ri == rj and si < 0:
            classes[ri][1].append((i, j))
    out = {n_both: 1}
    for vertices, edges in classes.values():
        n, local = _relabel(vertices, edges)
        dist: dict[int, int] = {}
        for states in product((FWD, BWD, BOTH), repeat=len(local)):
            if not biorientation_is_acyclic(n, local, states):
                continue
            both = [e for e, s in zip(local, states) if s == BOTH]
            comps = _count_components(range(n), both)
            dist[len(both)] = dist.get(len(both), 0) + (-1 if comps % 2 else 1)
        merged: dict[int, int] = {}
        for b1, c1 in out.items():
            for b2, c2 in dist.items():
                merged[b1 + b2] = merged.get(b1 + b2, 0) + c1 * c2
        out = {b: c for b, c in merged.items() if c}
        if not out:
            break
    return out


def _neighbours_before(g: WeightedGraph) -> list[list[int]]:
    before: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.edges:
        before[max(i, j)].append(min(i, j))
    return before


def x_pleth_combinatorial(
    g: WeightedGraph, e: PlethExpr, bounds: Bounds = None, ordering=None
) -> Poly:
    """``X_(G,w)[e]`` as a sum over (acyclic orientation, colouring) pairs.

    Colourings by ``Var(e)`` never give equal positive colours to adjacent
    vertices; each colouring is weighted by the number of compatible acyclic
    orientations and contributes ``prod_v sgn(kappa(v)) kappa(v)^w(v)``.
    """
    vs = var_set(e, bounds)
    rank = ordering_from_spec(vs, ordering)
    return _x_sum(g, vs, rank)


def _x_sum(g: WeightedGraph, vs: VarSet, rank: Sequence[int]) -> Poly:
    enc = _Encoded(vs)
    n, k = g.n, len(vs)
    width = len(enc.names)
    before = _neighbours_before(g)
    weights = g.weights
    # per-vertex, per-colour (sign factor, exponent increment)
    table = []
    for v in range(n):
        w = weights[v]
        row = []
        for c in range(k):
            s = enc.sign[c] * (-1 if (enc.parity[c] and w % 2) else 1)
            row.append((s, [b * w for b in enc.base[c]]))
        table.append(row)
    positive = [s > 0 for s in enc.sign]
    counts: dict[tuple, int] = {}
    acc: dict[tuple, int] = {}
    colours = [0] * n
    expo = [0] * width

    def rec(v: int, sgn: int):
        if v == n:
            key = _pattern(colours, rank, enc.sign)
            cnt = counts.get(key)
            if cnt is None:
                cnt = counts[key] = _compatible_orientations(g, key)
            if cnt:
                vec = tuple(expo)
                acc[vec] = acc.get(vec, 0) + sgn * cnt
            return
        nb = before[v]
        for c in range(k):
            if positive[c] and any(colours[u] == c for u in nb if u != v):
                continue
            if positive[c] and v in nb:
                continue
            colours[v] = c
            s, inc = table[v][c]
            for i, d in enumerate(inc):
                expo[i] += d
            rec(v + 1, sgn * s)
            for i, d in enumerate(inc):
                expo[i] -= d

    rec(0, 1)
    return enc.to_poly(acc)


def _count_components(vertices: Sequence[int], edges: Sequence[tuple[int, int]]) -> int:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = len(parent)
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            comps -= 1
    return comps


def xb_pleth_combinatorial(
    g: WeightedGraph, e: PlethExpr, bounds: Bounds = None, ordering=None
) -> Poly:
    """``XB_(G,w)[e]`` over (acyclic biorientation, colouring) pairs, in Q[t].

    Edges climbing the order are singly directed upward, edges with equal
    positive colours are bidirected, edges with equal negative colours take
    any of the three states.  A pair contributes
    ``(1+t)^|B| (-1)^c(N) prod_v kappa(v)^w(v)`` where ``N`` is the graph of
    bidirected edges on negatively signed vertices.
    """
    vs = var_set(e, bounds)
    rank = ordering_from_spec(vs, ordering)
    return _xb_sum(g, vs, rank)


def _xb_sum(g: WeightedGraph, vs: VarSet, rank: Sequence[int]) -> Poly:
    enc = _Encoded(vs)
    n, k = g.n, len(vs)
    width = len(enc.names)
    weights = g.weights
    table = []
    for v in range(n):
        w = weights[v]
        row = []
        for c in range(k):
            s = -1 if (enc.parity[c] and w % 2) else 1
            row.append((s, [b * w for b in enc.base[c]]))
        table.append(row)
    counts: dict[tuple, dict[int, int]] = {}
    acc: dict[tuple, int] = {}
    colours = [0] * n
    expo = [0] * width

    def rec(v: int, sgn: int):
        if v == n:
            key = _pattern(colours, rank, enc.sign)
            by_b = counts.get(key)
            if by_b is None:
                by_b = counts[key] = _compatible_biorientations(g, key)
            if by_b:
                vec = tuple(expo)
                for b, c in by_b.items():
                    acc[(vec, b)] = acc.get((vec, b), 0) + sgn * c
            return
        for c in range(k):
            colours[v] = c
            s, inc = table[v][c]
            for i, d in enumerate(inc):
                expo[i] += d
            rec(v + 1, sgn * s)
            for i, d in enumerate(inc):
                expo[i] -= d

    rec(0, 1)
    by_power: dict[int, dict[tuple, int]] = {}
    for (vec, b), c in acc.items():
        if c:
            by_power.setdefault(b, {})[vec] = c
    out = Poly()
    for b, part in by_power.items():
        out = out + enc.to_poly(part) * ONE_PLUS_T ** b
    return out


# ---------------------------------------------------------------------------
# explicit pair enumeration (slow; used to cross-check the counting above)
# ---------------------------------------------------------------------------

def iter_pairs(g: WeightedGraph, vs: VarSet, rank: Sequence[int]) -> Iterator[tuple[Orientation, Coloring]]:
    """Every valid pair of an acyclic orientation and a colouring, literally."""
    orientations = list(acyclic_orientations(g))
    for colours in product(range(len(vs)), repeat=g.n):
        for i, j in g.edges:
            if colours[i] == colours[j] and vs[colours[i]].sign > 0:
                break
        else:
            for o in orientations:
                if all(rank[colours[a]] <= rank[colours[b]] for a, b in o.arcs(g)):
                    yield o, Coloring(vs, colours)


def iter_bipairs(
    g: WeightedGraph, vs: VarSet, rank: Sequence[int]
) -> Iterator[tuple[Biorientation, Coloring]]:
    bios = list(acyclic_biorientations(g))
    for colours in product(range(len(vs)), repeat=g.n):
        for b in bios:
            ok = True
            for (i, j), s in zip(g.edges, b.states):
                ci, cj = colours[i], colours[j]
                ri, rj = rank[ci], rank[cj]
                if ri != rj:
                    want = FWD if ri < rj else BWD
                    if s != want:
                        ok = False
                        break
                elif vs[ci].sign > 0 and s != BOTH:
                    ok = False
                    break
            if ok:
                yield b, Coloring(vs, colours)


def x_pleth_by_pairs(g: WeightedGraph, e: PlethExpr, bounds: Bounds = None, ordering=None) -> Poly:
    vs = var_set(e, bounds)
    rank = ordering_from_spec(vs, ordering)
    out = Poly()
    for _, col in iter_pairs(g, vs, rank):
        sign = 1
        for c in col.colours:
            sign *= vs[c].sign
        out = out + col.monomial(g) * sign
    return out


def xb_pleth_by_pairs(g: WeightedGraph, e: PlethExpr, bounds: Bounds = None, ordering=None) -> Poly:
    vs = var_set(e, bounds)
    rank = ordering_from_spec(vs, ordering)
    out = Poly()
    for b, col in iter_bipairs(g, vs, rank):
        both = [g.edges[k] for k in b.bidirected()]
        neg = col.negative_vertices()
        negset = set(neg)
        comps = _count_components(neg, [(i, j) for i, j in both if i in negset and j in negset])
        term = col.monomial(g) * ONE_PLUS_T ** len(both)
        out = out + (-term if comps % 2 else term)
    return out


# ---------------------------------------------------------------------------
# chromatic polynomial
# ---------------------------------------------------------------------------

_CHI_MEMO: dict[tuple, list] = {}


def classical_chromatic(g: WeightedGraph, n: int) -> int:
    """Number of proper n-colourings by deletion-contraction on the unweighted graph."""
    key = (g.n, tuple(sorted(g.edges)), n)
    if key in _CHI_MEMO:
        return _CHI_MEMO[key]
    if g.has_loop():
        out = 0
    elif not g.edges:
        out = n ** g.n
    else:
        out = classical_chromatic(g.delete_edge(0), n) - classical_chromatic(g.contract_edge(0), n)
    _CHI_MEMO[key] = out
    return out


def chromatic_polynomial(g: WeightedGraph, n: int, check: bool = True) -> int:
    """``X_(G,w)[n]``, i.e. the chromatic polynomial of ``G`` evaluated at ``n``."""
    value = x_pleth_combinatorial(g, integer(n)).constant_value()
    if check:
        classical = classical_chromatic(g, n)
        if value != classical:
            raise ArithmeticError(
                f"combinatorial X[{n}] = {value} disagrees with deletion-contraction {classical}"
            )
    return value
