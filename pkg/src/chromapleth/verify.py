"""Instance-level verification of the plethystic identities.

Every check computes its two sides along separate routes: typically one side
by algebraic plethysm in the power-sum basis and the other by a direct
combinatorial enumeration.  A check returns an :class:`IdentityReport`;
failures carry the lexicographically least term on which the sides differ.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial
from typing import Callable, Iterator, Sequence

from . import csf
from .alphabet import Alphabet, Eps, Neg, One, PlethExpr, Sum, integer, parse_expr
from .corpus import Instance, default_corpus, multigraph_instances
from .plethysm import pleth
from .poly import Poly, var_key
from .symfunc import Partition, SymFunc, e as e_basis, h as h_basis, mt, partitions
from .wgraph import (
    WeightedGraph,
    acyclic_orientations,
    all_set_partitions,
    complete_graph,
    count_acyclic_orientations,
    source_components,
    Orientation,
)

DEFAULT_BOUND = 3
MAX_CONVOLUTION = 6

X_EXPRESSIONS = ("1", "-1", "3", "x", "-x", "eps(x)", "x+y", "q*x", "2*x", "x*y")
COPRODUCT_PAIRS = (("x", "y"), ("-x", "eps(y)"))


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class IdentityReport:
    identity: str
    instance: dict
    passed: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"identity": self.identity, "instance": self.instance, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        desc = ", ".join(f"{k}={v}" for k, v in self.instance.items())
        text = f"{status} {self.identity} [{desc}]"
        if self.witness:
            text += f" witness {self.witness['term']}: {self.witness['lhs']} != {self.witness['rhs']}"
        return text


def _coeff_text(c) -> str:
    return c.to_text() if isinstance(c, Poly) else str(c)


def witness(lhs, rhs) -> dict | None:
    """Least term (exponent vector or partition) with differing coefficients."""
    if isinstance(lhs, SymFunc) or isinstance(rhs, SymFunc):
        a, b = lhs.to_p(), rhs.to_p()
        diff = (a - b).terms
        if not diff:
            return None
        lam = min(diff)
        return {"term": f"p{lam!r}", "lhs": _coeff_text(a.coeff(lam)), "rhs": _coeff_text(b.coeff(lam))}
    a = lhs if isinstance(lhs, Poly) else Poly.const(lhs)
    b = rhs if isinstance(rhs, Poly) else Poly.const(rhs)
    diff = (a - b).terms
    if not diff:
        return None
    names = sorted({v for mono in diff for v, _ in mono}, key=var_key)

    def vector(mono):
        exps = dict(mono)
        return tuple(exps.get(v, 0) for v in names)

    mono = min(diff, key=vector)
    term = Poly({mono: 1}).to_text()
    return {"term": term, "lhs": _coeff_text(a.coeff(mono)), "rhs": _coeff_text(b.coeff(mono))}


def _report(identity: str, instance: dict, lhs, rhs) -> IdentityReport:
    w = witness(lhs, rhs)
    return IdentityReport(identity, instance, w is None, w)


def _describe(g: WeightedGraph, **extra) -> dict:
    out = {"graph": g.to_text()}
    out.update({k: (v if isinstance(v, (int, str)) else str(v)) for k, v in extra.items()})
    return out


def _bounds(n: int) -> dict[str, int]:
    return {name: n for name in "uvwxyz"}


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _subsets(n: int) -> Iterator[tuple[list[int], list[int]]]:
    for mask in range(1 << n):
        a = [v for v in range(n) if mask >> v & 1]
        b = [v for v in range(n) if not mask >> v & 1]
        yield a, b


# ---------------------------------------------------------------------------
# three-way agreement and the two combinatorial sums
# ---------------------------------------------------------------------------

def check_three_way(g: WeightedGraph) -> IdentityReport:
    a = csf.x_via_subsets(g)
    b = csf.x_via_stable_partitions(g)
    c = csf.x_via_delcon(g)
    w = witness(a, b) or witness(a, c)
    return IdentityReport("three-way", _describe(g), w is None, w)


def check_xb_three_way(g: WeightedGraph) -> IdentityReport:
    a = csf.xb_via_subsets(g)
    b = csf.xb_via_partitions(g)
    c = csf.xb_via_delcon(g)
    w = witness(a, b) or witness(a, c)
    if w is None:
        w = witness(a.subs({"t": -1}), csf.x_via_subsets(g))
    return IdentityReport("xb-three-way", _describe(g), w is None, w)


def check_x_pleth(g: WeightedGraph, expr: str, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    e = parse_expr(expr)
    bounds = _bounds(n_vars)
    lhs = csf.x_pleth_combinatorial(g, e, bounds)
    rhs = pleth(csf.x_via_subsets(g), e, bounds)
    return _report("x-pleth", _describe(g, expr=expr, bound=n_vars), lhs, rhs)


def check_xb_pleth(g: WeightedGraph, expr: str, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """Combinatorial XB[f] against algebraic plethysm, then at ``t = -1`` against X[f]."""
    e = parse_expr(expr)
    bounds = _bounds(n_vars)
    lhs = csf.xb_pleth_combinatorial(g, e, bounds)
    rhs = pleth(csf.xb_via_subsets(g), e, bounds)
    w = witness(lhs, rhs)
    if w is None:
        w = witness(lhs.subs({"t": -1}), csf.x_pleth_combinatorial(g, e, bounds))
    return IdentityReport("xb-pleth", _describe(g, expr=expr, bound=n_vars), w is None, w)


def check_examples(g: WeightedGraph) -> IdentityReport:
    """X[1], X[-1] and X[n] against edge presence, orientation counts and chi_G(n)."""
    desc = _describe(g)
    one = csf.x_pleth_combinatorial(g, One())
    w = witness(one, 0 if g.edges else 1)
    if w is None:
        minus = csf.x_pleth_combinatorial(g, Neg(One()))
        w = witness(minus, _sign(g.n) * count_acyclic_orientations(g))
    for n in range(1, 5):
        if w is not None:
            break
        value = csf.x_pleth_combinatorial(g, integer(n))
        w = witness(value, csf.classical_chromatic(g, n))
        if w is not None:
            w["term"] = f"X[{n}]"
    return IdentityReport("examples", desc, w is None, w)


def check_order_independence(
    g: WeightedGraph, expr: str, seeds: Sequence[int], n_vars: int = DEFAULT_BOUND
) -> IdentityReport:
    e = parse_expr(expr)
    bounds = _bounds(n_vars)
    base_x = json.dumps(csf.x_pleth_combinatorial(g, e, bounds).to_json(), sort_keys=True)
    base_xb = json.dumps(csf.xb_pleth_combinatorial(g, e, bounds).to_json(), sort_keys=True)
    desc = _describe(g, expr=expr, bound=n_vars, orders=len(seeds))
    for seed in seeds:
        order = f"seed:{seed}"
        x = json.dumps(csf.x_pleth_combinatorial(g, e, bounds, order).to_json(), sort_keys=True)
        xb = json.dumps(csf.xb_pleth_combinatorial(g, e, bounds, order).to_json(), sort_keys=True)
        if x != base_x or xb != base_xb:
            return IdentityReport(
                "order-independence", desc, False,
                {"term": order, "lhs": "default order", "rhs": "differs"},
            )
    return IdentityReport("order-independence", desc, True)


# ---------------------------------------------------------------------------
# identities in the plethystic variable
# ---------------------------------------------------------------------------

def check_coproduct(g: WeightedGraph, f: str, h: str, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """X[f+h] against the sum over vertex bipartitions of X_A[f] X_B[h]."""
    fe, he = parse_expr(f), parse_expr(h)
    bounds = _bounds(n_vars)
    lhs = csf.x_pleth_combinatorial(g, Sum(fe, he), bounds)
    rhs = Poly()
    for a, b in _subsets(g.n):
        rhs = rhs + csf.x_pleth_combinatorial(g.induced(a), fe, bounds) * csf.x_pleth_combinatorial(
            g.induced(b), he, bounds
        )
    return _report("coproduct", _describe(g, f=f, h=h, bound=n_vars), lhs, rhs)


def check_xb_coproduct(g: WeightedGraph, f: str, h: str, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    fe, he = parse_expr(f), parse_expr(h)
    bounds = _bounds(n_vars)
    lhs = csf.xb_pleth_combinatorial(g, Sum(fe, he), bounds)
    rhs = Poly()
    for a, b in _subsets(g.n):
        rhs = rhs + csf.xb_pleth_combinatorial(g.induced(a), fe, bounds) * csf.xb_pleth_combinatorial(
            g.induced(b), he, bounds
        )
    return _report("xb-coproduct", _describe(g, f=f, h=h, bound=n_vars), lhs, rhs)


def check_e_h_convolution(n: int, f: str, h: str, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """e_n and h_n of a sum, by plethysm and through the complete graph K_n.

    Four values per family must agree: both sides of the convolution computed
    algebraically, and both sides computed from ``X_{K_k} = k! e_k`` and
    ``X_{K_k}[-f] = (-1)^k k! h_k[f]`` with the combinatorial sum.
    """
    fe, he = parse_expr(f), parse_expr(h)
    bounds = _bounds(n_vars)
    desc = {"n": n, "f": f, "h": h, "bound": n_vars}

    def via_graph(k: int, expr: PlethExpr, family: str) -> Poly:
        if k == 0:
            return Poly.const(1)
        if family == "e":
            return csf.x_pleth_combinatorial(complete_graph(k), expr, bounds) / factorial(k)
        value = csf.x_pleth_combinatorial(complete_graph(k), Neg(expr), bounds)
        return value * _sign(k) / factorial(k)

    def via_plethysm(k: int, expr: PlethExpr, basis) -> Poly:
        return pleth(basis(k), expr, bounds) if k else Poly.const(1)

    for family, basis in (("e", e_basis), ("h", h_basis)):
        sums = [
            pleth(basis(n), Sum(fe, he), bounds),
            sum((via_plethysm(i, fe, basis) * via_plethysm(n - i, he, basis) for i in range(n + 1)), Poly()),
            via_graph(n, Sum(fe, he), family),
            sum((via_graph(i, fe, family) * via_graph(n - i, he, family) for i in range(n + 1)), Poly()),
        ]
        for other in sums[1:]:
            w = witness(sums[0], other)
            if w is not None:
                w["term"] = f"{family}: {w['term']}"
                return IdentityReport("e-h-convolution", desc, False, w)
    return IdentityReport("e-h-convolution", desc, True)


def _submultisets(lam: Partition) -> Iterator[tuple[Partition, Partition, int]]:
    """``(mu, lam minus mu, number of ways to pick mu's parts out of lam)``."""
    mult = lam.multiplicities()
    parts = sorted(mult, reverse=True)

    def rec(k: int, chosen: list[int], rest: list[int], ways: int):
        if k == len(parts):
            yield Partition.of(chosen), Partition.of(rest), ways
            return
        part, r = parts[k], mult[parts[k]]
        for take in range(r + 1):
            yield from rec(
                k + 1, chosen + [part] * take, rest + [part] * (r - take), ways * comb(r, take)
            )

    yield from rec(0, [], [], 1)


def check_mtilde_convolution(lam: Sequence[int], f: str, h: str, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """mt_lam[f+h] from the weighted complete graph, against the submultiset sum.

    A complete graph with weights ``lam`` has only the all-singletons stable
    partition, so its X is exactly ``mt_lam``.
    """
    lam = Partition.of(lam)
    fe, he = parse_expr(f), parse_expr(h)
    bounds = _bounds(n_vars)
    graph = complete_graph(list(lam))
    lhs = csf.x_pleth_combinatorial(graph, Sum(fe, he), bounds)
    rhs = Poly()
    for mu, rest, ways in _submultisets(lam):
        rhs = rhs + pleth(mt(*mu), fe, bounds) * pleth(mt(*rest), he, bounds) * ways
    return _report("mtilde-convolution", {"lambda": repr(lam), "f": f, "h": h, "bound": n_vars}, lhs, rhs)


def _ascending(
    n: int,
    arcs: Sequence[tuple[int, int]],
    colours: Sequence[int],
    allow_equal: Callable[[int], bool],
) -> Iterator[tuple[int, ...]]:
    """Colourings with ``c(u) <= c(v)`` along every arc (equality only if allowed).

    ``colours`` is listed in increasing order.  Vertices are assigned in a
    topological order of the arcs so every constraint is checked as soon as
    both ends are coloured.
    """
    preds: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        preds[b].append(a)
        succ[a].append(b)
        indeg[b] += 1
    order, ready = [], [v for v in range(n) if indeg[v] == 0]
    while ready:
        v = ready.pop()
        order.append(v)
        for b in succ[v]:
            indeg[b] -= 1
            if not indeg[b]:
                ready.append(b)
    pos = {c: k for k, c in enumerate(colours)}
    col: list = [None] * n

    def rec(k: int):
        if k == n:
            yield tuple(col)
            return
        v = order[k]
        for c in colours:
            ok = True
            for u in preds[v]:
                cu = col[u]
                if pos[cu] > pos[c] or (cu == c and not allow_equal(c)):
                    ok = False
                    break
            if ok:
                col[v] = c
                yield from rec(k + 1)
        col[v] = None

    yield from rec(0)


def _monomial(assign: dict[str, int]) -> Poly:
    return Poly({tuple(sorted(((k, e) for k, e in assign.items() if e), key=lambda kv: var_key(kv[0]))): 1})


def check_omega_ascent(g: WeightedGraph, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """Signed omega(X)[x] against weakly ascending (orientation, colouring) pairs."""
    x = csf.x_via_subsets(g)
    lhs = x.omega().expand(n_vars) * _sign(g.total_weight() - g.n)
    rhs = Poly()
    colours = list(range(1, n_vars + 1))
    for o in acyclic_orientations(g):
        for col in _ascending(g.n, o.arcs(g), colours, lambda c: True):
            exps: dict[str, int] = {}
            for v, c in enumerate(col):
                exps[f"x{c}"] = exps.get(f"x{c}", 0) + g.weights[v]
            rhs = rhs + _monomial(exps)
    return _report("omega-ascent", _describe(g, bound=n_vars), lhs, rhs)


def check_superification(g: WeightedGraph, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """X[x - eps y] against signed colourings by +-1..+-N.

    Colours are ordered ``-N < ... < -1 < 1 < ... < N``; adjacent vertices may
    share a colour only when it is negative, and each pair contributes
    ``(-1)^(w- - |V-|) prod x_i^{w} y_i^{w}``.
    """
    bounds = _bounds(n_vars)
    lhs = pleth(csf.x_via_subsets(g), Sum(Alphabet("x"), Neg(Eps(Alphabet("y")))), bounds)
    colours = list(range(-n_vars, 0)) + list(range(1, n_vars + 1))
    rhs = Poly()
    for o in acyclic_orientations(g):
        for col in _ascending(g.n, o.arcs(g), colours, lambda c: c < 0):
            exps: dict[str, int] = {}
            neg_weight = neg_count = 0
            for v, c in enumerate(col):
                w = g.weights[v]
                name = f"x{c}" if c > 0 else f"y{-c}"
                exps[name] = exps.get(name, 0) + w
                if c < 0:
                    neg_weight += w
                    neg_count += 1
            rhs = rhs + _monomial(exps) * _sign(neg_weight - neg_count)
    return _report("superification", _describe(g, bound=n_vars), lhs, rhs)


def _relabelings(g: WeightedGraph) -> list[tuple[int, ...]]:
    n = g.n
    return [tuple(range(1, n + 1)), tuple(range(n, 0, -1))]


def check_source_components(g: WeightedGraph, labels: Sequence[int]) -> IdentityReport:
    """Signed omega(X) against the sum of p over source-component partitions."""
    g = g.with_labels(labels)
    lhs = csf.x_via_subsets(g).omega() * _sign(g.total_weight() - g.n)
    acc: dict[Partition, int] = {}
    for o in acyclic_orientations(g):
        _, lam = source_components(g, o)
        acc[lam] = acc.get(lam, 0) + 1
    rhs = SymFunc("p", acc)
    return _report("source-components", _describe(g, labels=list(labels)), lhs, rhs)


def check_source_pleth(g: WeightedGraph, labels: Sequence[int], n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """Signed omega(X)[x+y]: zero-coloured vertices feed p_{lambda_s}(x).

    Colourings take values 0..N weakly ascending along the orientation;
    vertices coloured 0 contribute the source components of the orientation
    restricted to them, the others contribute ``y_c^w``.
    """
    g = g.with_labels(labels)
    bounds = _bounds(n_vars)
    lhs = pleth(csf.x_via_subsets(g).omega(), Sum(Alphabet("x"), Alphabet("y")), bounds)
    lhs = lhs * _sign(g.total_weight() - g.n)
    p_cache: dict[Partition, Poly] = {}
    rhs = Poly()
    colours = list(range(0, n_vars + 1))
    for o in acyclic_orientations(g):
        arcs = o.arcs(g)
        for col in _ascending(g.n, arcs, colours, lambda c: True):
            zero = [v for v in range(g.n) if col[v] == 0]
            sub = g.induced(zero)
            inside = [d for (i, j), d in zip(g.edges, o.directions) if col[i] == 0 and col[j] == 0]
            _, lam = source_components(sub, Orientation(tuple(inside)))
            if lam not in p_cache:
                p_cache[lam] = SymFunc("p", {lam: 1}).expand(n_vars, "x")
            exps: dict[str, int] = {}
            for v, c in enumerate(col):
                if c:
                    exps[f"y{c}"] = exps.get(f"y{c}", 0) + g.weights[v]
            rhs = rhs + p_cache[lam] * _monomial(exps)
    return _report("source-pleth", _describe(g, labels=list(labels), bound=n_vars), lhs, rhs)


def check_two_x(g: WeightedGraph, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """X[x+x] against set partitions whose blocks induce bipartite graphs."""
    bounds = _bounds(n_vars)
    lhs = csf.x_pleth_combinatorial(g, Sum(Alphabet("x"), Alphabet("x")), bounds)
    acc: dict[Partition, int] = {}
    for pi in all_set_partitions(g):
        if not all(g.is_bipartite(block) for block in pi.blocks):
            continue
        n_comp = sum(len(g.connected_components(vertices=block)) for block in pi.blocks)
        lam = pi.lam(g)
        acc[lam] = acc.get(lam, 0) + 2 ** n_comp
    rhs = SymFunc("mt", acc).expand(n_vars, "x")
    return _report("two-x", _describe(g, bound=n_vars), lhs, rhs)


def check_xb_antipode(g: WeightedGraph, n_vars: int = DEFAULT_BOUND) -> IdentityReport:
    """XB[-x] against the sum over edge subsets S of (1+t)^|S| X_{G/S}[-x]."""
    bounds = _bounds(n_vars)
    minus_x = Neg(Alphabet("x"))
    lhs = csf.xb_pleth_combinatorial(g, minus_x, bounds)
    rhs = Poly()
    for k in range(g.m + 1):
        for subset in combinations(range(g.m), k):
            quotient = g.contract_edges(subset)
            rhs = rhs + csf.x_pleth_combinatorial(quotient, minus_x, bounds) * csf.ONE_PLUS_T ** k
    return _report("xb-antipode", _describe(g, bound=n_vars), lhs, rhs)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Job:
    """One check on one instance; picklable so it can run in a worker process."""

    order: tuple
    check: str
    args: tuple
    kwargs: tuple = field(default=())

    def run(self) -> IdentityReport:
        report = globals()[self.check](*self.args, **dict(self.kwargs))
        report.instance = {"id": self.order[1], **report.instance}
        return report


def _run_job(job: Job) -> IdentityReport:
    return job.run()


def _graph_jobs(suite: str, check: str, corpus: list[Instance], extra=((),), **kwargs) -> list[Job]:
    jobs = []
    for inst in corpus:
        for args in extra:
            tag = "/".join(str(a) for a in args)
            name = f"{inst.name}/{tag}" if tag else inst.name
            jobs.append(Job((suite, name), check, (inst.graph, *args), tuple(kwargs.items())))
    return jobs


def _convolution_jobs(n_vars: int) -> list[Job]:
    jobs = []
    for n in range(1, MAX_CONVOLUTION + 1):
        for f, h in (("x", "y"), ("x", "x"), ("-x", "eps(y)")):
            jobs.append(Job(("e-h-convolution", f"n{n}/{f}/{h}"), "check_e_h_convolution",
                            (n, f, h, n_vars)))
    return jobs


def _mtilde_jobs(n_vars: int) -> list[Job]:
    jobs = []
    for size in range(1, MAX_CONVOLUTION + 1):
        for lam in partitions(size):
            for f, h in (("x", "y"), ("x", "x")):
                jobs.append(Job(("mtilde-convolution", f"{lam!r}/{f}/{h}"), "check_mtilde_convolution",
                                (tuple(lam), f, h, n_vars)))
    return jobs


def _order_jobs(corpus: list[Instance], seed: int, n_vars: int, samples: int = 50, orders: int = 20) -> list[Job]:
    rng = random.Random(seed)
    pool = [(inst, expr) for inst in corpus for expr in X_EXPRESSIONS]
    chosen = rng.sample(pool, min(samples, len(pool)))
    jobs = []
    for k, (inst, expr) in enumerate(chosen):
        seeds = tuple(rng.randrange(1 << 30) for _ in range(orders))
        jobs.append(Job(("order-independence", f"{k:02d}/{inst.name}/{expr}"), "check_order_independence",
                        (inst.graph, expr, seeds, n_vars)))
    return jobs


SUITES = (
    "three-way",
    "xb-three-way",
    "x-pleth",
    "xb-pleth",
    "examples",
    "order-independence",
    "coproduct",
    "e-h-convolution",
    "mtilde-convolution",
    "omega-ascent",
    "superification",
    "source-components",
    "source-pleth",
    "two-x",
    "xb-coproduct",
    "xb-antipode",
)


def build_jobs(
    suite: str,
    corpus: list[Instance] | None = None,
    n_vars: int = DEFAULT_BOUND,
    seed: int = 0,
) -> list[Job]:
    """Jobs of one suite (or ``all``), in deterministic order.

    ``corpus=None`` means the default corpus; suites over the Tutte function
    also get the multigraph instances in that case.
    """
    if suite == "all":
        return [job for name in SUITES for job in build_jobs(name, corpus, n_vars, seed)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    simple = default_corpus() if corpus is None else corpus
    multi = default_corpus(multigraphs=True) if corpus is None else corpus
    exprs = [(e,) for e in X_EXPRESSIONS]
    if suite == "three-way":
        return _graph_jobs(suite, "check_three_way", simple)
    if suite == "xb-three-way":
        return _graph_jobs(suite, "check_xb_three_way", multi)
    if suite == "x-pleth":
        return _graph_jobs(suite, "check_x_pleth", simple, exprs, n_vars=n_vars)
    if suite == "xb-pleth":
        return _graph_jobs(suite, "check_xb_pleth", multi, exprs, n_vars=n_vars)
    if suite == "examples":
        return _graph_jobs(suite, "check_examples", simple)
    if suite == "order-independence":
        return _order_jobs(multi, seed, n_vars)
    if suite == "coproduct":
        return _graph_jobs(suite, "check_coproduct", simple, COPRODUCT_PAIRS, n_vars=n_vars)
    if suite == "xb-coproduct":
        return _graph_jobs(suite, "check_xb_coproduct", multi, COPRODUCT_PAIRS, n_vars=n_vars)
    if suite == "e-h-convolution":
        return _convolution_jobs(n_vars)
    if suite == "mtilde-convolution":
        return _mtilde_jobs(n_vars)
    if suite in ("source-components", "source-pleth"):
        check = "check_source_components" if suite == "source-components" else "check_source_pleth"
        jobs = []
        for inst in simple:
            kw = () if suite == "source-components" else (("n_vars", n_vars),)
            for labels in _relabelings(inst.graph):
                name = f"{inst.name}/labels={','.join(map(str, labels))}"
                jobs.append(Job((suite, name), check, (inst.graph, labels), kw))
        return jobs
    check = {
        "omega-ascent": "check_omega_ascent",
        "superification": "check_superification",
        "two-x": "check_two_x",
        "xb-antipode": "check_xb_antipode",
    }[suite]
    corpus_for = multi if suite == "xb-antipode" else simple
    return _graph_jobs(suite, check, corpus_for, n_vars=n_vars)


def run_jobs(jobs: list[Job], workers: int = 1) -> list[IdentityReport]:
    if workers <= 1:
        reports = [job.run() for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_job, jobs, chunksize=8))
    return reports


def run_suite(
    suite: str = "all",
    corpus: list[Instance] | None = None,
    n_vars: int = DEFAULT_BOUND,
    seed: int = 0,
    workers: int = 1,
) -> list[IdentityReport]:
    return run_jobs(build_jobs(suite, corpus, n_vars, seed), workers)


def summary(reports: list[IdentityReport]) -> dict:
    by_id: dict[str, list[int]] = {}
    for r in reports:
        counts = by_id.setdefault(r.identity, [0, 0])
        counts[0 if r.passed else 1] += 1
    return {k: {"passed": v[0], "failed": v[1]} for k, v in by_id.items()}


__all__ = [
    "IdentityReport",
    "SUITES",
    "X_EXPRESSIONS",
    "build_jobs",
    "check_coproduct",
    "check_e_h_convolution",
    "check_examples",
    "check_mtilde_convolution",
    "check_omega_ascent",
    "check_order_independence",
    "check_source_components",
    "check_source_pleth",
    "check_superification",
    "check_three_way",
    "check_two_x",
    "check_x_pleth",
    "check_xb_antipode",
    "check_xb_coproduct",
    "check_xb_pleth",
    "check_xb_three_way",
    "multigraph_instances",
    "run_jobs",
    "run_suite",
    "summary",
    "witness",
]
