"""Property bodies and strategies shared by the property tests and the acceptance run."""

import json
import random

from hypothesis import strategies as st

from chromapleth import csf
from chromapleth.alphabet import (
    Alphabet,
    Eps,
    Int,
    Neg,
    One,
    Param,
    Prod,
    SignedVar,
    Sum,
    Var,
    evaluate,
    var_set,
)
from chromapleth.plethysm import pleth
from chromapleth.poly import Poly, make_monomial
from chromapleth.symfunc import BASES, SymFunc, partitions
from chromapleth.wgraph import (
    Orientation,
    WeightedGraph,
    acyclic_biorientations,
    acyclic_orientations,
    count_acyclic_orientations,
    source_components,
)

# ---- strategies --------------------------------------------------------------

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def symfuncs(max_degree: int, bases=BASES, homogeneous: bool = False):
    @st.composite
    def build(draw):
        basis = draw(st.sampled_from(bases))
        if homogeneous:
            d = draw(st.integers(1, max_degree))
            pool = partitions(d)
        else:
            pool = [lam for d in range(max_degree + 1) for lam in partitions(d)]
        chosen = draw(st.lists(st.sampled_from(pool), max_size=4))
        return SymFunc(basis, {lam: draw(coefficients) for lam in chosen})

    return build()


@st.composite
def graphs(draw, max_n: int = 5, max_weight: int = 2, multi: bool = False):
    n = draw(st.integers(1, max_n))
    weights = draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=not multi, max_size=len(pairs) + 1)) if pairs else []
    if multi and draw(st.booleans()):
        v = draw(st.integers(0, n - 1))
        edges.append((v, v))
    return WeightedGraph.from_positions(weights, edges)


ALPHABET_LEAVES = st.one_of(
    st.sampled_from("xy").map(Alphabet),
    st.builds(Var, st.sampled_from("xy"), st.integers(1, 3)),
)
CONSTANT_LEAVES = st.one_of(st.just(One()), st.builds(Int, st.integers(0, 3)), st.just(Param("q")))


def expr_trees(max_leaves: int = 4, linear: bool = False):
    """Random expression trees; ``linear`` keeps every variable at degree one."""
    leaves = ALPHABET_LEAVES if linear else st.one_of(ALPHABET_LEAVES, CONSTANT_LEAVES)

    def extend(children):
        unary = st.one_of(children.map(Neg), children.map(Eps))
        binary = [st.builds(Sum, children, children)]
        if not linear:
            binary.append(st.builds(Prod, children, children))
        return st.one_of(unary, *binary)

    return st.recursive(leaves, extend, max_leaves=max_leaves)


exprs = expr_trees()
small_exprs = expr_trees(3)
linear_exprs = expr_trees(linear=True)


@st.composite
def signed_vars(draw):
    atoms = tuple(
        (draw(st.sampled_from("xy")), draw(st.integers(1, 3)), draw(st.integers(0, 2)))
        for _ in range(draw(st.integers(1, 3)))
    )
    return SignedVar(atoms, draw(st.sampled_from((1, -1))), draw(st.integers(0, 1)))


@st.composite
def polys(draw):
    names = ["x1", "x2", "y1", "t", "q"]
    out = Poly()
    for _ in range(draw(st.integers(0, 5))):
        exps = {v: draw(st.integers(0, 3)) for v in draw(st.lists(st.sampled_from(names), max_size=3))}
        out = out + Poly({make_monomial(exps): draw(coefficients)})
    return out


# ---- symfunc -------------------------------------------------------------------

def prop_convert_round_trip(f: SymFunc, basis: str) -> None:
    g = f.convert(basis)
    assert g.basis == basis
    assert g.convert("p").terms == f.convert("p").terms
    assert g.convert(f.basis) == f


def prop_omega_involution(f: SymFunc) -> None:
    assert f.omega().omega() == f


def prop_expand_ring_map(f: SymFunc, g: SymFunc, n: int) -> None:
    assert (f * g).expand(n) == f.expand(n) * g.expand(n)
    assert (f + g).expand(n) == f.expand(n) + g.expand(n)


def _swap(poly: Poly, a: str, b: str) -> Poly:
    ren = {a: b, b: a}
    return Poly({make_monomial({ren.get(v, v): k for v, k in mono}): c for mono, c in poly.terms.items()})


def prop_expand_symmetric(f: SymFunc, n: int, i: int, j: int) -> None:
    poly = f.expand(n)
    assert _swap(poly, f"x{i % n + 1}", f"x{j % n + 1}") == poly


# ---- alphabet ------------------------------------------------------------------

def _shape(vs) -> list:
    return [(v.atoms, v.sign, v.parity) for v in vs]


def prop_neg_eps_involutions(e) -> None:
    bounds = {"x": 2, "y": 2}
    base = _shape(var_set(e, bounds))
    assert _shape(var_set(Neg(Neg(e)), bounds)) == base
    assert _shape(var_set(Eps(Eps(e)), bounds)) == base


def prop_sum_counts(a, b) -> None:
    bounds = {"x": 2, "y": 2}
    vs = var_set(Sum(a, b), bounds)
    assert len(vs) == len(var_set(a, bounds)) + len(var_set(b, bounds))
    assert len(set(vs.keys())) == len(vs)


def prop_evaluate_multiplicative(z: SignedVar, w: SignedVar, k: int) -> None:
    assert evaluate(z.times(w), k) == evaluate(z, k) * evaluate(w, k)


# ---- plethysm ------------------------------------------------------------------

def prop_pleth_ring_map(f: SymFunc, g: SymFunc, e) -> None:
    assert pleth(f + g, e, 2) == pleth(f, e, 2) + pleth(g, e, 2)
    assert pleth(f * g, e, 2) == pleth(f, e, 2) * pleth(g, e, 2)


def prop_pleth_double_eps(f: SymFunc, e) -> None:
    assert pleth(f, Eps(Eps(e)), 2) == pleth(f, e, 2)


def prop_pleth_homogeneous(f: SymFunc, e) -> None:
    d = f.degree()
    for mono in pleth(f, e, 2).terms:
        assert sum(k for _, k in mono) == d


# ---- wgraph --------------------------------------------------------------------

def prop_acyclic_count_is_chromatic_at_minus_one(g: WeightedGraph) -> None:
    assert count_acyclic_orientations(g) == abs(csf.classical_chromatic(g, -1))


def prop_contraction_conserves_weight(g: WeightedGraph, k: int) -> None:
    if g.m:
        assert g.contract_edge(k % g.m).total_weight() == g.total_weight()


def prop_biorientations_without_both_are_orientations(g: WeightedGraph) -> None:
    plain = {b.states for b in acyclic_biorientations(g) if not b.bidirected()}
    assert plain == {o.directions for o in acyclic_orientations(g)}


def prop_source_components(g: WeightedGraph, seed: int) -> None:
    rng = random.Random(seed)
    rank = list(range(g.n))
    rng.shuffle(rank)
    labels = list(range(1, g.n + 1))
    rng.shuffle(labels)
    g = g.with_labels(labels)
    # orient every edge up the random rank: always acyclic on loopless graphs
    o = Orientation(tuple(1 if rank[u] < rank[v] else -1 for u, v in g.edges))
    comps, lam = source_components(g, o)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(g.n))
    assert lam.size() == g.total_weight()
    used = set()
    for c in comps:
        assert labels[c[0]] == min(labels[v] for v in range(g.n) if v not in used)
        used.update(c)


# ---- csf -----------------------------------------------------------------------

def prop_x_is_xb_at_minus_one(g: WeightedGraph) -> None:
    assert csf.xb_via_subsets(g).subs({"t": -1}) == csf.x_via_subsets(g)


def prop_combinatorial_is_algebraic(g: WeightedGraph, e) -> None:
    assert csf.x_pleth_combinatorial(g, e, 2) == pleth(csf.x_via_subsets(g), e, 2)
    assert csf.xb_pleth_combinatorial(g, e, 2) == pleth(csf.xb_via_subsets(g), e, 2)


def prop_order_independence(g: WeightedGraph, e, seed: int) -> None:
    assert csf.x_pleth_combinatorial(g, e, 2, f"seed:{seed}") == csf.x_pleth_combinatorial(g, e, 2)


# ---- serialization -------------------------------------------------------------

def prop_poly_json_round_trip(poly: Poly) -> None:
    assert Poly.from_json(json.loads(json.dumps(poly.to_json()))) == poly


def prop_symfunc_json_round_trip(f: SymFunc) -> None:
    back = SymFunc.from_json(json.loads(json.dumps(f.to_json())))
    assert back.basis == f.basis and back.terms == f.terms


def prop_graph_json_round_trip(g: WeightedGraph) -> None:
    assert WeightedGraph.from_json(json.dumps(g.to_json())) == g


# ---- registry: name -> (strategies, body) ----------------------------------------

PROPERTIES = {
    "convert-round-trip": ((symfuncs(8), st.sampled_from(BASES)), prop_convert_round_trip),
    "omega-involution": ((symfuncs(8),), prop_omega_involution),
    "expand-ring-map": ((symfuncs(3), symfuncs(3), st.integers(1, 3)), prop_expand_ring_map),
    "expand-symmetric": ((symfuncs(5), st.integers(2, 4), st.integers(0, 3), st.integers(0, 3)), prop_expand_symmetric),
    "neg-eps-involutions": ((exprs,), prop_neg_eps_involutions),
    "sum-counts": ((exprs, exprs), prop_sum_counts),
    "evaluate-multiplicative": ((signed_vars(), signed_vars(), st.integers(1, 5)), prop_evaluate_multiplicative),
    "pleth-ring-map": ((symfuncs(2), symfuncs(3), exprs), prop_pleth_ring_map),
    "pleth-double-eps": ((symfuncs(4), exprs), prop_pleth_double_eps),
    "pleth-homogeneous": ((symfuncs(4, homogeneous=True), linear_exprs), prop_pleth_homogeneous),
    "acyclic-vs-chromatic": ((graphs(5, 1),), prop_acyclic_count_is_chromatic_at_minus_one),
    "contraction-weight": ((graphs(5, 3, multi=True), st.integers(0, 20)), prop_contraction_conserves_weight),
    "biorientations-vs-orientations": ((graphs(4, 1, multi=True),), prop_biorientations_without_both_are_orientations),
    "source-components": ((graphs(5, 3), st.integers(0, 10 ** 6)), prop_source_components),
    "xb-at-minus-one": ((graphs(5, 2, multi=True),), prop_x_is_xb_at_minus_one),
    "combinatorial-is-algebraic": ((graphs(3, 2, multi=True), small_exprs), prop_combinatorial_is_algebraic),
    "order-independence": ((graphs(4, 2, multi=True), small_exprs, st.integers(0, 10 ** 6)), prop_order_independence),
    "poly-json": ((polys(),), prop_poly_json_round_trip),
    "symfunc-json": ((symfuncs(6),), prop_symfunc_json_round_trip),
    "graph-json": ((graphs(5, 3, multi=True),), prop_graph_json_round_trip),
}
