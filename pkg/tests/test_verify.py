import pytest

from chromapleth import csf, verify
from chromapleth.alphabet import Alphabet, Sum, parse_expr
from chromapleth.corpus import Instance, default_corpus, multigraph_instances
from chromapleth.plethysm import pleth
from chromapleth.poly import Poly
from chromapleth.symfunc import Partition, mt, p
from chromapleth.wgraph import WeightedGraph, complete_graph, edgeless, path_graph

G = WeightedGraph.from_positions
WP2 = G([2, 1], [(0, 1)])


def test_corpus_shape():
    corpus = default_corpus()
    assert len(corpus) == 75 + 64 + 25
    assert len({i.name for i in corpus}) == len(corpus)
    assert len(multigraph_instances()) == 6
    assert all(not i.graph.is_simple() for i in multigraph_instances())
    assert default_corpus()[-1].graph == corpus[-1].graph  # seeded, reproducible


def test_corpus_file_round_trip(tmp_path):
    from chromapleth.corpus import load_corpus, save_corpus

    items = default_corpus()[:5] + multigraph_instances()
    save_corpus(items, tmp_path / "c.json")
    assert load_corpus(tmp_path / "c.json") == items


def test_witness_is_lexicographically_least():
    x1, x2 = Poly.var("x1"), Poly.var("x2")
    w = verify.witness(x1 ** 2 + x1 * x2 + x2 ** 2, x2 ** 2)
    assert w == {"term": "x1*x2", "lhs": "1", "rhs": "0"}
    assert verify.witness(x1, x1) is None
    w = verify.witness(p(2, 1) + p(1, 1, 1), p(2, 1))
    assert w["term"] == "p[1,1,1]"


# ---- examples from the identity descriptions -----------------------------

def test_coproduct_examples():
    assert verify.check_coproduct(edgeless([1]), "x", "x").passed
    assert verify.check_coproduct(path_graph(2), "x", "y").passed


def test_convolution_examples():
    for n in (1, 2, 3):
        assert verify.check_e_h_convolution(n, "x", "x").passed
    assert verify.check_e_h_convolution(2, "x", "y").passed


def test_mtilde_convention_counts_submultisets_with_multiplicity():
    lam = Partition.of([1, 1])
    choices = list(verify._submultisets(lam))
    assert sorted((tuple(a), tuple(b), k) for a, b, k in choices) == [
        ((), (1, 1), 1), ((1,), (1,), 2), ((1, 1), (), 1)
    ]
    assert verify.check_mtilde_convolution((2, 1), "x", "y").passed
    assert verify.check_mtilde_convolution((1, 1), "x", "y").passed
    # counting each distinct submultiset once instead would be wrong
    bounds = {"x": 3, "y": 3}
    x, y = Alphabet("x"), Alphabet("y")
    once = pleth(mt(1, 1), x, bounds) + pleth(mt(1), x, bounds) * pleth(mt(1), y, bounds) + pleth(mt(1, 1), y, bounds)
    assert once != csf.x_pleth_combinatorial(complete_graph(2), Sum(x, y), bounds)


def test_single_vertex_identities():
    v2 = edgeless([2])
    assert verify.check_omega_ascent(v2).passed
    assert verify.check_superification(edgeless([1])).passed
    assert verify.check_two_x(edgeless([1])).passed
    assert verify.check_source_components(v2, (1,)).passed


def test_path_identities():
    p2 = path_graph(2)
    assert verify.check_omega_ascent(p2, 2).passed
    assert verify.check_superification(p2, 2).passed
    assert verify.check_source_components(p2, (1, 2)).passed
    assert verify.check_source_components(p2, (2, 1)).passed
    assert verify.check_source_pleth(WP2, (2, 1), 2).passed
    assert verify.check_two_x(path_graph(3)).passed
    assert verify.check_two_x(complete_graph(3)).passed
    assert verify.check_xb_antipode(p2).passed
    assert verify.check_xb_coproduct(p2, "1", "1").passed


def test_superification_allows_equal_negative_colours_only():
    # P2 at N=1: colourings (x,x) is forbidden, (y,y) is allowed in both orientations
    report = verify.check_superification(path_graph(2), 1)
    assert report.passed
    lhs = pleth(csf.x_via_subsets(path_graph(2)), parse_expr("x-eps(y)"), 1)
    assert lhs.coeff((("y1", 2),)) == 2
    assert lhs.coeff((("x1", 2),)) == 0


# ---- mutation tests: perturbing one side must flip the report --------------

def _negate(fn, when=lambda *a, **k: True):
    def wrapped(*args, **kwargs):
        out = fn(*args, **kwargs)
        return -out if when(*args, **kwargs) else out
    return wrapped


def _is_sum(g, e, *rest, **kw):
    return isinstance(e, Sum)


def _is_top(g, *rest, **kw):
    # recursive routes call themselves through the patched name
    return g == WP2


MUTATIONS = [
    ("check_three_way", (WP2,), csf, "x_via_delcon", _is_top),
    ("check_xb_three_way", (WP2,), csf, "xb_via_delcon", _is_top),
    ("check_x_pleth", (WP2, "x+y"), csf, "x_pleth_combinatorial", None),
    ("check_xb_pleth", (WP2, "eps(x)"), csf, "xb_pleth_combinatorial", None),
    ("check_coproduct", (WP2, "x", "y"), csf, "x_pleth_combinatorial", _is_sum),
    ("check_xb_coproduct", (WP2, "x", "y"), csf, "xb_pleth_combinatorial", _is_sum),
    ("check_e_h_convolution", (2, "x", "y"), verify, "pleth", None),
    ("check_mtilde_convolution", ((2, 1), "x", "y"), csf, "x_pleth_combinatorial", None),
    ("check_omega_ascent", (WP2,), csf, "x_via_subsets", None),
    ("check_superification", (WP2,), csf, "x_via_subsets", None),
    ("check_source_components", (WP2, (1, 2)), csf, "x_via_subsets", None),
    ("check_source_pleth", (WP2, (1, 2), 2), csf, "x_via_subsets", None),
    ("check_two_x", (WP2,), csf, "x_pleth_combinatorial", None),
    ("check_xb_antipode", (WP2,), csf, "x_pleth_combinatorial", None),
]


@pytest.mark.parametrize("check,args,module,name,when", MUTATIONS, ids=[m[0] for m in MUTATIONS])
def test_sign_mutation_is_detected(monkeypatch, check, args, module, name, when):
    fn = getattr(verify, check)
    assert fn(*args).passed
    csf.clear_memo()
    original = getattr(module, name)
    monkeypatch.setattr(module, name, _negate(original, when or (lambda *a, **k: True)))
    report = fn(*args)
    csf.clear_memo()
    assert not report.passed
    assert report.witness is not None and report.witness["lhs"] != report.witness["rhs"]


# ---- suites ----------------------------------------------------------------

def test_build_jobs_is_deterministic():
    a = verify.build_jobs("order-independence", seed=3)
    b = verify.build_jobs("order-independence", seed=3)
    assert [j.order for j in a] == [j.order for j in b]
    assert len(a) == 50 and all(len(j.args[2]) == 20 for j in a)
    with pytest.raises(ValueError):
        verify.build_jobs("nonsense")


def test_parallel_run_matches_serial():
    corpus = [Instance("p3", path_graph(3)), Instance("w", WP2)]
    jobs = verify.build_jobs("coproduct", corpus, 2)
    serial = verify.run_jobs(jobs, 1)
    parallel = verify.run_jobs(jobs, 2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]
    assert all(r.passed for r in serial)


def test_report_json_shape():
    r = verify.check_two_x(WP2)
    data = r.to_json()
    assert data["identity"] == "two-x" and data["passed"] is True and "witness" not in data
