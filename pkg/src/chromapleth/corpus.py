"""Test corpus of small weighted graphs, and its JSON file format."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from pathlib import Path

from .errors import GraphFormatError
from .wgraph import WeightedGraph

RANDOM_SEED = 20240601
RANDOM_COUNT = 25


@dataclass(frozen=True)
class Instance:
    name: str
    graph: WeightedGraph


def simple_unit_graphs(max_n: int = 4) -> list[Instance]:
    """Every labeled simple graph on 1..max_n vertices with unit weights."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
            out.append(Instance(f"simple{n}-{mask:02d}", WeightedGraph.from_positions([1] * n, edges)))
    return out


def _canonical(weights, edges) -> tuple:
    n = len(weights)
    best = None
    for perm in permutations(range(n)):
        w = tuple(weights[perm.index(k)] for k in range(n))
        e = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in edges))
        if best is None or (w, e) < best:
            best = (w, e)
    return best


def weighted_graphs(max_n: int = 3, max_weight: int = 3) -> list[Instance]:
    """Simple graphs on 1..max_n vertices with weights up to max_weight.

    Isomorphic copies are dropped, and so are the all-ones weightings (those
    already appear among the unit-weight graphs).
    """
    seen = set()
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
            for weights in product(range(1, max_weight + 1), repeat=n):
                if all(w == 1 for w in weights):
                    continue
                key = _canonical(weights, edges)
                if key in seen:
                    continue
                seen.add(key)
                name = f"weighted{n}-{len(out):02d}"
                out.append(Instance(name, WeightedGraph.from_positions(list(key[0]), key[1])))
    return out


def random_graphs(count: int = RANDOM_COUNT, n: int = 5, p: float = 0.5, seed: int = RANDOM_SEED) -> list[Instance]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        out.append(Instance(f"random{n}-{k:02d}", WeightedGraph.from_positions([1] * n, edges)))
    return out


def multigraph_instances() -> list[Instance]:
    """Graphs with loops or parallel edges, where X and XB behave differently."""
    g = WeightedGraph.from_positions
    return [
        Instance("multi-loop", g([1], [(0, 0)])),
        Instance("multi-double-edge", g([1, 1], [(0, 1), (0, 1)])),
        Instance("multi-path-loop", g([1, 1], [(0, 1), (1, 1)])),
        Instance("multi-triangle-double", g([1, 1, 1], [(0, 1), (0, 1), (1, 2), (0, 2)])),
        Instance("multi-weighted-double", g([2, 1, 1], [(0, 1), (0, 1), (1, 2)])),
        Instance("multi-triple-loop", g([1, 2], [(0, 1), (0, 1), (0, 1), (0, 0)])),
    ]


def default_corpus(multigraphs: bool = False) -> list[Instance]:
    out = simple_unit_graphs() + weighted_graphs() + random_graphs()
    if multigraphs:
        out += multigraph_instances()
    return out


def save_corpus(instances: list[Instance], path: str | Path) -> None:
    data = {"graphs": [{"name": i.name, "graph": i.graph.to_json()} for i in instances]}
    Path(path).write_text(json.dumps(data, indent=2) + "\n")


def load_corpus(path: str | Path) -> list[Instance]:
    try:
        data = json.loads(Path(path).read_text())
        entries = data["graphs"]
        return [Instance(str(e["name"]), WeightedGraph.from_json(e["graph"])) for e in entries]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"cannot read corpus {path}: {exc}") from None
