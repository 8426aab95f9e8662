"""Vertex-weighted multigraphs with loops, and their orientations.

Vertices are addressed by position ``0..n-1``; ``ids`` keeps the user-facing
names and ``labels`` the integers used for source components (``1..n`` by
default).  Edges are stored as an ordered tuple of position pairs ``(i, j)``
with ``i <= j``; the index of an edge in that tuple is its identity, so the
copies of a multiedge are distinguishable.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError
from .symfunc import Partition

FWD, BWD, BOTH = 1, -1, 0


@dataclass(frozen=True)
class WeightedGraph:
    ids: tuple
    weights: tuple
    edges: tuple
    labels: tuple

    def __post_init__(self):
        n = len(self.ids)
        if len(self.weights) != n or len(self.labels) != n:
            raise GraphFormatError("ids, weights and labels must have equal length")
        if len(set(self.ids)) != n:
            raise GraphFormatError("vertex ids must be distinct")
        for w in self.weights:
            if not isinstance(w, int) or w < 1:
                raise GraphFormatError(f"vertex weights must be positive integers, got {w!r}")
        for i, j in self.edges:
            if not (0 <= i <= j < n):
                raise GraphFormatError(f"edge ({i}, {j}) is not normalized or out of range")

    # ---- construction -----------------------------------------------------

    @classmethod
    def build(
        cls,
        vertices: Sequence,
        edges: Iterable[tuple] = (),
        labels: Sequence[int] | None = None,
    ) -> "WeightedGraph":
        """``vertices`` is a list of ids or ``(id, weight)`` pairs; edges name ids."""
        ids, weights = [], []
        for v in vertices:
            if isinstance(v, tuple):
                ids.append(v[0])
                weights.append(v[1])
            else:
                ids.append(v)
                weights.append(1)
        pos = {v: k for k, v in enumerate(ids)}
        norm = []
        for edge in edges:
            try:
                a, b = edge
                i, j = pos[a], pos[b]
            except (KeyError, ValueError, TypeError):
                raise GraphFormatError(f"edge {edge!r} does not join declared vertices") from None
            norm.append((min(i, j), max(i, j)))
        labels = tuple(labels) if labels is not None else tuple(range(1, len(ids) + 1))
        return cls(tuple(ids), tuple(weights), tuple(norm), labels)

    @classmethod
    def from_positions(
        cls, weights: Sequence[int], edges: Iterable[tuple[int, int]] = ()
    ) -> "WeightedGraph":
        n = len(weights)
        return cls(
            tuple(range(n)),
            tuple(weights),
            tuple((min(i, j), max(i, j)) for i, j in edges),
            tuple(range(1, n + 1)),
        )

    def with_labels(self, labels: Sequence[int]) -> "WeightedGraph":
        return WeightedGraph(self.ids, self.weights, self.edges, tuple(labels))

    # ---- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def total_weight(self) -> int:
        return sum(self.weights)

    def weight_of(self, subset: Iterable[int]) -> int:
        return sum(self.weights[v] for v in subset)

    def has_loop(self) -> bool:
        return any(i == j for i, j in self.edges)

    def is_simple(self) -> bool:
        return not self.has_loop() and len(set(self.edges)) == len(self.edges)

    def weight_partition(self) -> Partition:
        return Partition.of(self.weights)

    def key(self) -> tuple:
        """Sorted edge-list signature used as a memo key (no isomorphism search)."""
        return (self.weights, tuple(sorted(self.edges)))

    def _edge_index(self, e) -> int:
        if isinstance(e, int):
            if not 0 <= e < self.m:
                raise GraphFormatError(f"no edge with index {e}")
            return e
        try:
            a, b = e
            pos = {v: k for k, v in enumerate(self.ids)}
            i, j = sorted((pos[a], pos[b]))
            return self.edges.index((i, j))
        except (KeyError, ValueError, TypeError):
            raise GraphFormatError(f"edge {e!r} is not in the graph") from None

    # ---- deletion / contraction / restriction -----------------------------

    def delete_edge(self, e) -> "WeightedGraph":
        k = self._edge_index(e)
        return WeightedGraph(self.ids, self.weights, self.edges[:k] + self.edges[k + 1:], self.labels)

    def contract_edge(self, e) -> "WeightedGraph":
        """Merge the endpoints of a non-loop edge, adding weights; a loop is deleted."""
        k = self._edge_index(e)
        i, j = self.edges[k]
        if i == j:
            return self.delete_edge(k)

        def remap(v: int) -> int:
            if v == j:
                v = i
            return v - 1 if v > j else v

        edges = []
        for idx, (a, b) in enumerate(self.edges):
            if idx == k:
                continue
            a, b = remap(a), remap(b)
            edges.append((min(a, b), max(a, b)))
        weights = list(self.weights)
        weights[i] += weights[j]
        del weights[j]
        ids = self.ids[:j] + self.ids[j + 1:]
        labels = self.labels[:j] + self.labels[j + 1:]
        return WeightedGraph(ids, tuple(weights), tuple(edges), labels)

    def contract_edges(self, subset: Iterable[int]) -> "WeightedGraph":
        """Contract a set of edges (by index) one after another."""
        g = self
        marked = [k in set(subset) for k in range(self.m)]
        # edge identities shift as edges are removed; track them by a parallel list
        while True:
            try:
                k = marked.index(True)
            except ValueError:
                return g
            g = g.contract_edge(k)
            del marked[k]

    def induced(self, subset: Iterable[int]) -> "WeightedGraph":
        keep = sorted(set(subset))
        pos = {v: k for k, v in enumerate(keep)}
        edges = tuple(
            (pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos
        )
        return WeightedGraph(
            tuple(self.ids[v] for v in keep),
            tuple(self.weights[v] for v in keep),
            edges,
            tuple(self.labels[v] for v in keep),
        )

    # ---- connectivity -----------------------------------------------------

    def connected_components(
        self, edge_subset: Iterable[int] | None = None, vertices: Iterable[int] | None = None
    ) -> list[list[int]]:
        """Components of the spanning subgraph on ``vertices`` using ``edge_subset``."""
        verts = list(self.vertices()) if vertices is None else sorted(set(vertices))
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        chosen = range(self.m) if edge_subset is None else edge_subset
        for k in chosen:
            i, j = self.edges[k]
            if i in parent and j in parent:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        groups: dict[int, list[int]] = {}
        for v in verts:
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def components_lambda(self, edge_subset: Iterable[int] | None = None) -> Partition:
        return Partition.of(self.weight_of(c) for c in self.connected_components(edge_subset))

    def is_bipartite(self, vertices: Iterable[int] | None = None) -> bool:
        """Two-colourability of the induced subgraph (loops make it fail)."""
        verts = set(self.vertices()) if vertices is None else set(vertices)
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for i, j in self.edges:
            if i in verts and j in verts:
                if i == j:
                    return False
                adj[i].append(j)
                adj[j].append(i)
        side: dict[int, int] = {}
        for s in verts:
            if s in side:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for v in adj[u]:
                    if v not in side:
                        side[v] = 1 - side[u]
                        stack.append(v)
                    elif side[v] == side[u]:
                        return False
        return True

    # ---- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "vertices": [{"id": v, "weight": w} for v, w in zip(self.ids, self.weights)],
            "edges": [[self.ids[i], self.ids[j]] for i, j in self.edges],
        }
        if self.labels != tuple(range(1, self.n + 1)):
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data) -> "WeightedGraph":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise GraphFormatError(f"malformed graph JSON: {exc}") from exc
        try:
            verts = [(v["id"], v.get("weight", 1)) for v in data["vertices"]]
            edges = [tuple(e) for e in data.get("edges", [])]
            labels = data.get("labels")
        except (KeyError, TypeError, AttributeError) as exc:
            raise GraphFormatError(f"malformed graph JSON: {exc!r}") from exc
        return cls.build(verts, edges, labels)

    def to_text(self) -> str:
        verts = "; ".join(f"{v}:{w}" for v, w in zip(self.ids, self.weights))
        edges = " ".join(f"{self.ids[i]}-{self.ids[j]}" for i, j in self.edges)
        return f"{verts} / {edges}".rstrip()

    @classmethod
    def from_text(cls, text: str) -> "WeightedGraph":
        """Parse ``a:2; b:1 / a-b a-a`` (weights default to 1)."""
        head, _, tail = text.partition("/")
        verts = []
        for chunk in head.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            m = re.fullmatch(r"([A-Za-z0-9_]+)\s*(?::\s*(\d+))?", chunk)
            if m is None:
                raise GraphFormatError(f"bad vertex declaration {chunk!r}")
            verts.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        edges = []
        for tok in tail.split():
            m = re.fullmatch(r"([A-Za-z0-9_]+)-([A-Za-z0-9_]+)", tok)
            if m is None:
                raise GraphFormatError(f"bad edge {tok!r}")
            edges.append((m.group(1), m.group(2)))
        return cls.build(verts, edges)

    def __str__(self) -> str:
        return self.to_text()


# ---------------------------------------------------------------------------
# standard graphs
# ---------------------------------------------------------------------------

def edgeless(weights: Sequence[int]) -> WeightedGraph:
    return WeightedGraph.from_positions(weights)


def path_graph(n: int, weights: Sequence[int] | None = None) -> WeightedGraph:
    return WeightedGraph.from_positions(weights or [1] * n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int, weights: Sequence[int] | None = None) -> WeightedGraph:
    return WeightedGraph.from_positions(weights or [1] * n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n_or_weights, weights: Sequence[int] | None = None) -> WeightedGraph:
    if isinstance(n_or_weights, int):
        w = list(weights) if weights is not None else [1] * n_or_weights
    else:
        w = list(n_or_weights)
    n = len(w)
    return WeightedGraph.from_positions(w, [(i, j) for i in range(n) for j in range(i + 1, n)])


# ---------------------------------------------------------------------------
# orientations
# ---------------------------------------------------------------------------

def _is_dag(n: int, arcs: Iterable[tuple[int, int]]) -> bool:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        if a == b:
            return False
        out[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return seen == n


@dataclass(frozen=True)
class Orientation:
    """``directions[k]`` is FWD (``i -> j`` for edge ``(i, j)``) or BWD.

    On a loop the two values stand for clockwise / counterclockwise.
    """

    directions: tuple

    def arcs(self, g: WeightedGraph) -> list[tuple[int, int]]:
        return [(i, j) if d == FWD else (j, i) for (i, j), d in zip(g.edges, self.directions)]

    def is_acyclic(self, g: WeightedGraph) -> bool:
        return _is_dag(g.n, self.arcs(g))


@dataclass(frozen=True)
class Biorientation:
    """``states[k]`` is FWD, BWD or BOTH (bidirected)."""

    states: tuple

    def bidirected(self) -> list[int]:
        return [k for k, s in enumerate(self.states) if s == BOTH]

    def is_acyclic(self, g: WeightedGraph) -> bool:
        return biorientation_is_acyclic(g.n, g.edges, self.states)


def biorientation_is_acyclic(n: int, edges: Sequence[tuple[int, int]], states: Sequence[int]) -> bool:
    """No directed cycle through a singly directed edge.

    Contract the bidirected components; single arcs must then form a DAG with
    no arc inside a component.
    """
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (i, j), s in zip(edges, states):
        if s == BOTH:
            parent[find(i)] = find(j)
    roots = {}
    for v in range(n):
        roots.setdefault(find(v), len(roots))
    arcs = []
    for (i, j), s in zip(edges, states):
        if s == BOTH:
            continue
        a, b = (i, j) if s == FWD else (j, i)
        ra, rb = roots[find(a)], roots[find(b)]
        if ra == rb:
            return False
        arcs.append((ra, rb))
    return _is_dag(len(roots), arcs)


def all_orientations(g: WeightedGraph) -> Iterator[Orientation]:
    for dirs in product((FWD, BWD), repeat=g.m):
        yield Orientation(dirs)


def acyclic_orientations(g: WeightedGraph) -> Iterator[Orientation]:
    if g.has_loop():
        return
    for o in all_orientations(g):
        if o.is_acyclic(g):
            yield o


def acyclic_biorientations(g: WeightedGraph) -> Iterator[Biorientation]:
    for states in product((FWD, BWD, BOTH), repeat=g.m):
        if biorientation_is_acyclic(g.n, g.edges, states):
            yield Biorientation(states)


def count_acyclic_orientations(g: WeightedGraph) -> int:
    return sum(1 for _ in acyclic_orientations(g))


# ---------------------------------------------------------------------------
# source components
# ---------------------------------------------------------------------------

def source_components(
    g: WeightedGraph, orientation: Orientation, labels: Sequence[int] | None = None
) -> tuple[list[list[int]], Partition]:
    """Greedy peeling by minimum remaining label; returns components and their weight partition."""
    arcs = orientation.arcs(g)
    if not _is_dag(g.n, arcs):
        raise ValueError("source components need an acyclic orientation")
    labels = g.labels if labels is None else tuple(labels)
    out_adj: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in arcs:
        out_adj[a].append(b)
    remaining = set(g.vertices())
    comps = []
    while remaining:
        start = min(remaining, key=lambda v: labels[v])
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in out_adj[u]:
                if v in remaining and v not in comp:
                    comp.add(v)
                    stack.append(v)
        comps.append(sorted(comp, key=lambda v: labels[v]))
        remaining -= comp
    return comps, Partition.of(g.weight_of(c) for c in comps)


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SetPartition:
    blocks: tuple

    def lam(self, g: WeightedGraph) -> Partition:
        return Partition.of(g.weight_of(b) for b in self.blocks)

    def internal_edges(self, g: WeightedGraph) -> int:
        where = {v: k for k, b in enumerate(self.blocks) for v in b}
        return sum(1 for i, j in g.edges if where[i] == where[j])

    def is_stable(self, g: WeightedGraph) -> bool:
        return self.internal_edges(g) == 0


def set_partitions(items: Sequence) -> Iterator[tuple]:
    """All set partitions of ``items`` as tuples of tuples (restricted growth order)."""
    items = list(items)
    if not items:
        yield ()
        return
    blocks: list[list] = []

    def rec(k: int):
        if k == len(items):
            yield tuple(tuple(b) for b in blocks)
            return
        x = items[k]
        for b in blocks:
            b.append(x)
            yield from rec(k + 1)
            b.pop()
        blocks.append([x])
        yield from rec(k + 1)
        blocks.pop()

    yield from rec(0)


def all_set_partitions(g: WeightedGraph) -> Iterator[SetPartition]:
    for blocks in set_partitions(list(g.vertices())):
        yield SetPartition(blocks)


def stable_partitions(g: WeightedGraph) -> Iterator[SetPartition]:
    """Set partitions of V into stable sets (blocks spanning no edge, loops included)."""
    if g.has_loop():
        return
    adj = [set() for _ in range(g.n)]
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    blocks: list[list[int]] = []

    def rec(v: int):
        if v == g.n:
            yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            if not adj[v].intersection(b):
                b.append(v)
                yield from rec(v + 1)
                b.pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(0)
