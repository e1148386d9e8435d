"""Intersection graphs of (-2)-curves and recognition of ADE configurations.

A subset of curves contracts to rational double points exactly when its
induced graph is a disjoint union of simply-laced Dynkin diagrams. Edge weight
semantics for recognition: 0 disjoint, 1 adjacent, >= 2 disqualifies.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .core import AdeComponent, AdeType

BUNDLED = ("S1", "S2")


class GraphFormatError(ValueError):
    pass


class UnknownLabelError(KeyError):
    pass


@dataclass(frozen=True)
class CurveGraph:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]  # (i, j, weight) with i < j

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphFormatError(f"{self.name}: duplicate vertex labels")
        seen = set()
        n = len(self.vertices)
        for i, j, w in self.edges:
            if not (0 <= i < j < n):
                raise GraphFormatError(f"{self.name}: bad edge indices ({i}, {j})")
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise GraphFormatError(f"{self.name}: edge weight must be a positive integer, got {w!r}")
            if (i, j) in seen:
                raise GraphFormatError(
                    f"{self.name}: duplicate edge {self.vertices[i]}-{self.vertices[j]}"
                )
            seen.add((i, j))
        nbrs: list[dict[int, int]] = [dict() for _ in range(n)]
        for i, j, w in self.edges:
            nbrs[i][j] = w
            nbrs[j][i] = w
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(self.vertices)})
        object.__setattr__(self, "_nbrs", tuple(nbrs))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def weight(self, a: str, b: str) -> int:
        return self._nbrs[self.index(a)].get(self.index(b), 0)

    def neighbors(self, i: int) -> Mapping[int, int]:
        return self._nbrs[i]

    def __len__(self) -> int:
        return len(self.vertices)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "edges": [[self.vertices[i], self.vertices[j], w] for i, j, w in self.edges],
        }


def _check_label(x) -> str:
    if not isinstance(x, str) or not x or not x.isascii() or any(ch.isspace() for ch in x):
        raise GraphFormatError(f"labels must be non-empty ASCII strings without whitespace, got {x!r}")
    return x


def parse_graph(doc: Mapping) -> CurveGraph:
    """Build a graph from its document form; weight defaults to 1."""
    if not isinstance(doc, Mapping):
        raise GraphFormatError("graph document must be an object")
    try:
        name = doc["name"]
        vertices = [_check_label(v) for v in doc["vertices"]]
        raw_edges = doc["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphFormatError(f"missing or malformed field: {exc!r}") from exc
    if not isinstance(name, str):
        raise GraphFormatError("name must be a string")
    index = {v: k for k, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise GraphFormatError(f"{name}: duplicate vertex labels")
    edges = {}
    for e in raw_edges:
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise GraphFormatError(f"{name}: edge must be [a, b] or [a, b, weight], got {e!r}")
        a, b = e[0], e[1]
        w = e[2] if len(e) == 3 else 1
        if a not in index or b not in index:
            raise GraphFormatError(f"{name}: edge {e!r} names an unknown vertex")
        if a == b:
            raise GraphFormatError(f"{name}: self-loop at {a}")
        i, j = sorted((index[a], index[b]))
        if (i, j) in edges:
            raise GraphFormatError(f"{name}: duplicate edge {a}-{b}")
        edges[i, j] = w
    return CurveGraph(name, tuple(vertices), tuple((i, j, w) for (i, j), w in sorted(edges.items())))


def load_graph(path: str | Path) -> CurveGraph:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: not valid JSON: {exc}") from exc
    return parse_graph(doc)


def bundled_graph(name: str) -> CurveGraph:
    if name not in BUNDLED:
        raise KeyError(f"unknown bundled graph {name!r}; known: {', '.join(BUNDLED)}")
    text = resources.files("rdplattice.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return parse_graph(json.loads(text))


def graph_from_gram(name: str, labels: Sequence[str], gram: Sequence[Sequence[int]]) -> CurveGraph:
    """Dual graph of a set of (-2)-vectors: off-diagonal entries become edge weights."""
    edges = []
    for i, j in combinations(range(len(labels)), 2):
        w = gram[i][j]
        if w < 0:
            raise GraphFormatError(f"negative pairing {labels[i]}.{labels[j]} = {w}")
        if w:
            edges.append((i, j, w))
    return CurveGraph(name, tuple(labels), tuple(edges))


# --- recognition ----------------------------------------------------------------


def _component_type(nodes: list[int], adj: dict[int, list[int]]) -> AdeComponent | None:
    n = len(nodes)
    if sum(len(adj[v]) for v in nodes) // 2 != n - 1:
        return None  # a connected graph with n - 1 edges is a tree
    forks = [v for v in nodes if len(adj[v]) >= 3]
    if not forks:
        return AdeComponent("A", n)
    if len(forks) > 1 or len(adj[forks[0]]) > 3:
        return None
    centre = forks[0]
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while len(adj[cur]) == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return AdeComponent("D", n)
    if arms == [1, 2, 2]:
        return AdeComponent("E", 6)
    if arms == [1, 2, 3]:
        return AdeComponent("E", 7)
    if arms == [1, 2, 4]:
        return AdeComponent("E", 8)
    return None


def _recognize_indices(g: CurveGraph, idx: Iterable[int]) -> AdeType | None:
    chosen = set(idx)
    adj: dict[int, list[int]] = {}
    for v in chosen:
        row = []
        for u, w in g.neighbors(v).items():
            if u in chosen:
                if w >= 2:
                    return None
                row.append(u)
        adj[v] = row
    comps = []
    unseen = set(chosen)
    while unseen:
        start = min(unseen)
        stack, nodes = [start], []
        unseen.discard(start)
        while stack:
            v = stack.pop()
            nodes.append(v)
            for u in adj[v]:
                if u in unseen:
                    unseen.discard(u)
                    stack.append(u)
        c = _component_type(nodes, adj)
        if c is None:
            return None
        comps.append(c)
    return AdeType(comps)


def recognize_ade(g: CurveGraph, subset: Iterable[str]) -> AdeType | None:
    """ADE type of the induced subgraph on ``subset``, or None if it is not Dynkin."""
    return _recognize_indices(g, [g.index(v) for v in subset])


@dataclass(frozen=True)
class AdeConfiguration:
    subset: tuple[str, ...]
    type: AdeType


def _subsets(g: CurveGraph, k: int):
    """k-subsets (as index lists) whose induced graph can still be Dynkin.

    A double edge, a cycle, a vertex of degree 4 or a second fork in one
    component never disappears when vertices are added, so such branches are
    cut early.
    """
    n = len(g)

    def rec(start: int, chosen: list[int], comp: dict, degree: dict, forks: dict):
        if len(chosen) == k:
            yield list(chosen)
            return
        for v in range(start, n - (k - len(chosen)) + 1):
            touching = [(u, w) for u, w in g.neighbors(v).items() if u in comp]
            if any(w >= 2 for _, w in touching) or len(touching) >= 4:
                continue
            roots = {comp[u] for u, _ in touching}
            if len(roots) != len(touching):
                continue  # two neighbours in one tree: cycle
            if any(degree[u] >= 3 for u, _ in touching):
                continue
            new_forks = sum(forks[r] for r in roots) + (len(touching) == 3)
            new_forks += sum(1 for u, _ in touching if degree[u] == 2)
            if new_forks > 1:
                continue
            comp2 = {u: (v if r in roots else r) for u, r in comp.items()}
            comp2[v] = v
            degree2 = dict(degree)
            for u, _ in touching:
                degree2[u] += 1
            degree2[v] = len(touching)
            forks2 = {r: f for r, f in forks.items() if r not in roots}
            forks2[v] = new_forks
            chosen.append(v)
            yield from rec(v + 1, chosen, comp2, degree2, forks2)
            chosen.pop()

    yield from rec(0, [], {}, {}, {})


def search_configurations(g: CurveGraph, k: int, with_subsets: bool = False):
    """All ADE types realized by k-vertex induced subgraphs of ``g``.

    Deduplicating by type is the same as deduplicating up to graph
    isomorphism, since a disjoint union of Dynkin diagrams is determined by its
    type. Returns sorted types, or sorted :class:`AdeConfiguration` records when
    ``with_subsets`` is set.
    """
    if not 1 <= k <= len(g):
        raise ValueError(f"size {k} out of range 1..{len(g)}")
    found: dict[AdeType, list[tuple[str, ...]]] = {}
    for idx in _subsets(g, k):
        t = _recognize_indices(g, idx)
        if t is not None:
            found.setdefault(t, []).append(tuple(sorted(g.vertices[i] for i in idx)))
    types = sorted(found, key=str)
    if not with_subsets:
        return types
    return [AdeConfiguration(sub, t) for t in types for sub in sorted(found[t])]
