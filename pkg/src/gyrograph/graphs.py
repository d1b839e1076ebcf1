"""Simple undirected graphs and the power-graph construction.

The power graph of a finite gyrogroup has the elements as vertices, with
distinct u, v adjacent exactly when one is a positive power of the other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .gyrogroups import GyroGroup, power_closure


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1.

    Adjacency is kept twice: as bitmask rows (one int per vertex) for set
    algebra and as sorted neighbor tuples for traversals.  Construction
    builds both from the edge list and checks they agree.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] = field(default=())
    _adj_bits: tuple[int, ...] = field(default=(), repr=False, compare=False)
    _adj_lists: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        bits = [0] * self.n
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in norm:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            lists[u].append(v)
            lists[v].append(u)
        adj_lists = tuple(tuple(sorted(l)) for l in lists)
        # The two stores must describe the same relation.
        for v in range(self.n):
            if bits[v] != sum(1 << w for w in adj_lists[v]):
                raise AssertionError("adjacency stores disagree")
        object.__setattr__(self, "_adj_bits", tuple(bits))
        object.__setattr__(self, "_adj_lists", adj_lists)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj_bits[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj_lists[v]

    def neighbor_bits(self, v: int) -> int:
        return self._adj_bits[v]

    def degree(self, v: int) -> int:
        return len(self._adj_lists[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.n)), reverse=True))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w in self._adj_lists[v]:
                if not seen >> w & 1:
                    seen |= 1 << w
                    count += 1
                    stack.append(w)
        return count == self.n

    def connected_components(self) -> list[list[int]]:
        comps = []
        seen = [False] * self.n
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self._adj_lists[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: tuple[str, ...] = ()
    ) -> "Graph":
        return cls(n=n, edges=frozenset((u, v) for u, v in edges), labels=labels)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


@dataclass(frozen=True)
class StructureSummary:
    """Decomposition test for 'complete block plus pendants on one hub'."""

    matches_gn_shape: bool
    clique_part: frozenset[int]
    pendant_part: frozenset[int]
    hub: int | None


def power_graph(g: GyroGroup) -> Graph:
    """Power graph: u ~ v iff v is in the power closure of u or vice versa."""
    closures = [power_closure(g, a) for a in g.elements()]
    edges = set()
    for u in g.elements():
        for v in closures[u]:
            if v != u:
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(g.order, edges, labels=g.labels)


def classify_gn_shape(graph: Graph) -> StructureSummary:
    """Detect a complete graph on half the vertices with the other half
    pendant on a single clique vertex."""
    no_match = StructureSummary(False, frozenset(), frozenset(), None)
    n = graph.n
    if n < 2 or n % 2:
        return no_match
    pendants = frozenset(v for v in graph.vertices() if graph.degree(v) == 1)
    if len(pendants) != n // 2:
        return no_match
    hubs = {graph.neighbors(v)[0] for v in pendants}
    if len(hubs) != 1:
        return no_match
    hub = next(iter(hubs))
    clique = frozenset(graph.vertices()) - pendants
    if hub not in clique:
        return no_match
    k = len(clique)
    clique_edges = sum(
        1 for u, v in graph.edges if u in clique and v in clique
    )
    if clique_edges != k * (k - 1) // 2:
        return no_match
    return StructureSummary(True, clique, pendants, hub)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices (re-indexed in sorted order)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index
    ]
    return Graph.from_edges(
        len(vs), edges, labels=tuple(graph.labels[v] for v in vs)
    )


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def to_dot(graph: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in graph.vertices():
        lines.append(f'  {v} [label="{graph.labels[v]}"];')
    for u, v in graph.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: Graph) -> str:
    payload = {
        "n": graph.n,
        "labels": list(graph.labels),
        "edges": [[u, v] for u, v in graph.sorted_edges()],
    }
    return json.dumps(payload, sort_keys=True)


def from_json(text: str) -> Graph:
    data = json.loads(text)
    return Graph.from_edges(
        int(data["n"]),
        ((int(u), int(v)) for u, v in data["edges"]),
        labels=tuple(data.get("labels", ())),
    )


def export(graph: Graph, fmt: str) -> str:
    """Deterministic serialization; fmt is 'dot' or 'json'."""
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "json":
        return to_json(graph)
    raise ValueError(f"unknown export format {fmt!r}")
