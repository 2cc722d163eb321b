"""Finite simple graphs with ordered, named vertices.

Vertex order is insertion order and is preserved by every operation in the
package; deterministic output (JSON, witnesses, merged-vertex placement)
leans on it throughout.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable

__all__ = [
    "Graph",
    "complement",
    "induced_subgraph",
    "link",
    "is_connected",
    "is_anticonnected",
    "common_neighbors",
    "make_family",
    "load_graph",
]

FAMILY_KINDS = ("cycle", "complement_cycle", "path", "complete", "edgeless")


def _check_name(name: object) -> str:
    if not isinstance(name, str) or not name:
        raise ValueError(f"vertex name must be a nonempty string, got {name!r}")
    if any(ch.isspace() for ch in name):
        raise ValueError(f"vertex name may not contain whitespace: {name!r}")
    if "^" in name:
        raise ValueError(f"vertex name may not contain '^': {name!r}")
    return name


class Graph:
    """An immutable simple graph: ordered vertex names plus an edge set."""

    __slots__ = ("vertices", "edges", "_index", "_adj", "_nbr_idx", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vs = tuple(_check_name(v) for v in vertices)
        index: dict[str, int] = {}
        for v in vs:
            if v in index:
                raise ValueError(f"duplicate vertex: {v!r}")
            index[v] = len(index)
        adj: dict[str, set[str]] = {v: set() for v in vs}
        es = set()
        for e in edges:
            u, v = e
            if u not in index:
                raise ValueError(f"vertex not in graph: {u!r}")
            if v not in index:
                raise ValueError(f"vertex not in graph: {v!r}")
            if u == v:
                raise ValueError(f"loop edge not allowed: {u!r}")
            es.add(frozenset((u, v)))
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", {v: frozenset(ns) for v, ns in adj.items()})
        object.__setattr__(
            self,
            "_nbr_idx",
            tuple(frozenset(index[u] for u in adj[v]) for v in vs),
        )
        object.__setattr__(self, "_hash", hash((vs, frozenset(es))))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({list(self.vertices)!r}, {self.edge_list()!r})"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"vertex not in graph: {v!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def has_edge(self, u: str, v: str) -> bool:
        self.index(u)
        self.index(v)
        return v in self._adj[u]

    def neighbors(self, v: str) -> frozenset[str]:
        self.index(v)
        return self._adj[v]

    def sorted_set(self, s: Iterable[str]) -> list[str]:
        """Vertices of `s` listed in this graph's vertex order."""
        return sorted(self.check_subset(s), key=self._index.__getitem__)

    def check_subset(self, s: Iterable[str]) -> frozenset[str]:
        out = frozenset(s)
        for v in out:
            self.index(v)
        return out

    def edge_list(self) -> list[tuple[str, str]]:
        """Canonical edge list: endpoints sorted by vertex order, edges likewise."""
        idx = self._index
        pairs = [tuple(sorted(e, key=idx.__getitem__)) for e in self.edges]
        pairs.sort(key=lambda p: (idx[p[0]], idx[p[1]]))
        return pairs

    # --- serialization ---

    def to_json_obj(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edge_list()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Graph":
        if not isinstance(obj, dict) or "vertices" not in obj:
            raise ValueError("graph JSON must be an object with a 'vertices' key")
        return cls(obj["vertices"], obj.get("edges", ()))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid graph JSON: {exc}") from None
        return cls.from_json_obj(obj)

    @classmethod
    def from_dot(cls, text: str) -> "Graph":
        """Parse the undirected DOT subset `graph NAME { a -- b; c; }`.

        Statements are vertex names or `--` chains, separated by ';' or
        newlines.  Vertices appear in order of first mention.
        """
        body = text.strip()
        if not body.startswith("graph"):
            raise ValueError("DOT input must start with 'graph'")
        open_b = body.find("{")
        close_b = body.rfind("}")
        if open_b < 0 or close_b < open_b:
            raise ValueError("DOT input must contain a braced body")
        vertices: list[str] = []
        seen: set[str] = set()
        edges: list[tuple[str, str]] = []

        def note(name: str) -> str:
            if name not in seen:
                seen.add(name)
                vertices.append(name)
            return name

        for raw in body[open_b + 1 : close_b].replace("\n", ";").split(";"):
            stmt = raw.strip()
            if not stmt:
                continue
            names = [part.strip() for part in stmt.split("--")]
            if any(not n or any(c.isspace() for c in n) for n in names):
                raise ValueError(f"malformed DOT statement: {stmt!r}")
            for n in names:
                note(n)
            for a, b in zip(names, names[1:]):
                edges.append((a, b))
        return cls(vertices, edges)


def load_graph(text: str) -> Graph:
    """Read a graph from JSON, or from the DOT subset if the text starts with 'graph'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return Graph.from_json(text)
    return Graph.from_dot(text)


def complement(g: Graph) -> Graph:
    """The graph on the same ordered vertices with the complementary edge set."""
    vs = g.vertices
    edges = [
        (vs[i], vs[j])
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
        if not g.has_edge(vs[i], vs[j])
    ]
    return Graph(vs, edges)


def _nonempty_subset(g: Graph, s: Iterable[str]) -> frozenset[str]:
    out = g.check_subset(s)
    if not out:
        raise ValueError("empty vertex set")
    return out


def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    """The subgraph induced on `s`, vertices kept in the ambient order."""
    sub = _nonempty_subset(g, s)
    vs = [v for v in g.vertices if v in sub]
    edges = [e for e in g.edge_list() if e[0] in sub and e[1] in sub]
    return Graph(vs, edges)


def link(g: Graph, v: str) -> frozenset[str]:
    """All vertices adjacent to `v`."""
    return g.neighbors(v)


def is_connected(g: Graph, s: Iterable[str]) -> bool:
    """True iff the subgraph induced on `s` is connected (singletons count)."""
    sub = _nonempty_subset(g, s)
    start = next(iter(sub))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in sub and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(sub)


def is_anticonnected(g: Graph, s: Iterable[str]) -> bool:
    """True iff the complement of the subgraph induced on `s` is connected."""
    sub = _nonempty_subset(g, s)
    start = next(iter(sub))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in sub:
            if u != v and u not in seen and not g.has_edge(u, v):
                seen.add(u)
                queue.append(u)
    return len(seen) == len(sub)


def common_neighbors(g: Graph, s: Iterable[str]) -> frozenset[str]:
    """Vertices adjacent to every member of `s` (members themselves never qualify)."""
    sub = _nonempty_subset(g, s)
    out = None
    for v in sub:
        ns = g.neighbors(v)
        out = ns if out is None else out & ns
    return frozenset(out - sub)


def make_family(kind: str, n: int) -> Graph:
    """A named small graph: cycle, complement_cycle, path, complete or edgeless on v1..vn."""
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind: {kind!r} (choose from {', '.join(FAMILY_KINDS)})")
    if kind in ("cycle", "complement_cycle"):
        if n < 3:
            raise ValueError(f"{kind} needs n >= 3, got {n}")
    elif n < 1:
        raise ValueError(f"{kind} needs n >= 1, got {n}")
    names = [f"v{i}" for i in range(1, n + 1)]
    if kind == "cycle":
        edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    elif kind == "complement_cycle":
        edges = [
            (names[i], names[j])
            for i in range(n)
            for j in range(i + 1, n)
            if (j - i) % n not in (1, n - 1)
        ]
    elif kind == "path":
        edges = [(names[i], names[i + 1]) for i in range(n - 1)]
    elif kind == "complete":
        edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    else:
        edges = []
    return Graph(names, edges)
