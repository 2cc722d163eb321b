"""Contraction and co-contraction of vertex sets.

Contracting a connected set B collapses it to one vertex joined to everything
that touched B; co-contracting an anticonnected set B collapses it to one
vertex joined to the common neighbors of B.  The two are complement-dual:

    co_contract(g, B) == complement(contract(complement(g), B))

Merged vertices get deterministic names v{...} listing their members sorted
by name; merging a set that already contains a merged vertex flattens, so
merging {v{a,b}, c} yields v{a,b,c}.  The merged vertex takes the position of
the earliest member of B in the vertex order.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .graphs import Graph, common_neighbors, is_anticonnected, is_connected, link

__all__ = [
    "merged_members",
    "merged_vertex_name",
    "contract",
    "co_contract",
    "co_contract_seq",
    "cocontraction_chain",
    "ChainStep",
]


def merged_members(name: str) -> tuple[str, ...] | None:
    """The member names encoded in a v{...} merged-vertex name, else None."""
    if name.startswith("v{") and name.endswith("}"):
        inner = name[2:-1]
        if inner:
            return tuple(inner.split(","))
    return None


def _expand(names: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for name in names:
        members = merged_members(name)
        out.update(members if members is not None else (name,))
    return frozenset(out)


def merged_vertex_name(b: Iterable[str]) -> str:
    """Deterministic name for the vertex replacing the set `b` (flattened)."""
    return "v{" + ",".join(sorted(_expand(b))) + "}"


def _merge(g: Graph, b: frozenset[str], new_neighbors: frozenset[str]) -> Graph:
    name = merged_vertex_name(b)
    first = min(g.index(v) for v in b)
    vertices: list[str] = []
    for i, v in enumerate(g.vertices):
        if i == first:
            vertices.append(name)
        elif v not in b:
            vertices.append(v)
    if vertices.count(name) > 1:
        raise ValueError(f"merged vertex name collides with existing vertex: {name!r}")
    edges = [e for e in g.edge_list() if e[0] not in b and e[1] not in b]
    edges.extend((name, q) for q in sorted(new_neighbors, key=g.index))
    return Graph(vertices, edges)


def contract(g: Graph, b: Iterable[str]) -> Graph:
    """Collapse the connected set `b`, joining the new vertex to everything
    that had a neighbor inside `b`."""
    bset = g.check_subset(b)
    if not bset:
        raise ValueError("empty vertex set")
    if not is_connected(g, bset):
        raise ValueError(f"set must be connected in the graph: {sorted(bset)}")
    touching = frozenset(
        q for q in g.vertices if q not in bset and link(g, q) & bset
    )
    return _merge(g, bset, touching)


def co_contract(g: Graph, b: Iterable[str]) -> Graph:
    """Collapse the anticonnected set `b`, joining the new vertex to the
    common neighbors of `b`."""
    bset = g.check_subset(b)
    if not bset:
        raise ValueError("empty vertex set")
    if not is_anticonnected(g, bset):
        raise ValueError(f"set must be anticonnected in the graph: {sorted(bset)}")
    return _merge(g, bset, common_neighbors(g, bset))


def co_contract_seq(g: Graph, bs: Iterable[Iterable[str]]) -> Graph:
    """Co-contract the sets of `bs` in order.

    The sets must be pairwise disjoint as sets of original vertices (a
    merged-vertex member counts as its member set) and each must be
    anticonnected in the graph current at its step.
    """
    sets = [frozenset(b) for b in bs]
    taken: set[str] = set()
    for i, b in enumerate(sets):
        expanded = _expand(b)
        if taken & expanded:
            raise ValueError(
                f"set {i + 1} overlaps an earlier set: {sorted(taken & expanded)}"
            )
        taken |= expanded
    out = g
    for i, b in enumerate(sets):
        try:
            out = co_contract(out, b)
        except ValueError as exc:
            raise ValueError(f"step {i + 1}: {exc}") from None
    return out


class ChainStep(NamedTuple):
    graph: Graph
    pair: frozenset[str]


def cocontraction_chain(g: Graph, b: Iterable[str]) -> list[ChainStep]:
    """Decompose co_contract(g, b) into |b|-1 two-vertex merges.

    Works down a spanning tree of the complement restricted to `b`,
    repeatedly merging a leaf with its tree neighbor; each merged pair is
    non-adjacent in the graph current at that step, and the final graph
    equals co_contract(g, b).
    """
    bset = g.check_subset(b)
    if not bset:
        raise ValueError("empty vertex set")
    if not is_anticonnected(g, bset):
        raise ValueError(f"set must be anticonnected in the graph: {sorted(bset)}")

    # Spanning tree of the complement induced on b, BFS from the least vertex.
    members = g.sorted_set(bset)
    tree: dict[str, set[str]] = {v: set() for v in members}
    seen = {members[0]}
    queue = [members[0]]
    while queue:
        v = queue.pop(0)
        for u in members:
            if u not in seen and not g.has_edge(u, v):
                tree[v].add(u)
                tree[u].add(v)
                seen.add(u)
                queue.append(u)

    steps: list[ChainStep] = []
    current = g
    order = {v: i for i, v in enumerate(g.vertices)}
    while len(tree) > 1:
        leaves = sorted((v for v, ns in tree.items() if len(ns) == 1), key=order.__getitem__)
        leaf = leaves[0]
        partner = next(iter(tree[leaf]))
        pair = frozenset((leaf, partner))
        current = co_contract(current, pair)
        merged = merged_vertex_name(pair)
        order[merged] = min(order[leaf], order[partner])
        neighbors = (tree.pop(leaf) | tree.pop(partner)) - pair
        tree[merged] = neighbors
        for v in neighbors:
            v_ns = tree[v]
            v_ns.discard(leaf)
            v_ns.discard(partner)
            v_ns.add(merged)
        steps.append(ChainStep(current, pair))
    return steps
