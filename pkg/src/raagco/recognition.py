"""Exact small-graph recognition: induced cycles, (weak) chordality, isomorphism.

Everything here is exhaustive search with pruning, deliberately capped at
sizes where exhaustive is still instant.
"""

from __future__ import annotations

from collections import Counter

from .graphs import Graph, complement

__all__ = [
    "MAX_CYCLE_SEARCH_VERTICES",
    "MAX_ISO_VERTICES",
    "find_induced_cycle",
    "is_induced_cycle",
    "is_chordal",
    "is_weakly_chordal",
    "is_isomorphic",
]

MAX_CYCLE_SEARCH_VERTICES = 16
MAX_ISO_VERTICES = 12


def find_induced_cycle(g: Graph, min_len: int) -> list[str] | None:
    """First induced cycle with at least `min_len` vertices, or None.

    The witness is deterministic: depth-first extension of induced paths,
    starting vertices and neighbors tried in vertex insertion order, each
    cycle rooted at its least vertex.
    """
    if min_len < 3:
        raise ValueError(f"min_len must be at least 3, got {min_len}")
    if len(g) > MAX_CYCLE_SEARCH_VERTICES:
        raise ValueError(
            f"graph too large for exact cycle search ({len(g)} > {MAX_CYCLE_SEARCH_VERTICES})"
        )
    vs = g.vertices
    order = {v: i for i, v in enumerate(vs)}

    def extend(path: list[str], in_path: set[str]) -> list[str] | None:
        last = path[-1]
        start = path[0]
        for w in vs:
            if w in in_path or order[w] <= order[start] or not g.has_edge(last, w):
                continue
            # Chord to an internal vertex kills every cycle through this path.
            if any(g.has_edge(w, p) for p in path[1:-1]):
                continue
            if len(path) >= 2 and g.has_edge(w, start):
                if len(path) + 1 >= min_len:
                    return path + [w]
                continue  # adjacent to the root: can only ever close, too short here
            found = extend(path + [w], in_path | {w})
            if found is not None:
                return found
        return None

    for v in vs:
        found = extend([v], {v})
        if found is not None:
            return found
    return None


def is_induced_cycle(g: Graph, cycle: list[str]) -> bool:
    """Check a witness: distinct vertices, consecutive adjacent (cyclically),
    all other pairs non-adjacent."""
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        return False
    for v in cycle:
        if not g.has_vertex(v):
            return False
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = j - i == 1 or (i == 0 and j == n - 1)
            if adjacent != consecutive:
                return False
    return True


def is_chordal(g: Graph) -> bool:
    """True iff the graph has no induced cycle on 4 or more vertices."""
    return find_induced_cycle(g, 4) is None


def is_weakly_chordal(g: Graph) -> bool:
    """True iff neither the graph nor its complement has an induced cycle on
    5 or more vertices."""
    return find_induced_cycle(g, 5) is None and find_induced_cycle(complement(g), 5) is None


def _signature(g: Graph) -> dict[str, tuple]:
    degree = {v: len(g.neighbors(v)) for v in g.vertices}
    return {
        v: (degree[v], tuple(sorted(degree[u] for u in g.neighbors(v))))
        for v in g.vertices
    }


def is_isomorphic(g1: Graph, g2: Graph) -> dict[str, str] | None:
    """A vertex bijection preserving adjacency both ways, or None.

    Backtracking with degree and neighbor-degree pruning; exact at this scale.
    """
    for g in (g1, g2):
        if len(g) > MAX_ISO_VERTICES:
            raise ValueError(
                f"graph too large for isomorphism search ({len(g)} > {MAX_ISO_VERTICES})"
            )
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return None
    sig1, sig2 = _signature(g1), _signature(g2)
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None
    # Assign rare signatures first to fail fast.
    counts = Counter(sig1.values())
    vs1 = sorted(g1.vertices, key=lambda v: (counts[sig1[v]], g1.index(v)))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def assign(k: int) -> bool:
        if k == len(vs1):
            return True
        v = vs1[k]
        for w in g2.vertices:
            if w in used or sig2[w] != sig1[v]:
                continue
            if any(g1.has_edge(v, u) != g2.has_edge(w, mapping[u]) for u in mapping):
                continue
            mapping[v] = w
            used.add(w)
            if assign(k + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    if assign(0):
        return {v: mapping[v] for v in g1.vertices}
    return None
