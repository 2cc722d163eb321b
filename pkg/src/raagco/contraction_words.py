"""Contraction sequences, contraction words, and contraction elements.

A contraction sequence over an anticonnected set B lists vertices of B so
that for every ordered pair (b, b') some index-increasing subsequence walks
from b to b' along non-edges inside B.  A contraction word is a reduced word
over B whose vertex sequence is a contraction sequence; a contraction
element is one whose normal form is such a word.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Graph, is_anticonnected
from .words import Word, find_q_pair, normal_form

__all__ = [
    "is_contraction_sequence",
    "is_contraction_word",
    "default_contraction_word",
    "is_contraction_element",
]


def _checked_set(g: Graph, b: Iterable[str]) -> frozenset[str]:
    bset = g.check_subset(b)
    if not bset:
        raise ValueError("empty vertex set")
    if not is_anticonnected(g, bset):
        raise ValueError(f"set must be anticonnected in the graph: {sorted(bset)}")
    return bset


def is_contraction_sequence(seq: Sequence[str], g: Graph, b: Iterable[str]) -> bool:
    """Can every ordered pair of B-vertices be joined by an index-increasing
    walk along non-edges within the sequence?

    A monotone walk contains a monotone path (cut out any revisited-vertex
    segment), so reachability over index-increasing complement edges decides
    the path condition.
    """
    bset = _checked_set(g, b)
    for v in seq:
        if v not in bset:
            raise ValueError(f"sequence vertex not in the set: {v!r}")
    n = len(seq)
    reach: list[set[str]] = [set() for _ in range(n)]
    for i in range(n - 1, -1, -1):
        r = {seq[i]}
        for j in range(i + 1, n):
            if seq[j] != seq[i] and not g.has_edge(seq[i], seq[j]):
                r |= reach[j]
        reach[i] = r
    starts: dict[str, list[int]] = {v: [] for v in bset}
    for i, v in enumerate(seq):
        starts[v].append(i)
    return all(
        any(y in reach[i] for i in starts[x]) for x in bset for y in bset
    )


def is_contraction_word(w: Word, b: Iterable[str]) -> bool:
    """True iff `w` is reduced, runs over B, and its vertex sequence is a
    contraction sequence."""
    g = w.graph
    bset = _checked_set(g, b)
    if find_q_pair(w) is not None:
        return False
    seq = [name for name, _ in w.letters]
    if any(v not in bset for v in seq):
        return False
    return is_contraction_sequence(seq, g, bset)


def default_contraction_word(g: Graph, b: Iterable[str]) -> Word:
    """The stock contraction word for B.

    Singletons give the letter itself; a pair {x, y} gives y^-1 x y with y
    the later vertex; larger sets walk a closed spanning walk of the
    complement inside B twice (minus the repeated start), all letters
    positive.
    """
    bset = _checked_set(g, b)
    members = g.sorted_set(bset)
    if len(members) == 1:
        return Word(g, [(members[0], 1)])
    if len(members) == 2:
        x, y = members
        return Word(g, [(y, -1), (x, 1), (y, 1)])

    # Spanning tree of the complement induced on b, then its closed DFS tour.
    tree: dict[str, list[str]] = {v: [] for v in members}
    seen = {members[0]}

    def visit(v: str) -> None:
        for u in members:
            if u not in seen and not g.has_edge(u, v):
                seen.add(u)
                tree[v].append(u)
                visit(u)

    visit(members[0])

    walk: list[str] = []

    def tour(v: str) -> None:
        walk.append(v)
        for child in tree[v]:
            tour(child)
            walk.append(v)

    tour(members[0])
    doubled = walk + walk[1:]
    return Word(g, [(v, 1) for v in doubled])


def is_contraction_element(w: Word, b: Iterable[str]) -> bool:
    """True iff the element of `w` has a contraction word of B as its
    reduced form."""
    return is_contraction_word(normal_form(w), b)
