"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import random

from raagco import Graph, Word, make_family

# Complement of the hexagon a-b-d-f-c-e-a, the running example used across
# the suite: e.g. c and f are the common neighbors of {a, b}, and merging
# {a, b} turns it into a pentagon.
HEXCO_EDGES = [
    ("b", "e"),
    ("b", "f"),
    ("e", "f"),
    ("c", "d"),
    ("a", "c"),
    ("a", "d"),
    ("b", "c"),
    ("d", "e"),
    ("a", "f"),
]


def hexco() -> Graph:
    return Graph("abcdef", HEXCO_EDGES)


def star(n_leaves: int) -> Graph:
    names = ["hub"] + [f"leaf{i}" for i in range(1, n_leaves + 1)]
    return Graph(names, [("hub", leaf) for leaf in names[1:]])


def oracle_corpus() -> list[Graph]:
    """Twelve graphs spanning sparse to complete commutation."""
    return [
        make_family("cycle", 5),
        hexco(),
        make_family("complement_cycle", 7),
        make_family("complete", 4),
        make_family("complete", 5),
        make_family("path", 4),
        star(4),
        Graph("uvwxyz", [("u", "v"), ("v", "w"), ("v", "x"), ("x", "y"), ("x", "z")]),
        make_family("cycle", 4),
        make_family("cycle", 6),
        make_family("edgeless", 4),
        Graph("wxyz", [("w", "x"), ("x", "y"), ("w", "y"), ("y", "z")]),
    ]


def small_graphs() -> list[Graph]:
    """Tiny graphs for near-exhaustive word checks."""
    return [
        make_family("edgeless", 3),
        make_family("path", 3),
        make_family("complete", 3),
        make_family("cycle", 4),
        make_family("cycle", 5),
        make_family("complete", 4),
        Graph("abc", [("a", "b")]),
    ]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(names, edges)


def random_word(g: Graph, rng: random.Random, max_len: int) -> Word:
    k = rng.randint(0, max_len)
    return Word(g, [(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(k)])


def perturb_equal(w: Word, rng: random.Random, cap: int = 12) -> Word:
    """A word equal to `w` as a group element: random commuting swaps plus
    inverse-pair insertions."""
    g = w.graph
    letters = list(w.letters)
    for _ in range(rng.randint(0, 6)):
        if rng.random() < 0.5 and len(letters) >= 2:
            i = rng.randrange(len(letters) - 1)
            a, b = letters[i], letters[i + 1]
            if a[0] != b[0] and g.has_edge(a[0], b[0]):
                letters[i], letters[i + 1] = b, a
        elif len(letters) <= cap - 2:
            i = rng.randrange(len(letters) + 1)
            name = rng.choice(g.vertices)
            sign = rng.choice((1, -1))
            letters[i:i] = [(name, sign), (name, -sign)]
    return Word(g, letters)
