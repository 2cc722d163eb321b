"""Words over a graph's vertex generators, where adjacent vertices commute.

A word is a sequence of signed letters over an ambient graph.  Two reduced
words represent the same group element exactly when they differ by swapping
adjacent letters with distinct, adjacent vertices, so the canonical form
used here is the lexicographically least reduced word under such swaps
(vertex order first, positive before negative at equal vertex).

Reduction follows the cancellation criterion directly: a word is not reduced
iff it contains two opposite-sign letters of some vertex q with no q-letter
strictly between whose intermediate subword reduces into the subgroup
generated by the link of q.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import Graph

__all__ = [
    "Word",
    "QPairWitness",
    "parse_word",
    "concat",
    "inverse",
    "power",
    "find_q_pair",
    "normal_form",
    "equals",
    "support",
    "in_parabolic",
    "cyclic_reduce",
    "random_reduced_word",
]


def _check_letter(g: Graph, letter: tuple[str, int]) -> tuple[str, int]:
    name, sign = letter
    g.index(name)
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
    return (name, sign)


class Word:
    """An immutable word: a tuple of (vertex, sign) letters over a graph."""

    __slots__ = ("graph", "letters", "_enc")

    def __init__(self, graph: Graph, letters: Iterable[tuple[str, int]] = ()):
        ls = tuple(_check_letter(graph, l) for l in letters)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "letters", ls)
        object.__setattr__(
            self, "_enc", tuple(graph.index(n) * 2 + (sign < 0) for n, sign in ls)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.graph == other.graph and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.graph, self.letters))

    def __mul__(self, other: "Word") -> "Word":
        if self.graph != other.graph:
            raise ValueError("words have different ambient graphs")
        return _from_enc(self.graph, self._enc + other._enc)

    def __invert__(self) -> "Word":
        return _from_enc(self.graph, tuple(x ^ 1 for x in reversed(self._enc)))

    def __pow__(self, m: int) -> "Word":
        base = self if m >= 0 else ~self
        return _from_enc(self.graph, base._enc * abs(m))

    def __str__(self) -> str:
        return " ".join(n if s > 0 else f"{n}^-1" for n, s in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _from_enc(g: Graph, enc: Sequence[int]) -> Word:
    vs = g.vertices
    return Word(g, ((vs[x >> 1], -1 if x & 1 else 1) for x in enc))


def parse_word(text: str, g: Graph) -> Word:
    """Parse whitespace-separated letters, each `name` or `name^-1`."""
    letters = []
    for token in text.split():
        if token.endswith("^-1"):
            name, sign = token[:-3], -1
        elif "^" in token:
            raise ValueError(f"malformed letter token: {token!r}")
        else:
            name, sign = token, 1
        if not g.has_vertex(name):
            raise ValueError(f"vertex not in graph: {name!r}")
        letters.append((name, sign))
    return Word(g, letters)


def concat(w1: Word, w2: Word) -> Word:
    return w1 * w2


def inverse(w: Word) -> Word:
    return ~w


def power(w: Word, m: int) -> Word:
    return w**m


# --- reduction ---


def _segment_cancellable(g: Graph, w: Sequence[int], i: int, j: int, link_idx: frozenset[int]) -> bool:
    """Does w[i+1:j] reduce to a word whose vertices all lie in link_idx?

    Letters already in the link are fine as they stand.  For the rest, a
    nonzero exponent sum survives any reduction, so only balanced outside
    vertices force the recursive check.
    """
    sums: dict[int, int] = {}
    for k in range(i + 1, j):
        u = w[k] >> 1
        if u not in link_idx:
            sums[u] = sums.get(u, 0) + (-1 if w[k] & 1 else 1)
    if not sums:
        return True
    if any(s != 0 for s in sums.values()):
        return False
    reduced = _reduce(g, tuple(w[i + 1 : j]))
    return all((x >> 1) in link_idx for x in reduced)


def _find_cancel(g: Graph, w: Sequence[int]) -> tuple[int, int] | None:
    last: dict[int, int] = {}
    nbr = g._nbr_idx
    for j, x in enumerate(w):
        v = x >> 1
        i = last.get(v, -1)
        if i >= 0 and (w[i] ^ x) == 1 and _segment_cancellable(g, w, i, j, nbr[v]):
            return i, j
        last[v] = j
    return None


@lru_cache(maxsize=1 << 17)
def _reduce(g: Graph, enc: tuple[int, ...]) -> tuple[int, ...]:
    """Delete cancelling letter pairs until none remain."""
    w = list(enc)
    while True:
        found = _find_cancel(g, w)
        if found is None:
            return tuple(w)
        i, j = found
        del w[j]
        del w[i]


def _canonical(g: Graph, enc: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least shuffle of a reduced word.

    Greedy extraction: a letter is available once every earlier letter
    commutes with it (distinct, adjacent vertices); always emit the least
    available letter by (vertex order, sign), leftmost on ties.
    """
    n = len(enc)
    if n < 2:
        return tuple(enc)
    nbr = g._nbr_idx
    blocked = [0] * n
    blocks: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        vi_nbr = nbr[enc[i] >> 1]
        for j in range(i):
            if (enc[j] >> 1) not in vi_nbr:
                blocked[i] += 1
                blocks[j].append(i)
    heap = [(enc[i], i) for i in range(n) if blocked[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        x, i = heapq.heappop(heap)
        out.append(x)
        for j in blocks[i]:
            blocked[j] -= 1
            if blocked[j] == 0:
                heapq.heappush(heap, (enc[j], j))
    return tuple(out)


@dataclass(frozen=True)
class QPairWitness:
    """Two opposite-sign letters of one vertex that cancel across their gap."""

    i: int
    j: int
    vertex: str
    intermediate: Word


def find_q_pair(w: Word) -> QPairWitness | None:
    """First cancelling pair: leftmost start, its next same-vertex letter.

    Positions (i, j) qualify when the letters are opposite signs of one
    vertex q, no q-letter lies strictly between, and the intermediate
    subword reduces into the subgroup generated by link(q).
    """
    g = w.graph
    enc = w._enc
    nbr = g._nbr_idx
    n = len(enc)
    for i in range(n):
        x = enc[i]
        v = x >> 1
        for j in range(i + 1, n):
            if (enc[j] >> 1) != v:
                continue
            if (enc[j] ^ x) == 1 and _segment_cancellable(g, enc, i, j, nbr[v]):
                return QPairWitness(
                    i, j, g.vertices[v], _from_enc(g, enc[i + 1 : j])
                )
            break
    return None


def normal_form(w: Word) -> Word:
    """The canonical representative: cancel all pairs, then take the
    lexicographically least shuffle."""
    return _from_enc(w.graph, _canonical(w.graph, _reduce(w.graph, w._enc)))


def equals(w1: Word, w2: Word) -> bool:
    """Do the words represent the same group element?"""
    if w1.graph != w2.graph:
        raise ValueError("words have different ambient graphs")
    return normal_form(w1).letters == normal_form(w2).letters


def support(w: Word) -> frozenset[str]:
    """Vertices appearing in the normal form."""
    g = w.graph
    return frozenset(g.vertices[x >> 1] for x in _reduce(g, w._enc))


def in_parabolic(w: Word, s: Iterable[str]) -> bool:
    """Does the element lie in the subgroup generated by `s`?"""
    return support(w) <= w.graph.check_subset(s)


def _movable(g: Graph, enc: Sequence[int], from_front: bool) -> list[int]:
    """Positions whose letter can reach the front (or back) by swaps."""
    nbr = g._nbr_idx
    out = []
    rng = range(len(enc)) if from_front else range(len(enc) - 1, -1, -1)
    for i in rng:
        v = enc[i] >> 1
        others = enc[:i] if from_front else enc[i + 1 :]
        if all((y >> 1) in nbr[v] for y in others):
            out.append(i)
    return out


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split `w` as a conjugate u^-1 * v * u with v cyclically reduced.

    After reduction, repeatedly strip a letter x^e that can reach the front
    together with x^-e reaching the back; each stripped pair moves into the
    conjugator u.
    """
    g = w.graph
    v = list(_reduce(g, w._enc))
    u: list[int] = []
    while True:
        fronts = _movable(g, v, True)
        backs = _movable(g, v, False)
        back_values: dict[int, int] = {}
        for j in backs:  # descending positions, so the first write is rightmost
            back_values.setdefault(v[j], j)
        strip = None
        for i in fronts:
            j = back_values.get(v[i] ^ 1)
            if j is not None and j != i:
                strip = (i, j)
                break
        if strip is None:
            break
        i, j = strip
        u.insert(0, v[i] ^ 1)
        del v[j]
        del v[i]
    u_word = _from_enc(g, _canonical(g, tuple(u)))
    v_word = _from_enc(g, _canonical(g, tuple(v)))
    return u_word, v_word


def random_reduced_word(g: Graph, s: Iterable[str], max_len: int, seed: int) -> Word:
    """Normal form of `max_len` uniformly random letters over s; deterministic
    for fixed arguments."""
    sub = g.check_subset(s)
    if not sub:
        raise ValueError("empty vertex set")
    if max_len < 0:
        raise ValueError(f"max_len must be nonnegative, got {max_len}")
    names = g.sorted_set(sub)
    rng = random.Random(seed)
    letters = [(rng.choice(names), rng.choice((1, -1))) for _ in range(max_len)]
    return normal_form(Word(g, letters))
