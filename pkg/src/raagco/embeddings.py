"""Homomorphisms from a co-contracted graph's group back to the original.

A co-contraction spec picks disjoint anticonnected sets B_i of a graph and a
contraction word w_i for each; the induced map sends the merged vertex of
B_i to w_i and every other vertex to itself.  Such maps are well defined
(images of adjacent vertices commute) and injective; injectivity is checked
here by seeded sampling: a nonempty reduced source word must never map to
the trivial element.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .contraction_words import default_contraction_word, is_contraction_word
from .graphs import Graph, is_anticonnected
from .transform import _expand, co_contract_seq, merged_vertex_name
from .words import Word, _canonical, _from_enc, _reduce, parse_word

__all__ = [
    "CoContractionSpec",
    "Homomorphism",
    "InjectivityReport",
    "IntersectionReport",
    "build_hom",
    "apply_hom",
    "check_well_defined",
    "sample_injectivity",
    "sample_intersection",
]


@dataclass(frozen=True)
class CoContractionSpec:
    """A source graph plus ordered (set, word) sites; word None means default."""

    graph: Graph
    sites: tuple[tuple[frozenset[str], Word | None], ...]

    @classmethod
    def make(
        cls, graph: Graph, sites: Iterable[tuple[Iterable[str], Word | None]]
    ) -> "CoContractionSpec":
        return cls(graph, tuple((frozenset(b), w) for b, w in sites))

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph.to_json_obj(),
            "contractions": [
                {"set": self.graph.sorted_set(b), **({"word": str(w)} if w is not None else {})}
                for b, w in self.sites
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CoContractionSpec":
        if not isinstance(obj, dict) or "graph" not in obj:
            raise ValueError("spec JSON must be an object with a 'graph' key")
        g = Graph.from_json_obj(obj["graph"])
        sites = []
        for entry in obj.get("contractions", ()):
            if "set" not in entry:
                raise ValueError("each contraction entry needs a 'set'")
            w = parse_word(entry["word"], g) if "word" in entry else None
            sites.append((frozenset(entry["set"]), w))
        return cls.make(g, sites)


class Homomorphism:
    """A generator-to-word map between the groups of two graphs."""

    __slots__ = ("source", "target", "images", "_image_enc")

    def __init__(self, source: Graph, target: Graph, images: dict[str, Word]):
        for v in source.vertices:
            if v not in images:
                raise ValueError(f"missing image for generator: {v!r}")
            if images[v].graph != target:
                raise ValueError(f"image of {v!r} is not a word over the target graph")
        self.source = source
        self.target = target
        self.images = {v: images[v] for v in source.vertices}
        self._image_enc = tuple(self.images[v]._enc for v in source.vertices)

    def __repr__(self) -> str:
        ims = ", ".join(f"{v} -> {self.images[v]}" for v in self.source.vertices)
        return f"Homomorphism({ims})"

    def to_json_obj(self) -> dict:
        return {
            "source": self.source.to_json_obj(),
            "target": self.target.to_json_obj(),
            "images": {v: str(self.images[v]) for v in self.source.vertices},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Homomorphism":
        for key in ("source", "target", "images"):
            if key not in obj:
                raise ValueError(f"homomorphism JSON must contain {key!r}")
        source = Graph.from_json_obj(obj["source"])
        target = Graph.from_json_obj(obj["target"])
        images = {v: parse_word(text, target) for v, text in obj["images"].items()}
        return cls(source, target, images)


def build_hom(spec: CoContractionSpec, check_words: bool = True) -> Homomorphism:
    """Build the map induced by a co-contraction spec.

    Validates disjointness, anticonnectedness and (unless check_words is
    False) that each chosen word really is a contraction word of its set.
    Missing words fall back to default_contraction_word.
    """
    g = spec.graph
    taken: set[str] = set()
    for b, _ in spec.sites:
        expanded = _expand(g.check_subset(b))
        if taken & expanded:
            raise ValueError(f"sets are not disjoint: {sorted(taken & expanded)}")
        taken |= expanded

    images: dict[str, Word] = {}
    for b, w in spec.sites:
        label = "{" + ",".join(g.sorted_set(b)) + "}"
        if not is_anticonnected(g, b):
            raise ValueError(f"set {label} must be anticonnected in the graph")
        if w is None:
            w = default_contraction_word(g, b)
        else:
            if any(name not in b for name, _ in w.letters):
                raise ValueError(f"word for set {label} uses letters outside the set")
            if check_words and not is_contraction_word(w, b):
                raise ValueError(f"word for set {label} is not a contraction word")
        images[merged_vertex_name(b)] = w

    source = co_contract_seq(g, [b for b, _ in spec.sites])
    for v in source.vertices:
        if v not in images:
            images[v] = Word(g, [(v, 1)])
    hom = Homomorphism(source, g, images)
    if not check_well_defined(hom):
        raise RuntimeError(
            "internal error: images of adjacent generators fail to commute"
        )
    return hom


def _apply_enc(h: Homomorphism, enc: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in enc:
        img = h._image_enc[x >> 1]
        if x & 1:
            out.extend(y ^ 1 for y in reversed(img))
        else:
            out.extend(img)
    return _reduce(h.target, tuple(out))


def apply_hom(h: Homomorphism, w: Word) -> Word:
    """Image of `w`, in normal form."""
    if w.graph != h.source:
        raise ValueError("word is not over the source graph")
    reduced = _apply_enc(h, w._enc)
    return _from_enc(h.target, _canonical(h.target, reduced))


def check_well_defined(h: Homomorphism) -> bool:
    """Do the images of every pair of adjacent generators commute?"""
    for u, v in h.source.edge_list():
        a = h._image_enc[h.source.index(u)]
        b = h._image_enc[h.source.index(v)]
        lhs = _reduce(h.target, a + b)
        rhs = _reduce(h.target, b + a)
        if _canonical(h.target, lhs) != _canonical(h.target, rhs):
            return False
    return True


def _sub_seed(seed: int, trial: int, attempt: int = 0) -> int:
    return seed * 1_000_003 + trial * 1_009 + attempt * 7_919


@dataclass(frozen=True)
class InjectivityReport:
    trials: int
    max_len: int
    seed: int
    failures: tuple[Word, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures


def sample_injectivity(
    h: Homomorphism, trials: int, max_len: int, seed: int
) -> InjectivityReport:
    """Hunt for nonempty reduced source words whose image is trivial.

    Words are drawn with the per-trial sub-seed (seed, trial, attempt), so
    results are reproducible and trial-order independent.  An injective map
    yields an empty failure list.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if max_len < 1:
        raise ValueError(f"max_len must be positive, got {max_len}")
    from .words import random_reduced_word

    source = h.source
    failures = []
    for t in range(trials):
        attempt = 0
        while True:
            w = random_reduced_word(
                source, source.vertices, max_len, _sub_seed(seed, t, attempt)
            )
            if len(w):
                break
            attempt += 1
        if not _apply_enc(h, w._enc):
            failures.append(w)
    return InjectivityReport(trials, max_len, seed, tuple(failures))


@dataclass(frozen=True)
class IntersectionReport:
    trials: int
    seed: int
    hits: int
    violations: tuple[tuple[str, Word], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


def sample_intersection(
    g: Graph,
    p: Iterable[str],
    q: Iterable[str],
    r: Iterable[str],
    trials: int,
    seed: int,
    max_factors: int = 8,
) -> IntersectionReport:
    """Sample the subgroup generated by the stock contraction word of `p`
    together with `q`, and check every sample landing in the parabolic of
    `r` against the expected intersection.

    For each sample whose support lies in r, its support must lie in
    p ∪ (q∩r); when p is not contained in r, it must lie in q∩r itself.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    pset = g.check_subset(p)
    qset = g.check_subset(q)
    rset = g.check_subset(r)
    if pset & qset:
        raise ValueError(f"sets overlap: {sorted(pset & qset)}")
    w_tilde = default_contraction_word(g, pset)
    factors = [w_tilde._enc, (~w_tilde)._enc]
    for name in g.sorted_set(qset):
        x = g.index(name) * 2
        factors.append((x,))
        factors.append((x ^ 1,))

    q_and_r = qset & rset
    loose = pset | q_and_r
    p_in_r = pset <= rset
    hits = 0
    violations: list[tuple[str, Word]] = []
    for t in range(trials):
        rng = random.Random(_sub_seed(seed, t))
        k = rng.randint(0, max_factors)
        enc: list[int] = []
        for _ in range(k):
            enc.extend(rng.choice(factors))
        reduced = _reduce(g, tuple(enc))
        supp = frozenset(g.vertices[x >> 1] for x in reduced)
        if supp <= rset:
            hits += 1
            sample = _from_enc(g, _canonical(g, reduced))
            if not supp <= loose:
                violations.append(("union", sample))
            if not p_in_r and not supp <= q_and_r:
                violations.append(("intersection", sample))
    return IntersectionReport(trials, seed, hits, tuple(violations))
