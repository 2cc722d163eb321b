"""Combinatorial certificates of triviality, drawn as chord diagrams.

A word is trivial exactly when its letter positions admit a perfect
matching where matched letters share a vertex with opposite signs and any
two interleaving pairs carry adjacent vertices.  Such a matching is the
combinatorial shadow of a disk diagram whose arcs pair off the boundary
letters, crossing only where the group lets them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Word

__all__ = [
    "MAX_PAIRING_LETTERS",
    "Pairing",
    "find_well_pairing",
    "validate_pairing",
    "render_svg",
]

MAX_PAIRING_LETTERS = 24

_PALETTE = (
    "#1b6ca8",
    "#c0392b",
    "#1e8449",
    "#8e44ad",
    "#d68910",
    "#148f77",
    "#884ea0",
    "#2e4053",
    "#a04000",
    "#5d6d7e",
    "#7d6608",
    "#117864",
)


@dataclass(frozen=True)
class Pairing:
    """A word plus a perfect matching of its letter positions."""

    word: Word
    pairs: tuple[tuple[int, int], ...]


def _interleaves(i: int, j: int, k: int, l: int) -> bool:
    return k < i < l < j or i < k < j < l


def validate_pairing(p: Pairing) -> bool:
    """Perfect matching, matched letters inverse to each other, and crossings
    only between adjacent vertices."""
    letters = p.word.letters
    g = p.word.graph
    n = len(letters)
    seen: set[int] = set()
    for i, j in p.pairs:
        if not (0 <= i < j < n) or i in seen or j in seen:
            return False
        seen.update((i, j))
        if letters[i][0] != letters[j][0] or letters[i][1] != -letters[j][1]:
            return False
    if len(seen) != n:
        return False
    for a, (i, j) in enumerate(p.pairs):
        for k, l in p.pairs[a + 1 :]:
            if _interleaves(i, j, k, l) or _interleaves(k, l, i, j):
                if not g.has_edge(letters[i][0], letters[k][0]):
                    return False
    return True


def find_well_pairing(w: Word) -> Pairing | None:
    """First matching in deterministic backtracking order, or None.

    Always matches the first unmatched position against each later
    candidate in order, pruning crossings between non-adjacent vertices.
    The word is trivial iff a pairing exists.
    """
    enc = w._enc
    n = len(enc)
    if n > MAX_PAIRING_LETTERS:
        raise ValueError(f"word too long for pairing search ({n} > {MAX_PAIRING_LETTERS})")
    if n % 2:
        return None
    counts: dict[int, int] = {}
    for x in enc:
        counts[x >> 1] = counts.get(x >> 1, 0) + (-1 if x & 1 else 1)
    if any(c != 0 for c in counts.values()):
        return None

    nbr = w.graph._nbr_idx
    matched = [False] * n
    pairs: list[tuple[int, int]] = []

    def backtrack() -> bool:
        i = next((k for k in range(n) if not matched[k]), None)
        if i is None:
            return True
        for j in range(i + 1, n):
            if matched[j] or (enc[j] ^ enc[i]) != 1:
                continue
            # Earlier pairs (k, l) cross (i, j) exactly when k < i < l < j.
            if any(
                i < l < j and (enc[k] >> 1) not in nbr[enc[i] >> 1]
                for k, l in pairs
            ):
                continue
            matched[i] = matched[j] = True
            pairs.append((i, j))
            if backtrack():
                return True
            pairs.pop()
            matched[i] = matched[j] = False
        return False

    if backtrack():
        return Pairing(w, tuple(pairs))
    return None


def render_svg(p: Pairing, size: int = 420) -> str:
    """Deterministic SVG: letters on a circle, one labeled chord per pair,
    a tick at each chord midpoint pointing from the negative letter to the
    positive one, colors fixed by vertex order."""
    if not validate_pairing(p):
        raise ValueError("invalid pairing")
    letters = p.word.letters
    g = p.word.graph
    n = len(letters)
    cx = cy = size / 2
    radius = size * 0.38

    def pos(k: int) -> tuple[float, float]:
        angle = -math.pi / 2 + 2 * math.pi * k / max(n, 1)
        return cx + radius * math.cos(angle), cy + radius * math.sin(angle)

    def fmt(x: float) -> str:
        return f"{x:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<circle cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(radius)}" '
        'fill="none" stroke="#999" stroke-width="1"/>',
    ]
    for pair_id, (i, j) in enumerate(p.pairs):
        x1, y1 = pos(i)
        x2, y2 = pos(j)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        # Pull the control point toward the center so nested chords separate.
        ctrlx, ctrly = cx + (mx - cx) * 0.4, cy + (my - cy) * 0.4
        name = letters[i][0]
        color = _PALETTE[g.index(name) % len(_PALETTE)]
        out.append(
            f'<path d="M {fmt(x1)} {fmt(y1)} Q {fmt(ctrlx)} {fmt(ctrly)} {fmt(x2)} {fmt(y2)}" '
            f'fill="none" stroke="{color}" stroke-width="1.5" '
            f'data-vertex="{name}" data-pair-id="{pair_id}"/>'
        )
        # Tick: from the negative-sign endpoint toward the positive one.
        bx = 0.25 * x1 + 0.5 * ctrlx + 0.25 * x2
        by = 0.25 * y1 + 0.5 * ctrly + 0.25 * y2
        dirx, diry = (x2 - x1, y2 - y1) if letters[i][1] < 0 else (x1 - x2, y1 - y2)
        norm = math.hypot(dirx, diry) or 1.0
        tick = 7.0
        out.append(
            f'<line x1="{fmt(bx)}" y1="{fmt(by)}" '
            f'x2="{fmt(bx + dirx / norm * tick)}" y2="{fmt(by + diry / norm * tick)}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
    for k, (name, sign) in enumerate(letters):
        x, y = pos(k)
        lx = cx + (x - cx) * 1.12
        ly = cy + (y - cy) * 1.12
        label = name if sign > 0 else f"{name}^-1"
        out.append(
            f'<text x="{fmt(lx)}" y="{fmt(ly)}" font-size="11" '
            f'text-anchor="middle" dominant-baseline="middle">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
