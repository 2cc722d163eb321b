"""Brute-force ground truth for word equality, independent of the word
calculus in `words`.

Equality of w1 and w2 is decided by exhausting the move closure of the
concatenation w1 * w2^-1 under two primitive moves only: swap two adjacent
letters whose vertices are distinct and adjacent, and delete an adjacent
inverse pair.  No insertions, so the state space is finite and the search is
exact.  Kept deliberately separate from `words.normal_form` so the two
routes can check each other.
"""

from __future__ import annotations

from collections import deque

from .words import Word

__all__ = ["MAX_ORACLE_LETTERS", "brute_force_equals"]

MAX_ORACLE_LETTERS = 16


def brute_force_equals(w1: Word, w2: Word) -> bool:
    """True iff w1 * w2^-1 can be carried to the empty word by commuting
    swaps and inverse-pair deletions."""
    if w1.graph != w2.graph:
        raise ValueError("words have different ambient graphs")
    g = w1.graph
    start = tuple(
        [g.index(n) * 2 + (s < 0) for n, s in w1.letters]
        + [g.index(n) * 2 + (s > 0) for n, s in reversed(w2.letters)]
    )
    if len(start) > MAX_ORACLE_LETTERS:
        raise ValueError(
            f"combined length {len(start)} exceeds oracle cap {MAX_ORACLE_LETTERS}"
        )
    if not start:
        return True
    # Both moves preserve per-vertex exponent sums and the empty word has
    # all-zero sums, so a nonzero sum settles the answer without searching.
    sums: dict[int, int] = {}
    for x in start:
        sums[x >> 1] = sums.get(x >> 1, 0) + (-1 if x & 1 else 1)
    if any(s != 0 for s in sums.values()):
        return False

    nbr = g._nbr_idx
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            x, y = cur[i], cur[i + 1]
            if (x ^ y) == 1:
                nxt = cur[:i] + cur[i + 2 :]
                if not nxt:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    queue.appendleft(nxt)  # shrinking first finds empty sooner
            elif (x >> 1) != (y >> 1) and (y >> 1) in nbr[x >> 1]:
                nxt = cur[:i] + (y, x) + cur[i + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return False
