"""Enumeration of subsets closed under Horn implications.

Every subset predicate used here (subsemigroup, left/right unitary,
reflexive) has the form "if these members are in X then that one is too",
so the qualifying subsets form a closure system.  ``closed_sets`` walks it
with Ganter's NextClosure, which visits closed sets in lectic order; taking
the highest bit as the most significant element makes that ascending
bitmask order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import numpy as np


class HornSystem:
    def __init__(self, n: int, clauses: Iterable[tuple[int, int]]):
        # clause = (body mask, head element); heads already in the body are dropped
        uniq = {(body, head) for body, head in clauses if not body >> head & 1}
        ordered = sorted(uniq)
        self.n = n
        self.full = (1 << n) - 1
        self.bodies = np.array([b for b, _ in ordered], dtype=np.uint64)
        self.heads = np.array([1 << h for _, h in ordered], dtype=np.uint64)

    def close(self, mask: int) -> int:
        if len(self.bodies) == 0:
            return mask
        x = np.uint64(mask)
        bodies, heads = self.bodies, self.heads
        while True:
            fired = heads[(bodies & x) == bodies]
            if len(fired) == 0:
                return int(x)
            nxt = x | np.bitwise_or.reduce(fired)
            if nxt == x:
                return int(x)
            x = nxt

    def is_closed(self, mask: int) -> bool:
        return self.close(mask) == mask

    def closed_sets(self) -> Iterator[int]:
        """All closed subsets (including the empty set if closed), ascending."""
        a = self.close(0)
        yield a
        while a != self.full:
            for b in range(self.n):
                if a >> b & 1:
                    continue
                high = self.full & ~((1 << (b + 1)) - 1)
                c = self.close((a & high) | (1 << b))
                if c & high == a & high:
                    a = c
                    break
            else:
                return
            yield a


def subsemigroup_clauses(rows) -> list[tuple[int, int]]:
    n = len(rows)
    return [((1 << a) | (1 << b), rows[a][b]) for a in range(n) for b in range(n)]


def left_unitary_clauses(rows) -> list[tuple[int, int]]:
    # ab, a in U => b in U
    n = len(rows)
    return [((1 << rows[a][b]) | (1 << a), b) for a in range(n) for b in range(n)]


def right_unitary_clauses(rows) -> list[tuple[int, int]]:
    # ab, b in U => a in U
    n = len(rows)
    return [((1 << rows[a][b]) | (1 << b), a) for a in range(n) for b in range(n)]


def reflexive_clauses(rows) -> list[tuple[int, int]]:
    # ab in H => ba in H
    n = len(rows)
    return [(1 << rows[a][b], rows[b][a]) for a in range(n) for b in range(n)]


def base_clauses(mask: int) -> list[tuple[int, int]]:
    """Force every member of ``mask`` into all closed sets."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append((0, i))
        mask >>= 1
        i += 1
    return out
