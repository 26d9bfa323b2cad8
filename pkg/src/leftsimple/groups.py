"""Plain group theory on Cayley tables.

Nothing here goes through reflexive/unitary subsets or principal
congruences; these routines serve as the group-theoretic side of the
cross-checks (subgroup lattices, normality by conjugation, coset quotients,
composition factors).
"""

from __future__ import annotations

import functools

from .errors import NotAGroup
from .semigroup import ElemSet, Semigroup

__all__ = [
    "coset_quotient",
    "composition_factors",
    "group_identity",
    "inverse",
    "is_group",
    "is_normal_subgroup",
    "is_simple_group",
    "is_subgroup",
    "subgroups",
]


def group_identity(G: Semigroup) -> int | None:
    """Identity element if ``G`` is a group, else ``None``."""
    n = G.order
    rows = G.rows
    ident = next((e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))), None)
    if ident is None:
        return None
    for x in range(n):
        if not any(rows[x][y] == ident and rows[y][x] == ident for y in range(n)):
            return None
    return ident


def is_group(G: Semigroup) -> bool:
    return group_identity(G) is not None


def _require_group(G: Semigroup) -> int:
    e = group_identity(G)
    if e is None:
        raise NotAGroup("the table is not a group")
    return e


def inverse(G: Semigroup, x: int) -> int:
    e = _require_group(G)
    return next(y for y in range(G.order) if G.rows[x][y] == e)


def is_subgroup(G: Semigroup, K: ElemSet) -> bool:
    e = _require_group(G)
    if e not in K:
        return False
    for a in K:
        if inverse(G, a) not in K:
            return False
        for b in K:
            if G.rows[a][b] not in K:
                return False
    return True


def _generated(G: Semigroup, gens: int) -> int:
    rows = G.rows
    e = group_identity(G)
    cur = (1 << e) | gens
    while True:
        members = [i for i in range(G.order) if cur >> i & 1]
        nxt = cur
        for a in members:
            for b in members:
                nxt |= 1 << rows[a][b]
        if nxt == cur:
            return cur
        cur = nxt


@functools.lru_cache(maxsize=512)
def subgroups(G: Semigroup) -> tuple[ElemSet, ...]:
    """All subgroups, ascending by bitmask (joins of cyclic subgroups)."""
    _require_group(G)
    found = {_generated(G, 0)}
    frontier = list(found)
    while frontier:
        nxt = []
        for K in frontier:
            for x in range(G.order):
                if not K >> x & 1:
                    J = _generated(G, K | (1 << x))
                    if J not in found:
                        found.add(J)
                        nxt.append(J)
        frontier = nxt
    return tuple(ElemSet(G.order, m) for m in sorted(found))


def is_normal_subgroup(G: Semigroup, K: ElemSet) -> bool:
    if not is_subgroup(G, K):
        return False
    rows = G.rows
    for g in range(G.order):
        gi = inverse(G, g)
        for k in K:
            if rows[rows[g][k]][gi] not in K:
                return False
    return True


def coset_quotient(G: Semigroup, K: ElemSet) -> tuple[Semigroup, tuple[int, ...]]:
    """``G/K`` for a normal subgroup ``K``; cosets numbered by least member."""
    if not is_normal_subgroup(G, K):
        raise NotAGroup("K is not a normal subgroup")
    rows = G.rows
    coset_of = [-1] * G.order
    reps = []
    for g in range(G.order):
        if coset_of[g] == -1:
            for k in K:
                coset_of[rows[g][k]] = len(reps)
            reps.append(g)
    table = [[coset_of[rows[a][b]] for b in reps] for a in reps]
    return Semigroup(table), tuple(coset_of)


def is_simple_group(G: Semigroup) -> bool:
    """Nontrivial with no normal subgroups besides 1 and G."""
    if G.order == 1:
        return False
    return all(len(K) in (1, G.order) for K in subgroups(G) if is_normal_subgroup(G, K))


def composition_factors(G: Semigroup) -> list[Semigroup]:
    """Composition factors of a group along one chain of maximal normal subgroups.

    Jordan-Hoelder for groups makes the multiset independent of the chain.
    """
    factors = []
    while G.order > 1:
        normals = [K for K in subgroups(G) if len(K) < G.order and is_normal_subgroup(G, K)]
        maximal = [K for K in normals if not any(K < J for J in normals)]
        K = maximal[0]
        Q, _ = coset_quotient(G, K)
        factors.append(Q)
        sub = [x for x in K]
        pos = {x: i for i, x in enumerate(sub)}
        G = Semigroup([[pos[G.rows[a][b]] for b in sub] for a in sub])
    return factors
