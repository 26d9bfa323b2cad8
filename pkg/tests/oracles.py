"""Brute-force reference implementations.

These follow the definitions with plain loops over all subsets, pairs,
permutations and partitions, and share no code with the package beyond
reading ``S.rows``.
"""

from __future__ import annotations

import itertools


def members(mask, n):
    return [i for i in range(n) if mask >> i & 1]


def is_subsemigroup(rows, X):
    return all(rows[a][b] in X for a in X for b in X)


def is_reflexive(rows, X):
    n = len(rows)
    return all(rows[b][a] in X for a in range(n) for b in range(n) if rows[a][b] in X)


def is_left_unitary(rows, X):
    n = len(rows)
    return all(b in X for a in X for b in range(n) if rows[a][b] in X)


def is_right_unitary(rows, X):
    n = len(rows)
    return all(a in X for b in X for a in range(n) if rows[a][b] in X)


def sweep(rows, *preds):
    """Masks of all nonempty subsets satisfying every predicate, ascending."""
    n = len(rows)
    out = []
    for mask in range(1, 1 << n):
        X = set(members(mask, n))
        if all(p(rows, X) for p in preds):
            out.append(mask)
    return out


def context(rows, H, a):
    n = len(rows)
    return frozenset((s, t) for s in range(n) for t in range(n) if rows[rows[s][a]][t] in H)


def principal_partition(rows, H):
    """Class index per element, classes numbered by least member."""
    n = len(rows)
    ctx = [context(rows, H, a) for a in range(n)]
    ids = {}
    return tuple(ids.setdefault(c, len(ids)) for c in ctx)


def isomorphisms(rows_s, rows_t):
    """All isomorphisms, in lexicographic order of the image tuple."""
    n = len(rows_s)
    if len(rows_t) != n:
        return
    for perm in itertools.permutations(range(n)):
        if all(perm[rows_s[a][b]] == rows_t[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            yield perm


def first_isomorphism(rows_s, rows_t):
    return next(iter(isomorphisms(rows_s, rows_t)), None)


def set_partitions(n):
    def grow(k, labels, used):
        if k == n:
            yield tuple(labels)
            return
        for c in range(used + 1):
            yield from grow(k + 1, labels + [c], max(used, c + 1))

    yield from grow(0, [], 0)


def is_compatible(rows, labels):
    n = len(rows)
    for a in range(n):
        for b in range(n):
            if labels[a] != labels[b]:
                continue
            for x in range(n):
                if labels[rows[x][a]] != labels[rows[x][b]] or labels[rows[a][x]] != labels[rows[b][x]]:
                    return False
    return True


def congruences(rows):
    return [p for p in set_partitions(len(rows)) if is_compatible(rows, p)]


def group_quotient_rows(rows, labels):
    """Cayley table of S/labels on class ids (labels must be compatible)."""
    k = max(labels) + 1
    rep = [labels.index(c) for c in range(k)]
    return [[labels[rows[rep[c]][rep[d]]] for d in range(k)] for c in range(k)]


def cyclic_quotient_order(n, *subgroup_gens):
    """Order of Z_n modulo the subgroup generated by the given elements."""
    import math

    g = n
    for x in subgroup_gens:
        g = math.gcd(g, x)
    return g


def restricted_rows(rows, X):
    """Cayley table of the subsemigroup X (sorted), re-indexed from 0."""
    elems = sorted(X)
    pos = {x: i for i, x in enumerate(elems)}
    return [[pos[rows[a][b]] for b in elems] for a in elems], elems


def ru_subsets_within(rows, X):
    """Nonempty reflexive unitary subsemigroups of the subsemigroup X, as parent-level frozensets."""
    sub, elems = restricted_rows(rows, X)
    masks = sweep(sub, is_subsemigroup, is_left_unitary, is_right_unitary, is_reflexive)
    return [frozenset(elems[i] for i in members(m, len(elems))) for m in masks]


def composition_series(rows):
    """Every composition series as a tuple of frozensets, by brute-force descent."""
    full = frozenset(range(len(rows)))
    out = []

    def descend(chain):
        proper = [T for T in ru_subsets_within(rows, chain[-1]) if T != chain[-1]]
        maximal = [T for T in proper if not any(T < U for U in proper)]
        if not maximal:
            out.append(tuple(chain))
        for T in maximal:
            descend(chain + [T])

    descend([full])
    return out
