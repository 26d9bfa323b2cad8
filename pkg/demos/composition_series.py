"""
Composition series and isomorphic refinements
=============================================

Normal series descend through reflexive unitary subsemigroups, each term
inside the previous one.  Two series of the same semigroup always have
refinements with matching factor groups, and all composition series share
one multiset of simple factors.

"""

from collections import Counter

from leftsimple import (
    find_composition_series,
    group_name,
    jordan_holder_check,
    left_group,
    schreier_refine,
    series_isomorphic,
    validate_series,
)
from leftsimple.factory import cyclic, group_catalog
from leftsimple.semigroup import ElemSet
from leftsimple.series import compact, factors


def names(ns):
    return [group_name(q.quotient) for q in factors(ns).factors]


S = left_group(2, cyclic(6))


def layer(xs):
    """``L2 x xs`` as a subset of ``L2 x Z6``."""
    return ElemSet.of(12, [a * 6 + x for a in range(2) for x in xs])


a = validate_series(S, [S.full(), layer([0, 2, 4]), layer([0])])
b = validate_series(S, [S.full(), layer([0, 3]), layer([0])])
print("a:", names(a))
print("b:", names(b))

###############################################################################
# Interpolating ``S_i (S_(i-1) cap H_j)`` between consecutive terms gives
# refinements of equal length.  Repeated terms contribute trivial factors.

ra, rb, iso = schreier_refine(a, b)
print("refined a:", names(ra))
print("refined b:", names(rb))
print("pairing:", iso.permutation)
print("same factors:", series_isomorphic(ra, rb) is not None)
print("a without repeats:", compact(ra))

###############################################################################
# Composition series of a few left groups.  The factor multiset matches the
# group's own composition factors.

for gname in ("Z6", "S3", "D4", "Q8"):
    T = left_group(2, group_catalog()[gname])
    rep = jordan_holder_check(T)
    counts = Counter(group_name(G) for G in rep.factors)
    print(f"L2x{gname}: {len(rep.series)} series of length {rep.length}, factors {dict(counts)}")

###############################################################################
# The first series in lexicographic order, for ``L2 x D4``.

[first] = find_composition_series(left_group(2, group_catalog()["D4"]))
print(first)
