"""
Doubling a left simple semigroup
================================

Take a left simple semigroup ``S1`` and a disjoint copy ``S2``.  Products
inside ``S1`` stay there, mixed products land in the copy, and two copied
elements multiply back into ``S1``.  The result is again left simple, with
``S1`` as a reflexive unitary subsemigroup of index two.

"""

import numpy as np

from leftsimple import double, group_catalog, group_name, is_isomorphic, is_left_simple
from leftsimple.congruence import principal_congruence, quotient
from leftsimple.factory import cyclic, left_group, left_zero
from leftsimple.semigroup import ElemSet

F = double(cyclic(2))
print(F.labels)
print(np.asarray(F.table))

###############################################################################
# Every element squares to the identity, so this is the Klein four group.

w = is_isomorphic(F, group_catalog()["Klein"])
print("witness:", w.mapping, "verified:", w.verify())

###############################################################################
# Doubling a left zero semigroup gives a semigroup that is neither a group
# nor left zero.  Collapsing by ``S1`` leaves ``Z2``.

D = double(left_zero(2))
print(np.asarray(D.table))
print("left simple:", is_left_simple(D))
first = ElemSet.of(4, [0, 1])
Q = quotient(D, principal_congruence(D, first).congruence)
print("quotient:", group_name(Q.quotient), Q.quotient.labels)

###############################################################################
# In general ``double(L_m x G)`` is ``L_m x (G x Z2)``.

for gname in ("Z3", "S3"):
    G = group_catalog()[gname]
    for m in (1, 2):
        Dm = double(left_group(m, G))
        print(f"double(L{m}x{gname}): order {Dm.order}, idempotents {sum(Dm.mul(x, x) == x for x in range(Dm.order))}")
