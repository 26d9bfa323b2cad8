"""
Quotient groups of a left group
===============================

A left group ``L_m x G`` pairs a left zero semigroup with a group.  Its
reflexive unitary subsemigroups ``H`` play the role normal subgroups play in
``G``: the principal congruence ``P_H`` collapses the semigroup onto a group
whose identity is ``H``.

"""

import numpy as np

from leftsimple import (
    correspondence_check,
    enumerate_ru_subsemigroups,
    group_name,
    left_group,
    left_zero,
    principal_congruence,
    quotient,
)
from leftsimple.factory import cyclic

S = left_group(2, cyclic(4))
print("order", S.order)
print(np.asarray(S.table))

###############################################################################
# Every reflexive unitary subsemigroup, smallest bitmask first.  The bottom
# one is ``L2 x {0}``, which holds both idempotents.

for H in enumerate_ru_subsemigroups(S):
    pc = principal_congruence(S, H)
    Q = quotient(S, pc.congruence)
    print(f"{S.format_set(H):42s} -> S/P_H = {group_name(Q.quotient)}")

###############################################################################
# The quotient by the bottom term recovers ``Z4``.  Each class is a coset
# of ``L2 x {0}``.

H = enumerate_ru_subsemigroups(S)[0]
Q = quotient(S, principal_congruence(S, H).congruence)
print(Q.quotient.labels)
print(np.asarray(Q.quotient.table))

###############################################################################
# Unitary subsemigroups over ``H`` line up one to one with the subgroups of
# the quotient, and the reflexive ones with the normal subgroups.

rep = correspondence_check(S, H)
for e in rep.entries:
    print(S.format_set(e.subsemigroup), "->", Q.quotient.format_set(e.image),
          "normal" if e.image_is_normal else "")

###############################################################################
# A left zero semigroup has nothing to collapse: the whole set is its only
# reflexive unitary subsemigroup.

print(enumerate_ru_subsemigroups(left_zero(3)))
