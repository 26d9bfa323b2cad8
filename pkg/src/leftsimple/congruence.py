"""Principal congruences, quotients, and the isomorphism theorems.

``P_H`` identifies a and b when the context sets {(s, t) : s a t in H} and
{(s, t) : s b t in H} coincide.  It is computed literally: each element's
context becomes an n*n boolean fingerprint and equal fingerprints form a
class.
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from . import groups
from .errors import (
    ElementOutOfRange,
    EmptyIntersection,
    EmptySubset,
    HNotReflexiveUnitary,
    NotACongruence,
    NotASubsemigroup,
    NotLeftSimple,
    OrderBoundExceeded,
    ParentMismatch,
    PreconditionViolated,
    TheoremCheckFailed,
)
from .semigroup import (
    ElemSet,
    IsoWitness,
    Semigroup,
    check_order,
    closure,
    is_isomorphic,
    is_left_simple,
    set_product,
    view,
)
from .subsets import (
    enumerate_unitary_subsemigroups_over,
    is_reflexive,
    is_reflexive_unitary,
    is_subsemigroup,
    is_unitary,
    ru_within,
)

__all__ = [
    "Congruence",
    "ContextRelation",
    "CorrespondenceEntry",
    "CorrespondenceReport",
    "PrincipalCongruence",
    "QuotientSemigroup",
    "ZassenhausReport",
    "compatibility_violation",
    "context",
    "correspondence_check",
    "enumerate_congruences",
    "factor_group",
    "intersection_iso",
    "is_group_with_identity",
    "principal_congruence",
    "quotient",
    "restrict",
    "saturates",
    "zassenhaus",
]

CONGRUENCE_ORACLE_MAX_ORDER = 8


@dataclass(frozen=True)
class ContextRelation:
    base: int
    pairs: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class Congruence:
    """A partition of ``0..n-1``; class ids are dense and ordered by least member.

    ``support`` lists the parent-level elements when the congruence lives on
    a re-indexed subsemigroup.
    """

    parent_order: int
    class_of: tuple[int, ...]
    class_count: int
    support: tuple[int, ...] | None = None

    @classmethod
    def from_keys(cls, keys: Sequence, support: tuple[int, ...] | None = None) -> Congruence:
        ids: dict = {}
        class_of = tuple(ids.setdefault(k, len(ids)) for k in keys)
        return cls(len(class_of), class_of, len(ids), support)

    def classes(self) -> list[ElemSet]:
        masks = [0] * self.class_count
        for x, c in enumerate(self.class_of):
            masks[c] |= 1 << x
        return [ElemSet(self.parent_order, m) for m in masks]

    def class_members(self, c: int) -> ElemSet:
        return ElemSet.of(self.parent_order, (x for x, k in enumerate(self.class_of) if k == c))

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def same_partition(self, other: Congruence) -> bool:
        return self.parent_order == other.parent_order and self.class_of == other.class_of


def compatibility_violation(S: Semigroup, c: Congruence) -> tuple[int, int, int] | None:
    """First (a, b, x) with a ~ b but xa !~ xb or ax !~ bx."""
    cls = np.asarray(c.class_of)
    img = cls[S.table]
    n = S.order
    for a in range(n):
        for b in range(a + 1, n):
            if cls[a] != cls[b]:
                continue
            bad = np.flatnonzero((img[a] != img[b]) | (img[:, a] != img[:, b]))
            if len(bad):
                return a, b, int(bad[0])
    return None


def context(S: Semigroup, H: ElemSet, a: int) -> ContextRelation:
    if H.parent_order != S.order:
        raise ParentMismatch("H belongs to a different semigroup")
    if not H:
        raise EmptySubset("H must be nonempty")
    if not 0 <= a < S.order:
        raise ElementOutOfRange(f"element {a} not in [0, {S.order})")
    h = H.as_bool()
    T = S.table
    hits = h[T[T[:, a]]]
    return ContextRelation(S.order, frozenset((int(s), int(t)) for s, t in np.argwhere(hits)))


@dataclass(frozen=True)
class PrincipalCongruence:
    subject: ElemSet
    congruence: Congruence
    h_class: int | None
    w_class: int | None
    w_set: ElemSet


@functools.lru_cache(maxsize=8192)
def principal_congruence(S: Semigroup, H: ElemSet) -> PrincipalCongruence:
    if H.parent_order != S.order:
        raise ParentMismatch("H belongs to a different semigroup")
    if not H:
        raise EmptySubset("H must be nonempty")
    check_order(S)
    T = S.table
    h = H.as_bool()
    # fp[a, s, t] = (s a t in H)
    fp = h[T[T]].transpose(1, 0, 2).reshape(S.order, -1)
    keys = [row.tobytes() for row in np.packbits(fp, axis=1)]
    cong = Congruence.from_keys(keys)
    bad = compatibility_violation(S, cong)
    if bad is not None:
        raise TheoremCheckFailed("principal congruence", "context partition is not compatible", bad)
    empty = ~fp.any(axis=1)
    w_set = ElemSet.of(S.order, np.flatnonzero(empty).tolist())
    w_class = None
    if w_set:
        ids = {cong.class_of[x] for x in w_set}
        if len(ids) != 1 or cong.class_members(ids.pop()) != w_set:
            raise TheoremCheckFailed("principal congruence", "W^H is not a single class", w_set)
        w_class = cong.class_of[w_set.members[0]]
        if not (set_product(S, S.full(), w_set) | set_product(S, w_set, S.full())) <= w_set:
            raise TheoremCheckFailed("principal congruence", "W^H is not an ideal", w_set)
    h_class = None
    c = cong.class_of[H.members[0]]
    if cong.class_members(c) == H:
        h_class = c
    return PrincipalCongruence(H, cong, h_class, w_class, w_set)


@dataclass(frozen=True)
class QuotientSemigroup:
    """``S/c`` on class ids, plus the canonical projection."""

    quotient: Semigroup
    projection: tuple[int, ...]
    congruence: Congruence

    def image(self, X: ElemSet) -> ElemSet:
        return ElemSet.of(self.quotient.order, {self.projection[x] for x in X})

    def preimage(self, Y: ElemSet) -> ElemSet:
        return ElemSet.of(len(self.projection), (x for x, c in enumerate(self.projection) if c in Y))


def quotient(S: Semigroup, c: Congruence) -> QuotientSemigroup:
    if c.parent_order != S.order:
        raise ParentMismatch("congruence belongs to a different semigroup")
    bad = compatibility_violation(S, c)
    if bad is not None:
        raise NotACongruence(f"not compatible: {bad}")
    reps = [cls.members[0] for cls in c.classes()]
    table = [[c.class_of[S.rows[a][b]] for b in reps] for a in reps]
    labels = ["{" + ",".join(S.labels[x] for x in cls) + "}" for cls in c.classes()]
    return QuotientSemigroup(Semigroup(table, labels), c.class_of, c)


def is_group_with_identity(Q: QuotientSemigroup | Semigroup, h_class: int | None) -> bool:
    G = Q.quotient if isinstance(Q, QuotientSemigroup) else Q
    if h_class is None:
        return False
    return groups.group_identity(G) == h_class


def saturates(c: Congruence, N: ElemSet) -> bool:
    if N.parent_order != c.parent_order:
        raise ParentMismatch("N belongs to a different semigroup")
    return all((N & K) in (K, ElemSet.empty(c.parent_order)) for K in c.classes())


def restrict(S: Semigroup, c: Congruence, N: ElemSet) -> Congruence:
    """``c`` intersected with N x N, re-indexed on the subsemigroup ``N``."""
    if c.parent_order != S.order or N.parent_order != S.order:
        raise ParentMismatch("S, c and N must share the parent")
    if not N or closure(S, N) != N:
        raise NotASubsemigroup(f"{S.format_set(N)} is not a subsemigroup")
    elems = N.members
    return Congruence.from_keys([c.class_of[x] for x in elems], support=elems)


@functools.lru_cache(maxsize=8192)
def factor_group(S: Semigroup, upper: ElemSet, lower: ElemSet) -> QuotientSemigroup:
    """``upper / P_lower`` computed inside the subsemigroup ``upper``."""
    v = view(S, upper)
    pc = principal_congruence(v.semigroup, v.lower(lower))
    return quotient(v.semigroup, pc.congruence)


def _p_h_class(S: Semigroup, H: ElemSet) -> tuple[QuotientSemigroup, int | None]:
    pc = principal_congruence(S, H)
    return quotient(S, pc.congruence), pc.h_class


# -- Theorem-level operations ------------------------------------------------

@dataclass(frozen=True)
class CorrespondenceEntry:
    subsemigroup: ElemSet
    image: ElemSet
    saturated: bool
    image_is_subgroup: bool
    reflexive: bool
    image_is_normal: bool
    restriction_matches: bool
    third_iso: IsoWitness | None


@dataclass(frozen=True)
class CorrespondenceReport:
    H: ElemSet
    quotient: QuotientSemigroup
    entries: tuple[CorrespondenceEntry, ...]
    subgroup_count: int


def _require_ru(S: Semigroup, H: ElemSet, label: str = "H") -> None:
    if not H:
        raise EmptySubset(f"{label} must be nonempty")
    if not is_reflexive_unitary(S, H):
        raise HNotReflexiveUnitary(f"{label} = {S.format_set(H)} is not a reflexive unitary subsemigroup")


def correspondence_check(S: Semigroup, H: ElemSet) -> CorrespondenceReport:
    """Verify the unitary-subsemigroup / subgroup correspondence over ``H``."""
    if not is_left_simple(S):
        raise NotLeftSimple("the semigroup is not left simple")
    _require_ru(S, H)
    Q, h_class = _p_h_class(S, H)
    G = Q.quotient
    if not is_group_with_identity(Q, h_class):
        raise TheoremCheckFailed("group congruence", "S/P_H is not a group with identity H", H)
    entries = []
    images = {}
    for N in enumerate_unitary_subsemigroups_over(S, H):
        image = Q.image(N)
        saturated = saturates(Q.congruence, N)
        is_sub = groups.is_subgroup(G, image)
        reflexive = bool(is_reflexive(S, N))
        normal = is_sub and groups.is_normal_subgroup(G, image)
        v = view(S, N)
        restriction_ok = restrict(S, Q.congruence, N).class_of == principal_congruence(
            v.semigroup, v.lower(H)
        ).congruence.class_of
        witness = None
        if reflexive and normal:
            G2, _ = groups.coset_quotient(G, image)
            SN, _ = _p_h_class(S, N)
            witness = is_isomorphic(G2, SN.quotient)
        entry = CorrespondenceEntry(N, image, saturated, is_sub, reflexive, normal, restriction_ok, witness)
        if not (saturated and is_sub and restriction_ok and reflexive == normal):
            raise TheoremCheckFailed("correspondence", f"failed for N = {S.format_set(N)}", entry)
        if reflexive and witness is None:
            raise TheoremCheckFailed("correspondence", "(S/P_H)/(N/P_H) is not isomorphic to S/P_N", entry)
        if image in images:
            raise TheoremCheckFailed("correspondence", "two subsemigroups share an image", (images[image], N))
        images[image] = N
        entries.append(entry)
    subs = groups.subgroups(G)
    for K in subs:
        pulled = Q.preimage(K)
        if images.get(K) != pulled:
            raise TheoremCheckFailed("correspondence", "a subgroup has no unitary preimage", (K, pulled))
    return CorrespondenceReport(H, Q, tuple(entries), len(subs))


def _is_nonempty_subsemigroup(S: Semigroup, N: ElemSet) -> bool:
    return bool(N) and bool(is_subsemigroup(S, N))


def intersection_iso(S: Semigroup, H: ElemSet, N: ElemSet) -> IsoWitness:
    """Isomorphism <H, N>/P_H -> N/P_(H cap N), both computed inside their own subsemigroup."""
    _require_ru(S, H)
    if not _is_nonempty_subsemigroup(S, N):
        raise PreconditionViolated(f"N = {S.format_set(N)} is not a subsemigroup")
    meet = H & N
    if not meet:
        raise EmptyIntersection("H and N are disjoint")
    if not ru_within(S, meet, N):
        raise TheoremCheckFailed("intersection", "H cap N is not reflexive unitary in N", meet)
    J = closure(S, H | N)
    left = factor_group(S, J, H)
    right = factor_group(S, N, meet)
    w = is_isomorphic(left.quotient, right.quotient)
    if w is None:
        raise TheoremCheckFailed("intersection", "<H,N>/P_H and N/P_(H cap N) differ", (H, N))
    return w


@dataclass(frozen=True)
class ZassenhausReport:
    A: ElemSet
    B: ElemSet
    N: ElemSet
    M: ElemSet
    sets: dict[str, ElemSet] = field(default_factory=dict)
    left: QuotientSemigroup | None = None
    right: QuotientSemigroup | None = None
    witness: IsoWitness | None = None


def zassenhaus(S: Semigroup, A: ElemSet, B: ElemSet, N: ElemSet, M: ElemSet) -> ZassenhausReport:
    """Butterfly: N(A cap B)/P_N(A cap M) is isomorphic to M(A cap B)/P_M(B cap N)."""
    if not is_left_simple(S):
        raise NotLeftSimple("the semigroup is not left simple")
    for name, X in (("A", A), ("B", B)):
        if not (_is_nonempty_subsemigroup(S, X) and is_unitary(S, X)):
            raise PreconditionViolated(f"{name} = {S.format_set(X)} is not a unitary subsemigroup")
    if not A & B:
        raise EmptyIntersection("A and B are disjoint")
    if not (N and ru_within(S, N, A)):
        raise PreconditionViolated(f"N = {S.format_set(N)} is not reflexive unitary in A")
    if not (M and ru_within(S, M, B)):
        raise PreconditionViolated(f"M = {S.format_set(M)} is not reflexive unitary in B")
    AB, AM, BN = A & B, A & M, B & N
    if not AM or not BN:
        raise TheoremCheckFailed("zassenhaus", "A cap M or B cap N is empty", (AM, BN))
    sets = {
        "A&B": AB,
        "A&M": AM,
        "B&N": BN,
        "N(A&B)": set_product(S, N, AB),
        "N(A&M)": set_product(S, N, AM),
        "M(A&B)": set_product(S, M, AB),
        "M(B&N)": set_product(S, M, BN),
    }
    for upper, lower in (("N(A&B)", "N(A&M)"), ("M(A&B)", "M(B&N)")):
        if not _is_nonempty_subsemigroup(S, sets[upper]):
            raise TheoremCheckFailed("zassenhaus", f"{upper} is not a subsemigroup", sets[upper])
        if not ru_within(S, sets[lower], sets[upper]):
            raise TheoremCheckFailed("zassenhaus", f"{lower} is not reflexive unitary in {upper}", sets)
    left = factor_group(S, sets["N(A&B)"], sets["N(A&M)"])
    right = factor_group(S, sets["M(A&B)"], sets["M(B&N)"])
    w = is_isomorphic(left.quotient, right.quotient)
    if w is None:
        raise TheoremCheckFailed("zassenhaus", "the two quotients are not isomorphic", sets)
    return ZassenhausReport(A, B, N, M, sets, left, right, w)


def enumerate_congruences(S: Semigroup, max_order: int = CONGRUENCE_ORACLE_MAX_ORDER) -> list[Congruence]:
    """Every congruence, by sweeping all set partitions (small orders only).

    Partitions are generated as restricted growth strings; a prefix is cut as
    soon as two already-placed related elements have unrelated products.
    """
    n = S.order
    if n > max_order:
        raise OrderBoundExceeded(f"congruence enumeration is limited to order {max_order}")
    rows = S.rows
    out = []
    labels = [0] * n

    def consistent(k: int) -> bool:
        # element k just placed; check pairs (j, k), j < k, against placed products
        for j in range(k):
            if labels[j] != labels[k]:
                continue
            for x in range(n):
                for p, q in ((rows[x][j], rows[x][k]), (rows[j][x], rows[k][x])):
                    if p <= k and q <= k and labels[p] != labels[q]:
                        return False
        return True

    def grow(k: int, used: int) -> None:
        if k == n:
            cong = Congruence.from_keys(labels)
            if compatibility_violation(S, cong) is None:
                out.append(cong)
            return
        for c in range(used + 1):
            labels[k] = c
            if consistent(k):
                grow(k + 1, max(used, c + 1))

    grow(0, 0)
    return out
