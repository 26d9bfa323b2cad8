"""Deterministic test instances: left zero semigroups, small groups, left
groups ``L_m x G``, the doubling construction, and the verification corpus."""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from . import groups
from .errors import ConstructionCheckFailed, NotAGroup, PreconditionViolated, ZeroSize
from .semigroup import ElemSet, Semigroup, direct_product, is_isomorphic, is_left_simple, idempotents
from .subsets import is_reflexive, is_subsemigroup, is_unitary

__all__ = [
    "CATALOG_NAMES",
    "CorpusSpec",
    "build_corpus",
    "cyclic",
    "double",
    "group_catalog",
    "group_name",
    "left_group",
    "left_zero",
    "resolve",
]


def left_zero(m: int) -> Semigroup:
    if m < 1:
        raise ZeroSize(f"left zero semigroup needs m >= 1, got {m}")
    return Semigroup([[a] * m for a in range(m)], [f"a{a + 1}" for a in range(m)])


def cyclic(n: int) -> Semigroup:
    return Semigroup([[(a + b) % n for b in range(n)] for a in range(n)], [str(a) for a in range(n)])


def _klein() -> Semigroup:
    return Semigroup([[a ^ b for b in range(4)] for a in range(4)], ["e", "a", "b", "c"])


def _s3() -> Semigroup:
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(i) = p(q(i))
    table = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    labels = ["".join(str(v + 1) for v in p) for p in perms]
    return Semigroup(table, labels)


def _d4() -> Semigroup:
    # r^i s^j -> i + 4j, with s r = r^-1 s
    def mul(x, y):
        i1, j1 = x % 4, x // 4
        i2, j2 = y % 4, y // 4
        i = (i1 + (i2 if j1 == 0 else -i2)) % 4
        return i + 4 * ((j1 + j2) % 2)

    labels = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
    return Semigroup([[mul(x, y) for y in range(8)] for x in range(8)], labels)


def _q8() -> Semigroup:
    # units of the quaternions as (sign, axis) with axis in 1, i, j, k
    basis = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, a) for a in "1ijk" for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, a1 in elems:
        row = []
        for s2, a2 in elems:
            s, a = basis[(a1, a2)]
            row.append(index[(s * s1 * s2, a)])
        table.append(row)
    labels = [("" if s > 0 else "-") + a for s, a in elems]
    return Semigroup(table, labels)


CATALOG_NAMES = ("Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Klein", "S3", "D4", "Q8")


@functools.lru_cache(maxsize=1)
def group_catalog() -> dict[str, Semigroup]:
    """Z1..Z8, Klein four, S3, D4, Q8 (insertion order is the canonical order)."""
    cat = {f"Z{n}": cyclic(n) for n in range(1, 9)}
    cat["Klein"] = _klein()
    cat["S3"] = _s3()
    cat["D4"] = _d4()
    cat["Q8"] = _q8()
    return cat


@functools.lru_cache(maxsize=4096)
def group_name(G: Semigroup) -> str:
    """Catalog name of a group up to isomorphism; ``G<n>`` when not catalogued."""
    if not groups.is_group(G):
        return f"semigroup{G.order}"
    for name, H in group_catalog().items():
        if H.order == G.order and is_isomorphic(G, H) is not None:
            return name
    return f"G{G.order}"


def left_group(m: int, G: Semigroup) -> Semigroup:
    if not groups.is_group(G):
        raise NotAGroup("the second factor of a left group must be a group")
    return direct_product(left_zero(m), G)


def double(S1: Semigroup) -> Semigroup:
    """The semigroup on S1 and a disjoint copy S2 = S1 + n, multiplied case by case.

    Products inside S1 stay in S1, mixed products land in S2 via the copy
    map, and two elements of S2 multiply through their preimages in S1.
    """
    if not is_left_simple(S1):
        raise PreconditionViolated("the doubling construction needs a left simple semigroup")
    n = S1.order
    rows = S1.rows
    table = []
    for e in range(2 * n):
        row = []
        for f in range(2 * n):
            if e < n and f < n:
                row.append(rows[e][f])
            elif e >= n and f < n:
                row.append(rows[e - n][f] + n)
            elif e < n and f >= n:
                row.append(rows[e][f - n] + n)
            else:
                row.append(rows[e - n][f - n])
        table.append(row)
    labels = list(S1.labels) + [f"{x}'" for x in S1.labels]
    F = Semigroup(table, labels)
    first = ElemSet(2 * n, (1 << n) - 1)
    if not is_left_simple(F):
        raise ConstructionCheckFailed("double", "F is not left simple", F)
    if not (is_subsemigroup(F, first) and is_reflexive(F, first) and is_unitary(F, first)):
        raise ConstructionCheckFailed("double", "S1 is not reflexive unitary in F", first)
    return F


@dataclass(frozen=True)
class CorpusSpec:
    max_order: int = 18
    left_zero_sizes: Sequence[int] = (1, 2, 3)
    group_catalog: Sequence[str] = CATALOG_NAMES
    include_doubles: bool = True


@dataclass(frozen=True)
class CorpusMember:
    name: str
    semigroup: Semigroup
    left_zero_size: int | None = None
    group: str | None = None
    doubled_from: str | None = None
    # group whose composition factors the member's composition factors must match
    oracle_group: Semigroup | None = None


def build_corpus(spec: CorpusSpec = CorpusSpec()) -> list[CorpusMember]:
    """``L{m}x{G}`` for every size and group within ``max_order``, then the doubles
    ``double(name)`` of members whose double still fits."""
    cat = group_catalog()
    members = []
    for m in spec.left_zero_sizes:
        for gname in spec.group_catalog:
            G = cat[gname]
            if m * G.order <= spec.max_order:
                members.append(CorpusMember(f"L{m}x{gname}", left_group(m, G), m, gname, oracle_group=G))
    if spec.include_doubles:
        for base in list(members):
            if 2 * base.semigroup.order <= spec.max_order:
                # double(L_m x G) is L_m x (G x Z2)
                members.append(CorpusMember(f"double({base.name})", double(base.semigroup),
                                            doubled_from=base.name,
                                            oracle_group=direct_product(base.oracle_group, cyclic(2))))
    for mem in members:
        S = mem.semigroup
        if S.order > spec.max_order or not is_left_simple(S) or not idempotents(S):
            raise ConstructionCheckFailed("corpus", f"{mem.name} is not a left simple member with an idempotent", mem)
    return members


def resolve(name: str) -> Semigroup:
    """Parse ``Z4``, ``L2`` (left zero), ``L2xZ4`` or ``double(...)`` into a semigroup."""
    name = name.strip()
    if name.startswith("double(") and name.endswith(")"):
        return double(resolve(name[len("double("):-1]))
    cat = group_catalog()
    if name in cat:
        return cat[name]
    if name.startswith("L"):
        head, _, tail = name.partition("x")
        if head[1:].isdigit():
            m = int(head[1:])
            if not tail:
                return left_zero(m)
            if tail in cat:
                return left_group(m, cat[tail])
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    from .errors import InvalidParams

    raise InvalidParams(f"unknown semigroup name {name!r}")
