"""Finite semigroups given by Cayley tables.

Elements are the dense indices ``0..n-1``; labels only matter for display
and file I/O.  Subsets are bitmasks over those indices (:class:`ElemSet`).
"""

from __future__ import annotations

import functools
import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import (
    DuplicateLabels,
    EmptyGenerator,
    ElementOutOfRange,
    EntryOutOfRange,
    NonSquareTable,
    NotAssociative,
    OrderBoundExceeded,
    ParentMismatch,
)

__all__ = [
    "DEFAULT_MAX_ORDER",
    "ElemSet",
    "IsoWitness",
    "Semigroup",
    "SubsemigroupView",
    "bits",
    "check_order",
    "closure",
    "direct_product",
    "idempotents",
    "is_isomorphic",
    "is_left_simple",
    "max_order",
    "new_semigroup",
    "set_product",
    "view",
]

DEFAULT_MAX_ORDER = 24
MAX_ORDER_ENV = "LEFTSIMPLE_MAX_ORDER"


def max_order() -> int:
    """Order bound for the exhaustive algorithms (env override allowed)."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ORDER
    return int(raw)


def check_order(S: Semigroup, bound: int | None = None) -> None:
    bound = max_order() if bound is None else bound
    if S.order > bound:
        raise OrderBoundExceeded(f"order {S.order} exceeds the configured bound {bound}")


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class ElemSet:
    """A subset of a semigroup's elements, stored as a bitmask."""

    parent_order: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.parent_order:
            raise ElementOutOfRange(f"mask {self.mask:#x} has members >= {self.parent_order}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> ElemSet:
        mask = 0
        for x in members:
            if not 0 <= x < n:
                raise ElementOutOfRange(f"element {x} out of range for order {n}")
            mask |= 1 << x
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> ElemSet:
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> ElemSet:
        return cls(n, 0)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return iter(bits(self.mask))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.parent_order and bool(self.mask >> x & 1)

    def _same(self, other: ElemSet) -> None:
        if not isinstance(other, ElemSet):
            raise TypeError(f"expected ElemSet, got {type(other).__name__}")
        if other.parent_order != self.parent_order:
            raise ParentMismatch(
                f"subsets of different semigroups (orders {self.parent_order} and {other.parent_order})"
            )

    def __and__(self, other: ElemSet) -> ElemSet:
        self._same(other)
        return ElemSet(self.parent_order, self.mask & other.mask)

    def __or__(self, other: ElemSet) -> ElemSet:
        self._same(other)
        return ElemSet(self.parent_order, self.mask | other.mask)

    def __sub__(self, other: ElemSet) -> ElemSet:
        self._same(other)
        return ElemSet(self.parent_order, self.mask & ~other.mask)

    def __le__(self, other: ElemSet) -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: ElemSet) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: ElemSet) -> bool:
        return other <= self

    def __gt__(self, other: ElemSet) -> bool:
        return other < self

    def as_bool(self) -> np.ndarray:
        return np.array([(self.mask >> i) & 1 for i in range(self.parent_order)], dtype=bool)

    def __repr__(self) -> str:
        return f"ElemSet({self.parent_order}, {{{', '.join(map(str, self.members))}}})"


class Semigroup:
    """An associative Cayley table, validated at construction."""

    __slots__ = ("table", "rows", "_labels", "_hash")

    def __init__(self, table, labels: Sequence[str] | None = None):
        arr = _as_table(table)
        n = arr.shape[0]
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise DuplicateLabels(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                seen = set()
                dup = next(x for x in labels if x in seen or seen.add(x))
                raise DuplicateLabels(f"label {dup!r} occurs more than once")
        triple = _associativity_violation(arr)
        if triple is not None:
            raise NotAssociative(triple)
        arr.setflags(write=False)
        self.table = arr
        self.rows = tuple(tuple(int(v) for v in row) for row in arr)
        self._labels = labels
        self._hash = hash((self.rows, labels))

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def labels(self) -> tuple[str, ...]:
        if self._labels is None:
            return tuple(str(i) for i in range(self.order))
        return self._labels

    @property
    def has_labels(self) -> bool:
        return self._labels is not None

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def full(self) -> ElemSet:
        return ElemSet.full(self.order)

    def subset(self, members: Iterable[int]) -> ElemSet:
        return ElemSet.of(self.order, members)

    def subset_by_labels(self, names: Iterable[str]) -> ElemSet:
        index = {lab: i for i, lab in enumerate(self.labels)}
        return ElemSet.of(self.order, (index[x] for x in names))

    def relabel(self, labels: Sequence[str] | None) -> Semigroup:
        return Semigroup(self.table, labels)

    def format_set(self, X: ElemSet) -> str:
        return "{" + ", ".join(self.labels[i] for i in X) + "}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Semigroup) and self.rows == other.rows and self._labels == other._labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Semigroup(order={self.order})"


def _as_table(table) -> np.ndarray:
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NonSquareTable(f"table must be n x n with n >= 1 (got {n} rows, row lengths {[len(r) for r in rows]})")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise EntryOutOfRange(f"entry ({i}, {j}) = {v!r} is not an index in [0, {n})")
    return np.array(rows, dtype=np.int64).reshape(n, n)


def _associativity_violation(T: np.ndarray) -> tuple[int, int, int] | None:
    # left[a,b,c] = (ab)c ; right[a,b,c] = a(bc)
    left = T[T]
    right = T[:, T]
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return None
    a, b, c = (int(x) for x in bad[0])
    return a, b, c


def new_semigroup(table, labels: Sequence[str] | None = None) -> Semigroup:
    """Validate ``table`` (square, in range, associative) and wrap it."""
    return Semigroup(table, labels)


def is_left_simple(S: Semigroup) -> bool:
    # finite criterion: Sa = S for every a, i.e. every column is a permutation
    cols = np.sort(S.table, axis=0)
    return bool((cols == np.arange(S.order)[:, None]).all())


def idempotents(S: Semigroup) -> ElemSet:
    return ElemSet.of(S.order, (e for e in range(S.order) if S.rows[e][e] == e))


def set_product(S: Semigroup, A: ElemSet, B: ElemSet) -> ElemSet:
    A._same(B)
    if A.parent_order != S.order:
        raise ParentMismatch(f"subset of order {A.parent_order} used with semigroup of order {S.order}")
    rows = S.rows
    mask = 0
    bs = B.members
    for a in A:
        row = rows[a]
        for b in bs:
            mask |= 1 << row[b]
    return ElemSet(S.order, mask)


def closure(S: Semigroup, X: ElemSet) -> ElemSet:
    """Smallest subsemigroup containing ``X``."""
    if X.parent_order != S.order:
        raise ParentMismatch(f"subset of order {X.parent_order} used with semigroup of order {S.order}")
    if not X:
        raise EmptyGenerator("cannot generate a subsemigroup from the empty set")
    cur = X
    while True:
        nxt = cur | set_product(S, cur, cur)
        if nxt == cur:
            return cur
        cur = nxt


def direct_product(S: Semigroup, T: Semigroup) -> Semigroup:
    """Pairs ``(a, x)`` encoded as ``a * |T| + x``, multiplied componentwise."""
    m, k = S.order, T.order
    a = np.arange(m * k) // k
    x = np.arange(m * k) % k
    table = S.table[a[:, None], a[None, :]] * k + T.table[x[:, None], x[None, :]]
    labels = [f"{S.labels[i]},{T.labels[j]}" for i in range(m) for j in range(k)]
    return Semigroup(table.tolist(), labels)


@dataclass(frozen=True)
class SubsemigroupView:
    """A subsemigroup re-indexed densely, with the maps back to the parent."""

    parent: Semigroup
    subset: ElemSet
    semigroup: Semigroup
    elements: tuple[int, ...]

    def lower(self, X: ElemSet) -> ElemSet:
        """Parent-level subset of the view -> subset in view indices."""
        if not X <= self.subset:
            raise ValueError(f"{X} is not contained in {self.subset}")
        pos = {e: i for i, e in enumerate(self.elements)}
        return ElemSet.of(len(self.elements), (pos[x] for x in X))

    def lift(self, Y: ElemSet) -> ElemSet:
        return ElemSet.of(self.parent.order, (self.elements[i] for i in Y))


@functools.lru_cache(maxsize=4096)
def view(S: Semigroup, X: ElemSet) -> SubsemigroupView:
    """Restrict ``S`` to the subsemigroup ``X`` (raises if ``X`` is not closed)."""
    from .errors import NotASubsemigroup

    if X.parent_order != S.order:
        raise ParentMismatch(f"subset of order {X.parent_order} used with semigroup of order {S.order}")
    if not X:
        raise NotASubsemigroup("empty subset")
    elems = X.members
    pos = {e: i for i, e in enumerate(elems)}
    table = []
    for a in elems:
        row = []
        for b in elems:
            ab = S.rows[a][b]
            if ab not in pos:
                raise NotASubsemigroup(f"{S.labels[a]}*{S.labels[b]} = {S.labels[ab]} leaves the subset")
            row.append(pos[ab])
        table.append(row)
    labels = [S.labels[e] for e in elems] if S.has_labels else None
    return SubsemigroupView(S, X, Semigroup(table, labels), elems)


@dataclass(frozen=True)
class IsoWitness:
    """A bijection ``source -> target`` preserving the multiplication."""

    mapping: tuple[int, ...]
    source: Semigroup
    target: Semigroup

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def verify(self) -> bool:
        n = self.source.order
        if self.target.order != n or sorted(self.mapping) != list(range(n)):
            return False
        m = np.asarray(self.mapping)
        return bool((m[self.source.table] == self.target.table[m[:, None], m[None, :]]).all())

    def inverse(self) -> IsoWitness:
        inv = [0] * len(self.mapping)
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return IsoWitness(tuple(inv), self.target, self.source)


def _element_invariants(S: Semigroup) -> list[tuple]:
    n = S.order
    rows = S.rows
    sqrt_count = [0] * n
    for y in range(n):
        sqrt_count[rows[y][y]] += 1
    out = []
    for x in range(n):
        # index and period of the monogenic subsemigroup <x>
        seen = {}
        p, k = x, 1
        while p not in seen:
            seen[p] = k
            p = rows[p][x]
            k += 1
        index = seen[p]
        period = k - index
        right_ideal = len(set(rows[x]))
        left_ideal = len({rows[y][x] for y in range(n)})
        out.append((rows[x][x] == x, index, period, right_ideal, left_ideal, sqrt_count[x]))
    return out


def is_isomorphic(S: Semigroup, T: Semigroup) -> IsoWitness | None:
    """Lexicographically least isomorphism ``S -> T``, or ``None``.

    Backtracks over images in element order; every assignment forces the
    images of all products of already-mapped elements, and candidates are
    pruned by isomorphism-invariant element profiles.
    """
    n = S.order
    if T.order != n:
        return None
    inv_s = _element_invariants(S)
    inv_t = _element_invariants(T)
    if sorted(inv_s) != sorted(inv_t):
        return None
    cand = [[y for y in range(n) if inv_t[y] == inv_s[x]] for x in range(n)]
    cand_set = [set(c) for c in cand]
    srows, trows = S.rows, T.rows
    m = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def assign(x: int, y: int) -> bool:
        # returns False on contradiction; assignments stay on `assigned` for undo
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            if m[x] != -1:
                if m[x] != y:
                    return False
                continue
            if used[y] or y not in cand_set[x]:
                return False
            m[x] = y
            used[y] = True
            assigned.append(x)
            for z in list(assigned):
                for p, q in ((srows[x][z], trows[y][m[z]]), (srows[z][x], trows[m[z]][y])):
                    if m[p] == -1:
                        stack.append((p, q))
                    elif m[p] != q:
                        return False
        return True

    def undo(depth: int) -> None:
        while len(assigned) > depth:
            x = assigned.pop()
            used[m[x]] = False
            m[x] = -1

    def search(i: int) -> bool:
        while i < n and m[i] != -1:
            i += 1
        if i == n:
            return True
        depth = len(assigned)
        for y in cand[i]:
            if used[y]:
                continue
            if assign(i, y) and search(i + 1):
                return True
            undo(depth)
        return False

    if not search(0):
        return None
    w = IsoWitness(tuple(m), S, T)
    if not w.verify():
        raise AssertionError("isomorphism search produced an invalid witness")
    return w
