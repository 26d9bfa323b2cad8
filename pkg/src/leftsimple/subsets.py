"""Reflexive and unitary subsets, the HN join, and exhaustive sweeps."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _horn
from .errors import (
    EmptySubset,
    HNotReflexiveUnitary,
    NNotUnitary,
    NotLeftSimple,
    ParentMismatch,
    PreconditionViolated,
    TheoremCheckFailed,
)
from .semigroup import ElemSet, Semigroup, check_order, closure, is_left_simple, set_product, view

__all__ = [
    "SubsetReport",
    "Verdict",
    "enumerate_right_unitary_subsemigroups",
    "enumerate_ru_subsemigroups",
    "enumerate_subsemigroups",
    "enumerate_unitary_subsemigroups",
    "enumerate_unitary_subsemigroups_over",
    "is_left_unitary",
    "is_reflexive",
    "is_reflexive_unitary",
    "is_right_unitary",
    "is_subsemigroup",
    "is_unitary",
    "join_hn",
    "ru_within",
    "subset_report",
]


class Verdict(NamedTuple):
    """Outcome of a predicate scan; ``witness`` is the first violating pair."""

    holds: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _prepare(S: Semigroup, X: ElemSet) -> np.ndarray:
    if X.parent_order != S.order:
        raise ParentMismatch(f"subset of order {X.parent_order} used with semigroup of order {S.order}")
    if not X:
        raise EmptySubset("the subset must be nonempty")
    return X.as_bool()


def _verdict(violations: np.ndarray) -> Verdict:
    hits = np.argwhere(violations)
    if len(hits) == 0:
        return Verdict(True)
    a, b = hits[0]
    return Verdict(False, (int(a), int(b)))


def is_subsemigroup(S: Semigroup, X: ElemSet) -> Verdict:
    x = _prepare(S, X)
    return _verdict(x[:, None] & x[None, :] & ~x[S.table])


def is_reflexive(S: Semigroup, H: ElemSet) -> Verdict:
    h = _prepare(S, H)
    return _verdict(h[S.table] & ~h[S.table.T])


def is_left_unitary(S: Semigroup, U: ElemSet) -> Verdict:
    u = _prepare(S, U)
    return _verdict(u[S.table] & u[:, None] & ~u[None, :])


def is_right_unitary(S: Semigroup, U: ElemSet) -> Verdict:
    u = _prepare(S, U)
    return _verdict(u[S.table] & ~u[:, None] & u[None, :])


def is_unitary(S: Semigroup, U: ElemSet) -> Verdict:
    left = is_left_unitary(S, U)
    if not left:
        return left
    return is_right_unitary(S, U)


def is_reflexive_unitary(S: Semigroup, H: ElemSet) -> bool:
    """Subsemigroup, reflexive and unitary in ``S``."""
    return bool(is_subsemigroup(S, H) and is_reflexive(S, H) and is_unitary(S, H))


def ru_within(S: Semigroup, T: ElemSet, X: ElemSet) -> bool:
    """Is ``T`` a reflexive unitary subsemigroup of the subsemigroup ``X``?"""
    if not T <= X:
        return False
    v = view(S, X)
    return is_reflexive_unitary(v.semigroup, v.lower(T))


@dataclass(frozen=True)
class SubsetReport:
    subject: ElemSet
    is_subsemigroup: bool
    is_reflexive: bool
    is_left_unitary: bool
    is_right_unitary: bool
    is_unitary: bool
    witnesses: dict[str, tuple[int, int]]

    @property
    def is_reflexive_unitary(self) -> bool:
        return self.is_subsemigroup and self.is_reflexive and self.is_unitary


def subset_report(S: Semigroup, H: ElemSet) -> SubsetReport:
    checks = {
        "subsemigroup": is_subsemigroup(S, H),
        "reflexive": is_reflexive(S, H),
        "left_unitary": is_left_unitary(S, H),
        "right_unitary": is_right_unitary(S, H),
    }
    witnesses = {k: v.witness for k, v in checks.items() if not v}
    unitary = checks["left_unitary"].holds and checks["right_unitary"].holds
    if not unitary:
        witnesses["unitary"] = witnesses.get("left_unitary") or witnesses["right_unitary"]
    return SubsetReport(
        subject=H,
        is_subsemigroup=checks["subsemigroup"].holds,
        is_reflexive=checks["reflexive"].holds,
        is_left_unitary=checks["left_unitary"].holds,
        is_right_unitary=checks["right_unitary"].holds,
        is_unitary=unitary,
        witnesses=witnesses,
    )


def join_hn(S: Semigroup, H: ElemSet, N: ElemSet) -> ElemSet:
    """The product set HN, checked to equal the subsemigroup generated by H and N."""
    if not is_left_simple(S):
        raise NotLeftSimple("the semigroup is not left simple")
    if not is_reflexive_unitary(S, H):
        raise HNotReflexiveUnitary(f"H = {S.format_set(H)} is not a reflexive unitary subsemigroup")
    if not (is_subsemigroup(S, N) and is_unitary(S, N)):
        raise NNotUnitary(f"N = {S.format_set(N)} is not a unitary subsemigroup")
    hn = set_product(S, H, N)
    if not H & N:
        raise TheoremCheckFailed("join", "H and N are disjoint", (H, N))
    generated = closure(S, H | N)
    if hn != generated:
        raise TheoremCheckFailed("join", "HN differs from <H, N>", (hn, generated))
    if not (is_subsemigroup(S, hn) and is_unitary(S, hn)):
        raise TheoremCheckFailed("join", "HN is not a unitary subsemigroup", hn)
    if is_reflexive(S, N):
        nh = set_product(S, N, H)
        if nh != hn:
            raise TheoremCheckFailed("join", "HN != NH for reflexive N", (hn, nh))
        if not is_reflexive(S, hn):
            raise TheoremCheckFailed("join", "HN is not reflexive", hn)
    return hn


# -- sweeps -------------------------------------------------------------------

@functools.lru_cache(maxsize=1024)
def _sweep(S: Semigroup, kinds: tuple[str, ...], base: int = 0) -> tuple[int, ...]:
    check_order(S)
    rows = S.rows
    clauses = []
    for kind in kinds:
        clauses += getattr(_horn, f"{kind}_clauses")(rows)
    clauses += _horn.base_clauses(base)
    system = _horn.HornSystem(S.order, clauses)
    return tuple(m for m in system.closed_sets() if m)


def _as_sets(S: Semigroup, masks) -> list[ElemSet]:
    return [ElemSet(S.order, m) for m in masks]


def enumerate_subsemigroups(S: Semigroup) -> list[ElemSet]:
    return _as_sets(S, _sweep(S, ("subsemigroup",)))


def enumerate_right_unitary_subsemigroups(S: Semigroup) -> list[ElemSet]:
    return _as_sets(S, _sweep(S, ("subsemigroup", "right_unitary")))


def enumerate_unitary_subsemigroups(S: Semigroup) -> list[ElemSet]:
    return _as_sets(S, _sweep(S, ("subsemigroup", "left_unitary", "right_unitary")))


def enumerate_ru_subsemigroups(S: Semigroup) -> list[ElemSet]:
    """All nonempty reflexive unitary subsemigroups, ascending by bitmask."""
    kinds = ("subsemigroup", "left_unitary", "right_unitary", "reflexive")
    return _as_sets(S, _sweep(S, kinds))


def enumerate_unitary_subsemigroups_over(S: Semigroup, H: ElemSet) -> list[ElemSet]:
    """Unitary subsemigroups N with H <= N, ascending by bitmask."""
    if not is_left_simple(S):
        raise NotLeftSimple("the semigroup is not left simple")
    if not is_reflexive_unitary(S, H):
        raise PreconditionViolated(f"H = {S.format_set(H)} is not reflexive unitary")
    return _as_sets(S, _sweep(S, ("subsemigroup", "left_unitary", "right_unitary"), H.mask))
