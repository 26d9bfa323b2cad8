"""Per-semigroup theorem checks, bundled for corpus certification.

Each check returns a :class:`CheckResult`; a failure carries a printable
witness.  Checks that are exhaustive over large families stop at the
order caps in :class:`Limits`.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass, field

from . import groups
from .congruence import (
    correspondence_check,
    enumerate_congruences,
    intersection_iso,
    is_group_with_identity,
    principal_congruence,
    quotient,
    zassenhaus,
)
from .errors import SemigroupError
from .factory import CorpusMember, group_name, left_zero
from .semigroup import ElemSet, Semigroup, is_isomorphic, is_left_simple, view
from .series import (
    enumerate_normal_series,
    is_refinement,
    jordan_holder_check,
    schreier_refine,
    series_isomorphic,
)
from .subsets import (
    enumerate_right_unitary_subsemigroups,
    enumerate_ru_subsemigroups,
    enumerate_subsemigroups,
    enumerate_unitary_subsemigroups,
    is_reflexive_unitary,
    join_hn,
)

__all__ = [
    "CHECKS",
    "CheckResult",
    "Limits",
    "MemberResult",
    "certify_member",
    "same_factor_multiset",
]


@dataclass(frozen=True)
class Limits:
    right_unitary_max_order: int = 12
    congruence_converse_max_order: int = 8
    intersection_max_order: int = 12
    zassenhaus_max_order: int = 12
    schreier_pair_cap: int = 200


@dataclass
class CheckResult:
    check: str
    status: str  # "pass" | "fail" | "skip"
    cases: int = 0
    detail: dict = field(default_factory=dict)
    witness: str | None = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def as_dict(self, golden: bool = False) -> dict:
        out = {"check": self.check, "status": self.status, "cases": self.cases}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        if not golden:
            out["seconds"] = round(self.seconds, 4)
        return out


class _Fail(Exception):
    def __init__(self, witness: str):
        super().__init__(witness)
        self.witness = witness


def _fmt(S: Semigroup, X: ElemSet) -> str:
    return S.format_set(X)


def same_factor_multiset(xs: list[Semigroup], ys: list[Semigroup]) -> bool:
    if len(xs) != len(ys):
        return False
    pool = list(ys)
    for x in xs:
        for j, y in enumerate(pool):
            if is_isomorphic(x, y) is not None:
                del pool[j]
                break
        else:
            return False
    return True


# -- individual checks ------------------------------------------------------

def check_right_unitary_left_simple(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    if S.order > limits.right_unitary_max_order:
        return -1, {}
    found = enumerate_right_unitary_subsemigroups(S)
    for N in found:
        if not is_left_simple(view(S, N).semigroup):
            raise _Fail(f"right unitary {_fmt(S, N)} is not left simple")
    return len(found), {}


def check_group_congruence(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    cases = 0
    for H in enumerate_ru_subsemigroups(S):
        pc = principal_congruence(S, H)
        if not is_group_with_identity(quotient(S, pc.congruence), pc.h_class):
            raise _Fail(f"S/P_H is not a group with identity H for H = {_fmt(S, H)}")
        cases += 1
    converse = 0
    if S.order <= limits.congruence_converse_max_order:
        for cong in enumerate_congruences(S):
            Q = quotient(S, cong)
            ident = groups.group_identity(Q.quotient)
            if ident is None:
                continue
            E = cong.class_members(ident)
            if not is_reflexive_unitary(S, E):
                raise _Fail(f"group congruence with identity class {_fmt(S, E)} that is not reflexive unitary")
            if principal_congruence(S, E).congruence.class_of != cong.class_of:
                raise _Fail(f"group congruence with identity class {_fmt(S, E)} differs from P_E")
            converse += 1
    return cases + converse, {"ru_subsemigroups": cases, "group_congruences": converse}


def check_correspondence(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    cases = 0
    for H in enumerate_ru_subsemigroups(S):
        rep = correspondence_check(S, H)
        cases += len(rep.entries)
    return cases, {}


def check_intersection(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    if S.order > limits.intersection_max_order:
        return -1, {}
    cases = 0
    subs = enumerate_subsemigroups(S)
    for H in enumerate_ru_subsemigroups(S):
        for N in subs:
            if H & N:
                intersection_iso(S, H, N)
                cases += 1
    return cases, {}


def check_join(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    cases = 0
    unitary = enumerate_unitary_subsemigroups(S)
    for H in enumerate_ru_subsemigroups(S):
        for N in unitary:
            join_hn(S, H, N)
            cases += 1
    return cases, {}


def zassenhaus_tuples(S: Semigroup):
    unitary = enumerate_unitary_subsemigroups(S)
    ru_in = {}
    for X in unitary:
        v = view(S, X)
        ru_in[X] = [v.lift(T) for T in enumerate_ru_subsemigroups(v.semigroup)]
    for A, B in itertools.product(unitary, repeat=2):
        if not A & B:
            continue
        for N in ru_in[A]:
            for M in ru_in[B]:
                yield A, B, N, M


def check_zassenhaus(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    if S.order > limits.zassenhaus_max_order:
        return -1, {}
    cases = 0
    for A, B, N, M in zassenhaus_tuples(S):
        zassenhaus(S, A, B, N, M)
        cases += 1
    return cases, {}


def series_pairs(S: Semigroup, cap: int):
    all_series = enumerate_normal_series(S)
    pairs = list(itertools.combinations_with_replacement(range(len(all_series)), 2))
    if len(pairs) > cap:
        # evenly spaced, deterministic sample
        pairs = [pairs[(i * len(pairs)) // cap] for i in range(cap)]
    return [(all_series[i], all_series[j]) for i, j in pairs], len(all_series)


def check_schreier(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    pairs, total = series_pairs(S, limits.schreier_pair_cap)
    for a, b in pairs:
        ra, rb, _ = schreier_refine(a, b)
        if not (is_refinement(ra, a) and is_refinement(rb, b)):
            raise _Fail(f"refinement lost terms for {a!r} / {b!r}")
        if series_isomorphic(ra, rb) is None:
            raise _Fail(f"refinements are not isomorphic for {a!r} / {b!r}")
    return len(pairs), {"normal_series": total}


def check_jordan_holder(S: Semigroup, limits: Limits, member: CorpusMember | None = None) -> tuple[int, dict]:
    rep = jordan_holder_check(S)
    names = sorted(group_name(G) for G in rep.factors)
    detail = {"length": rep.length, "series": len(rep.series), "factors": names}
    if member is not None and member.oracle_group is not None:
        oracle = groups.composition_factors(member.oracle_group)
        if not same_factor_multiset(list(rep.factors), oracle):
            raise _Fail(f"factors {names} differ from the group oracle "
                        f"{sorted(group_name(G) for G in oracle)}")
        detail["oracle"] = "match"
    return max(rep.pairs_checked, 1), detail


def check_left_zero_criterion(S: Semigroup, limits: Limits) -> tuple[int, dict]:
    ru = enumerate_ru_subsemigroups(S)
    only_whole = [X.mask for X in ru] == [S.full().mask]
    is_lz = is_isomorphic(S, left_zero(S.order)) is not None
    if only_whole != is_lz:
        raise _Fail(f"no proper r.u. subsemigroup: {only_whole}, left zero: {is_lz}")
    return 1, {"left_zero": is_lz}


def check_doubling(S: Semigroup, limits: Limits, member: CorpusMember | None = None) -> tuple[int, dict]:
    if member is None or member.doubled_from is None:
        return -1, {}
    n = S.order // 2
    first = ElemSet(S.order, (1 << n) - 1)
    if not is_reflexive_unitary(S, first):
        raise _Fail("the first half is not reflexive unitary")
    pc = principal_congruence(S, first)
    Q = quotient(S, pc.congruence)
    if group_name(Q.quotient) != "Z2" or not is_group_with_identity(Q, pc.h_class):
        raise _Fail("F/P_S1 is not Z2")
    return 1, {}


CHECKS: dict[str, Callable] = {
    "right_unitary_left_simple": check_right_unitary_left_simple,
    "group_congruence": check_group_congruence,
    "correspondence": check_correspondence,
    "intersection": check_intersection,
    "join": check_join,
    "zassenhaus": check_zassenhaus,
    "schreier": check_schreier,
    "jordan_holder": check_jordan_holder,
    "left_zero_criterion": check_left_zero_criterion,
    "doubling": check_doubling,
}

_NEEDS_MEMBER = {"jordan_holder", "doubling"}


def run_check(name: str, S: Semigroup, limits: Limits, member: CorpusMember | None = None) -> CheckResult:
    fn = CHECKS[name]
    start = time.perf_counter()
    try:
        if name in _NEEDS_MEMBER:
            cases, detail = fn(S, limits, member)
        else:
            cases, detail = fn(S, limits)
    except _Fail as exc:
        return CheckResult(name, "fail", witness=exc.witness, seconds=time.perf_counter() - start)
    except SemigroupError as exc:
        return CheckResult(name, "fail", witness=f"{type(exc).__name__}: {exc}",
                           seconds=time.perf_counter() - start)
    status = "skip" if cases < 0 else "pass"
    return CheckResult(name, status, max(cases, 0), detail, seconds=time.perf_counter() - start)


@dataclass
class MemberResult:
    name: str
    order: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self, golden: bool = False) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "passed": self.passed,
            "checks": [c.as_dict(golden) for c in self.checks],
        }


def certify_member(member: CorpusMember, limits: Limits = Limits(), checks=None) -> MemberResult:
    S = member.semigroup
    names = list(CHECKS) if checks is None else list(checks)
    results = []
    if not is_left_simple(S):
        results.append(CheckResult("left_simple", "fail", witness="member is not left simple"))
    else:
        results.append(CheckResult("left_simple", "pass", 1))
    for name in names:
        results.append(run_check(name, S, limits, member))
    return MemberResult(member.name, S.order, results)
