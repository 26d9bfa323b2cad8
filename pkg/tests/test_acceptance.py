"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also collected into the
terminal summary) with the number of cases it exercised.
"""

import os
import subprocess
import sys

import pytest

from leftsimple.congruence import is_group_with_identity, principal_congruence, quotient
from leftsimple.factory import build_corpus, cyclic, double, group_catalog, group_name, left_zero
from leftsimple.semigroup import ElemSet, is_isomorphic, is_left_simple
from leftsimple.subsets import enumerate_ru_subsemigroups, is_reflexive_unitary
from leftsimple.verify import Limits, run_check

from .conftest import ACCEPTANCE_LINES

LIMITS = Limits()


@pytest.fixture(scope="module")
def corpus():
    return build_corpus()


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def sweep(corpus, check: str):
    """Run one check over the corpus; return (cases, ran, skipped, failures)."""
    cases = ran = skipped = 0
    failures = []
    for m in corpus:
        r = run_check(check, m.semigroup, LIMITS, m)
        if r.status == "skip":
            skipped += 1
            continue
        ran += 1
        cases += r.cases
        if r.status == "fail":
            failures.append(f"{m.name}: {r.witness}")
    return cases, ran, skipped, failures


def summary(cases, ran, skipped, failures, unit):
    text = f"{cases} {unit} on {ran} members"
    if skipped:
        text += f" ({skipped} above the order cap)"
    text += f", {len(failures)} failures"
    if failures:
        text += "; first: " + failures[0]
    return text


def test_corpus_shape(corpus):
    assert len(corpus) == 52
    assert max(m.semigroup.order for m in corpus) == 18
    assert all(is_left_simple(m.semigroup) for m in corpus)


def test_criterion_01_right_unitary_subsemigroups_are_left_simple(corpus):
    res = sweep(corpus, "right_unitary_left_simple")
    assert res[1] == sum(m.semigroup.order <= 12 for m in corpus)
    record(1, "right unitary subsemigroups are left simple", not res[3] and res[0] > 0,
           summary(*res, "right unitary subsemigroups"))


def test_criterion_02_group_congruences(corpus):
    res = sweep(corpus, "group_congruence")
    record(2, "S/P_H is a group with identity H, and conversely", not res[3] and res[0] > 0,
           summary(*res, "r.u. subsemigroups and group congruences"))


def test_criterion_03_correspondence(corpus):
    res = sweep(corpus, "correspondence")
    record(3, "unitary subsemigroups over H match subgroups of S/P_H", not res[3] and res[0] > 0,
           summary(*res, "(H, N) pairs"))


def test_criterion_04_intersection_isomorphism(corpus):
    res = sweep(corpus, "intersection")
    record(4, "<H,N>/P_H is isomorphic to N/P_(H cap N)", not res[3] and res[0] > 0,
           summary(*res, "(H, N) pairs"))


def test_criterion_05_zassenhaus(corpus):
    res = sweep(corpus, "zassenhaus")
    record(5, "butterfly quotients are isomorphic", not res[3] and res[0] > 0,
           summary(*res, "(A, B, N, M) tuples"))


def test_criterion_06_schreier(corpus):
    res = sweep(corpus, "schreier")
    record(6, "normal series have isomorphic refinements", not res[3] and res[0] > 0,
           summary(*res, "series pairs"))


def test_criterion_07_jordan_holder(corpus):
    res = sweep(corpus, "jordan_holder")
    oracle_checked = sum(m.oracle_group is not None for m in corpus)
    record(7, "composition series are unique up to isomorphism and match the group oracle",
           not res[3] and oracle_checked == len(corpus),
           summary(*res, "series pairs") + f", {oracle_checked} oracle comparisons")


def test_criterion_08_left_zero_iff_no_proper_ru(corpus):
    mismatches = []
    left_zero_members = 0
    for m in corpus:
        S = m.semigroup
        only_whole = enumerate_ru_subsemigroups(S) == [S.full()]
        is_lz = is_isomorphic(S, left_zero(S.order)) is not None
        left_zero_members += is_lz
        if only_whole != is_lz:
            mismatches.append(m.name)
    # extra left zero semigroups beyond the corpus, where the claim is not vacuous
    for k in range(1, 7):
        if enumerate_ru_subsemigroups(left_zero(k)) != [left_zero(k).full()]:
            mismatches.append(f"L{k}")
    record(8, "only the whole set is r.u. iff left zero", not mismatches and left_zero_members > 0,
           f"{len(corpus)} members ({left_zero_members} left zero) plus L1..L6, {len(mismatches)} mismatches")


def test_criterion_09_doubling_examples():
    klein = group_catalog()["Klein"]
    F = double(cyclic(2))
    w = is_isomorphic(F, klein)
    ok_klein = w is not None and w.verify()
    D = double(left_zero(2))
    first = ElemSet.of(4, [0, 1])
    pc = principal_congruence(D, first)
    Q = quotient(D, pc.congruence)
    ok_l2 = (is_left_simple(D) and is_reflexive_unitary(D, first)
             and group_name(Q.quotient) == "Z2" and is_group_with_identity(Q, pc.h_class))
    record(9, "double(Z2) is Klein four; double(L2) has L2 r.u. with quotient Z2", ok_klein and ok_l2,
           f"witness {w.mapping if w else None} verified={ok_klein}, double(L2) checks={ok_l2}")


def test_criterion_10_certify_is_deterministic():
    def run(seed: str) -> bytes:
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, "-m", "leftsimple.cli", "certify", "--golden"],
                              capture_output=True, env=env, check=False)
        assert proc.returncode == 0, proc.stderr.decode()
        return proc.stdout

    first, second = run("1"), run("2")
    record(10, "certify --golden is byte-identical across runs", first == second and len(first) > 0,
           f"{len(first)} bytes, identical={first == second}")
