from __future__ import annotations

import pytest

from leftsimple.factory import cyclic, group_catalog, left_group, left_zero
from leftsimple.semigroup import ElemSet, Semigroup, direct_product

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def Z(n: int) -> Semigroup:
    return cyclic(n)


def L(m: int) -> Semigroup:
    return left_zero(m)


def LG(m: int, n: int) -> Semigroup:
    """L_m x Z_n; element (a, x) has index a * n + x."""
    return left_group(m, cyclic(n))




def lg_set(m: int, n: int, lz, xs) -> ElemSet:
    return ElemSet.of(m * n, (a * n + x for a in lz for x in xs))


@pytest.fixture(scope="session")
def catalog():
    return group_catalog()


@pytest.fixture(scope="session")
def S3(catalog):
    return catalog["S3"]


def semilattice2() -> Semigroup:
    # {0, 1} under min
    return Semigroup([[0, 0], [0, 1]])


def s3_sets(S3):
    """Named subsets of S3: identity, A3, and the transposition subgroup {id, (12)}."""
    labels = S3.labels
    ident = labels.index("123")
    a3 = [labels.index(x) for x in ("123", "231", "312")]
    t12 = [labels.index(x) for x in ("123", "213")]
    return (ElemSet.of(6, [ident]), ElemSet.of(6, a3), ElemSet.of(6, t12))
