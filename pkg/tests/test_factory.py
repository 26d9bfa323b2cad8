import itertools

import pytest

from leftsimple import errors, groups
from leftsimple.factory import (
    CATALOG_NAMES,
    CorpusSpec,
    build_corpus,
    cyclic,
    double,
    group_catalog,
    group_name,
    left_group,
    left_zero,
    resolve,
)
from leftsimple.congruence import is_group_with_identity, principal_congruence, quotient
from leftsimple.semigroup import ElemSet, direct_product, idempotents, is_isomorphic, is_left_simple
from leftsimple.subsets import enumerate_ru_subsemigroups, is_reflexive, is_unitary

from .conftest import semilattice2

ORDERS = {"Z1": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z5": 5, "Z6": 6, "Z7": 7, "Z8": 8,
          "Klein": 4, "S3": 6, "D4": 8, "Q8": 8}


class TestLeftZero:
    def test_examples(self):
        assert left_zero(1).order == 1
        L2 = left_zero(2)
        assert is_left_simple(L2) and not groups.is_group(L2) and len(idempotents(L2)) == 2
        assert enumerate_ru_subsemigroups(left_zero(3)) == [left_zero(3).full()]
        assert all(left_zero(4).mul(a, b) == a for a, b in itertools.product(range(4), repeat=2))

    def test_zero_size(self):
        with pytest.raises(errors.ZeroSize):
            left_zero(0)


class TestCatalog:
    def test_names_and_orders(self):
        cat = group_catalog()
        assert tuple(cat) == CATALOG_NAMES
        assert {k: G.order for k, G in cat.items()} == ORDERS
        assert all(groups.is_group(G) for G in cat.values())

    def test_s3(self, S3):
        subs = groups.subgroups(S3)
        assert len(subs) == 6
        assert sorted(len(K) for K in subs if groups.is_normal_subgroup(S3, K)) == [1, 3, 6]
        assert any(S3.mul(a, b) != S3.mul(b, a) for a in range(6) for b in range(6))

    def test_distinct_groups(self):
        cat = group_catalog()
        for x, y in itertools.combinations(cat, 2):
            if cat[x].order == cat[y].order:
                assert is_isomorphic(cat[x], cat[y]) is None, (x, y)

    def test_subgroup_counts(self):
        # numbers of subgroups, normal subgroups: standard values
        want = {"Z8": (4, 4), "Klein": (5, 5), "S3": (6, 3), "D4": (10, 6), "Q8": (6, 6), "Z6": (4, 4)}
        cat = group_catalog()
        for name, (total, normal) in want.items():
            subs = groups.subgroups(cat[name])
            assert len(subs) == total, name
            assert sum(groups.is_normal_subgroup(cat[name], K) for K in subs) == normal, name

    def test_group_name(self):
        assert group_name(cyclic(12)) == "G12"
        assert group_name(semilattice2()) == "semigroup2"
        assert group_name(double(cyclic(2))) == "Klein"


class TestLeftGroup:
    def test_examples(self, catalog):
        for G in catalog.values():
            assert is_isomorphic(left_group(1, G), G) is not None
        S = left_group(2, cyclic(2))
        assert S.order == 4
        assert [X.members for X in enumerate_ru_subsemigroups(S)] == [(0, 2), (0, 1, 2, 3)]

    def test_not_a_group(self):
        with pytest.raises(errors.NotAGroup):
            left_group(2, left_zero(2))


class TestDouble:
    def test_z1(self):
        F = double(cyclic(1))
        assert F.order == 2 and is_isomorphic(F, cyclic(2)) is not None

    def test_z2_is_klein(self, catalog):
        F = double(cyclic(2))
        assert F.rows == ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
        assert all(F.mul(x, x) == 0 for x in range(4))
        w = is_isomorphic(F, catalog["Klein"])
        assert w is not None and w.verify()

    def test_l2(self):
        F = double(left_zero(2))
        assert F.order == 4 and is_left_simple(F)
        first = ElemSet.of(4, [0, 1])
        assert is_reflexive(F, first) and is_unitary(F, first)
        pc = principal_congruence(F, first)
        Q = quotient(F, pc.congruence)
        assert group_name(Q.quotient) == "Z2" and is_group_with_identity(Q, pc.h_class)

    def test_case_table(self):
        # the four product cases, with the copy map i -> i + n
        S1 = left_group(2, cyclic(3))
        F = double(S1)
        n = S1.order
        for e, f in itertools.product(range(n), repeat=2):
            ef = S1.mul(e, f)
            assert F.mul(e, f) == ef
            assert F.mul(e + n, f) == ef + n
            assert F.mul(e, f + n) == ef + n
            assert F.mul(e + n, f + n) == ef

    def test_is_left_group_times_z2(self, catalog):
        for name in ("Z3", "Klein", "S3"):
            G = catalog[name]
            for m in (1, 2):
                F = double(left_group(m, G))
                assert is_isomorphic(F, left_group(m, direct_product(G, cyclic(2)))) is not None

    def test_precondition(self):
        with pytest.raises(errors.PreconditionViolated):
            double(semilattice2())


class TestCorpus:
    def test_default_size(self):
        corpus = build_corpus()
        base = [(m, g) for m in (1, 2, 3) for g, k in ORDERS.items() if m * k <= 18]
        doubled = [(m, g) for m, g in base if 2 * m * ORDERS[g] <= 18]
        assert len(corpus) == len(base) + len(doubled) == 52
        assert [c.name for c in corpus[:len(base)]] == [f"L{m}x{g}" for m, g in base]
        assert [c.name for c in corpus[len(base):]] == [f"double(L{m}x{g})" for m, g in doubled]
        for c in corpus:
            assert c.semigroup.order <= 18 and is_left_simple(c.semigroup) and idempotents(c.semigroup)

    def test_small(self):
        spec = CorpusSpec(max_order=4, left_zero_sizes=(1, 2), group_catalog=("Z1", "Z2"))
        assert [c.name for c in build_corpus(spec)] == [
            "L1xZ1", "L1xZ2", "L2xZ1", "L2xZ2",
            "double(L1xZ1)", "double(L1xZ2)", "double(L2xZ1)",
        ]
        assert [c.name for c in build_corpus(CorpusSpec(max_order=1))] == ["L1xZ1"]

    def test_double_z2_member(self, catalog):
        spec = CorpusSpec(max_order=4, left_zero_sizes=(1,), group_catalog=("Z2",))
        members = {c.name: c for c in build_corpus(spec)}
        assert is_isomorphic(members["double(L1xZ2)"].semigroup, catalog["Klein"]) is not None

    def test_resolve(self):
        assert resolve("Z4") == cyclic(4)
        assert resolve("L2") == left_zero(2)
        assert resolve("L2xZ4") == left_group(2, cyclic(4))
        assert resolve("double(Z2)") == double(cyclic(2))
        assert resolve("Z12").order == 12
        with pytest.raises(errors.InvalidParams):
            resolve("nope")
