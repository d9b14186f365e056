"""Groupification, subgroup enumeration, and the classification of locally
constant etale morphisms."""

from __future__ import annotations

import pytest

import monoidgeom as mg
from monoidgeom import zoo
from monoidgeom.errors import NotAGroup, SizeCap


def test_groupification_of_groups_is_identity():
    for g in [zoo.trivial(), zoo.cyclic(2), zoo.cyclic(3), zoo.klein(), zoo.sym3()]:
        gp = mg.groupification(g)
        assert mg.is_isomorphic(gp.group, g)
        assert gp.eta.is_injective


def test_groupification_collapses_b2_and_a2():
    for n in [zoo.b2(), zoo.a2(), zoo.chain(3), zoo.chain(4), zoo.left_zero_adjoined()]:
        gp = mg.groupification(n)
        assert gp.group.size == 1


def test_every_idempotent_maps_to_identity(small_fixtures):
    for n in small_fixtures:
        gp = mg.groupification(n)
        for e in mg.idempotents(n):
            assert gp.eta.map[e] == gp.group.identity


def test_every_hom_into_a_group_kills_idempotents(small_fixtures):
    for n in small_fixtures:
        for g in [zoo.cyclic(2), zoo.cyclic(3), zoo.klein()]:
            for h in mg.enumerate_semigroup_homs(n, g):
                for e in mg.idempotents(n):
                    assert h.map[e] == g.identity


def test_subgroups_counts():
    assert len(mg.subgroups(zoo.trivial())) == 1
    assert len(mg.subgroups(zoo.cyclic(2))) == 2
    assert len(mg.subgroups(zoo.klein())) == 5
    assert len(mg.subgroups(zoo.cyclic(4))) == 3
    assert len(mg.subgroups(zoo.sym3())) == 6


def test_subgroups_requires_group_and_cap():
    with pytest.raises(NotAGroup):
        mg.subgroups(zoo.b2())
    with pytest.raises(SizeCap):
        mg.subgroups(zoo.cyclic(5), cap=4)


def test_classify_lc_etale_c2_has_two_entries():
    cls = mg.classify_lc_etale(zoo.cyclic(2))
    assert len(cls.entries) == 2
    sizes = sorted(e.monoid.size for e in cls.entries)
    assert sizes == [1, 2]


def test_classify_lc_etale_b2_single_identity_entry():
    cls = mg.classify_lc_etale(zoo.b2())
    assert len(cls.entries) == 1
    entry = cls.entries[0]
    assert mg.is_isomorphic(entry.monoid, zoo.b2())
    assert entry.hom.is_injective and entry.hom.is_surjective


def test_classify_lc_etale_a2_single_entry():
    cls = mg.classify_lc_etale(zoo.a2())
    assert len(cls.entries) == 1
    assert mg.is_isomorphic(cls.entries[0].monoid, zoo.a2())


def test_classify_lc_etale_klein_all_subgroups():
    cls = mg.classify_lc_etale(zoo.klein())
    assert len(cls.entries) == 5  # every subgroup of a group qualifies


def test_entries_classify_as_lc_etale():
    for n in [zoo.cyclic(2), zoo.b2(), zoo.a2(), zoo.cyclic(3), zoo.chain(3), zoo.klein()]:
        for entry in mg.classify_lc_etale(n).entries:
            assert mg.classify_hom(entry.hom).value("locally_constant_etale") is True


def test_pullbacks_along_eta_are_locally_constant():
    for n in [zoo.cyclic(2), zoo.b2(), zoo.a2(), zoo.chain(3)]:
        gp = mg.groupification(n)
        for sub in mg.subgroups(gp.group):
            x = mg.coset_action(gp.group, sub)
            assert mg.is_locally_constant(mg.pullback_action(x, gp.eta))


def test_collapse_slice_round_trip():
    for n in [zoo.cyclic(2), zoo.b2(), zoo.a2(), zoo.cyclic(3), zoo.chain(3), zoo.klein()]:
        cls = mg.classify_lc_etale(n)
        for entry in cls.entries:
            x = mg.coset_action(cls.groupification.group, entry.subgroup)
            pulled = mg.pullback_action(x, cls.groupification.eta)
            res = mg.collapse_slice(n, pulled)
            assert res is not None
            assert mg.is_isomorphic(res.monoid, entry.monoid)


def test_groupification_universality_spot_check():
    n = zoo.a2()
    gp = mg.groupification(n)
    for g in [zoo.cyclic(2), zoo.cyclic(3)]:
        for h in mg.enumerate_semigroup_homs(n, g):
            lifts = [
                k
                for k in mg.enumerate_semigroup_homs(gp.group, g)
                if mg.compose_homs(k, gp.eta).map == h.map
            ]
            assert len(lifts) == 1
