"""Tensor products, inducing biactions, terminal pushforwards, composition."""

from __future__ import annotations

import pytest

import monoidgeom as mg
from monoidgeom import zoo
from monoidgeom.actions import LeftAction, constant_action, regular_left, regular_right, terminal_right
from monoidgeom.errors import MonoidMismatch, SizeCap


def test_tensor_with_regular_is_identity_up_to_pairing():
    """X (x) N ~ X via (x, n) -> x . n: the pairing classes must coincide
    with the fibers of that map."""
    for m in [zoo.b2(), zoo.a2(), zoo.cyclic(3)]:
        x = regular_right(m)
        t = mg.tensor(x, regular_left(m))
        assert t.num_classes == x.size
        for v in range(x.size):
            for g in range(m.size):
                for v2 in range(x.size):
                    for g2 in range(m.size):
                        same_class = t.pairing(v, g) == t.pairing(v2, g2)
                        assert same_class == (x.table[v][g] == x.table[v2][g2])


def test_tensor_no_identifications_over_trivial_monoid():
    t1 = zoo.trivial()
    x = terminal_right(t1)
    a = LeftAction(t1, ("1", "g"), ((0,), (1,)), "C2 as T1-set")
    assert mg.tensor(x, a).num_classes == 2


def test_tensor_single_point():
    t1 = zoo.trivial()
    x = terminal_right(t1)
    a = LeftAction(t1, ("0",), ((0,),))
    assert mg.tensor(x, a).num_classes == 1


def test_tensor_monoid_mismatch():
    with pytest.raises(MonoidMismatch):
        mg.tensor(regular_right(zoo.b2()), regular_left(zoo.cyclic(2)))


def test_tensor_size_cap():
    x = constant_action(zoo.trivial(), [f"p{i}" for i in range(101)])
    a = LeftAction(zoo.trivial(), tuple(f"q{i}" for i in range(101)), tuple((i,) for i in range(101)))
    with pytest.raises(SizeCap):
        mg.tensor(x, a, cap=10_000)


# ---------------------------------------------------------------------------
# hom_to_biact


def test_hom_to_biact_of_identity_is_regular():
    b2 = zoo.b2()
    a = mg.hom_to_biact(mg.identity_hom(b2))
    assert a.carrier == b2.elements
    assert a.left_table == regular_left(b2).table
    assert a.right_table == b2.table


def test_hom_to_biact_iota_b_is_single_zero():
    a = mg.hom_to_biact(zoo.iota_b2())
    assert a.carrier == ("0",)


def test_hom_to_biact_incl_c2_carrier_is_group():
    a = mg.hom_to_biact(zoo.incl_c2())
    assert a.carrier == zoo.cyclic(2).elements
    assert all(a.right_table[v] == (v,) for v in range(2))  # trivial right action


def test_hom_to_biact_always_flat(small_fixtures):
    for m in small_fixtures:
        for n in small_fixtures:
            for h in mg.enumerate_semigroup_homs(m, n)[:10]:
                assert mg.is_flat(mg.hom_to_biact(h).as_left())


# ---------------------------------------------------------------------------
# pushforward of the terminal object and its dual


def test_pushforward_identity_is_terminal():
    pf = mg.pushforward_terminal(mg.identity_hom(zoo.b2()))
    assert pf.action.size == 1


def test_pushforward_iota_b_is_terminal():
    pf = mg.pushforward_terminal(zoo.iota_b2())
    assert pf.action.size == 1


def test_pushforward_incl_c2_is_regular():
    pf = mg.pushforward_terminal(zoo.incl_c2())
    assert pf.action.size == 2
    assert mg.find_right_action_iso(pf.action, regular_right(zoo.cyclic(2))) is not None


def test_pullback_dual_identity_and_incl():
    assert mg.pullback_terminal_dual(mg.identity_hom(zoo.b2())).action.size == 1
    dual = mg.pullback_terminal_dual(zoo.incl_c2())
    assert dual.action.size == 2
    assert mg.find_left_action_iso(dual.action, regular_left(zoo.cyclic(2))) is not None


def test_pullback_dual_psi_b_collapses():
    assert mg.pullback_terminal_dual(zoo.psi_b2()).action.size == 1


def test_pushforward_action_is_well_defined_quotient(hom_fixtures):
    for h in hom_fixtures:
        pf = mg.pushforward_terminal(h)
        n = h.codomain
        # class(x) . g = class(x g) for every ideal element
        for v in pf.ideal:
            for g in range(n.size):
                lhs = pf.action.table[pf.class_of_ideal_element(v)][g]
                assert lhs == pf.class_of_ideal_element(n.mul(v, g))


# ---------------------------------------------------------------------------
# composition of biactions


def composable_hom_pairs(monoids):
    for m in monoids:
        for l in monoids:
            for n in monoids:
                inner = mg.enumerate_semigroup_homs(m, l)[:3]
                outer = mg.enumerate_semigroup_homs(l, n)[:3]
                for g in inner:
                    for f in outer:
                        yield f, g


def test_compose_biacts_matches_hom_composition():
    monoids = [zoo.trivial(), zoo.cyclic(2), zoo.b2()]
    checked = 0
    for f, g in composable_hom_pairs(monoids):
        composite = mg.compose_biacts(mg.hom_to_biact(f), mg.hom_to_biact(g))
        direct = mg.hom_to_biact(mg.compose_homs(f, g))
        assert mg.find_biaction_iso(composite, direct) is not None
        checked += 1
    assert checked >= 20


def test_compose_with_regular_biaction_is_unit():
    for h in [zoo.q_a2(), zoo.incl_c2()]:
        ident_dom = mg.hom_to_biact(mg.identity_hom(h.domain))
        ident_cod = mg.hom_to_biact(mg.identity_hom(h.codomain))
        a = mg.hom_to_biact(h)
        assert mg.find_biaction_iso(mg.compose_biacts(a, ident_dom), a) is not None
        assert mg.find_biaction_iso(mg.compose_biacts(ident_cod, a), a) is not None


def test_compose_biacts_associative_up_to_iso():
    h1 = zoo.incl_c2()  # T1 -> C2
    klein_incl = zoo.incl_c2_klein()  # C2 -> C2xC2
    collapse = mg.enumerate_semigroup_homs(zoo.klein(), zoo.cyclic(2))[0]  # C2xC2 -> C2
    a = mg.hom_to_biact(collapse)
    b = mg.hom_to_biact(klein_incl)
    c = mg.hom_to_biact(h1)
    left = mg.compose_biacts(mg.compose_biacts(a, b), c)
    right = mg.compose_biacts(a, mg.compose_biacts(b, c))
    assert mg.find_biaction_iso(left, right) is not None


def test_compose_biacts_mismatch():
    with pytest.raises(MonoidMismatch):
        mg.compose_biacts(mg.hom_to_biact(zoo.incl_c2()), mg.hom_to_biact(zoo.incl_c2()))


def test_pushforward_is_single_class_iff_closure_is_everything(small_fixtures):
    for m in small_fixtures:
        for n in small_fixtures:
            for h in mg.enumerate_semigroup_homs(m, n)[:6]:
                single = mg.pushforward_terminal(h).action.size == 1
                assert single == mg.closure_equals_all(n, set(h.map), "right")
