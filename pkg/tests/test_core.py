"""Monoids, homs, congruences, completions, and functor predicates."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import monoidgeom as mg
from monoidgeom import zoo
from monoidgeom.errors import BadIdentity, NonAssociative, NotIdempotent, UnknownLabel


# ---------------------------------------------------------------------------
# validation


def test_validate_trivial_monoid():
    m = mg.validate_monoid(["1"], "1", [["1"]], "T1")
    assert m.size == 1 and m.identity == 0


def test_validate_b2_multiplicative_monoid():
    m = mg.validate_monoid(["1", "0"], "1", [["1", "0"], ["0", "0"]])
    assert m.mul(1, 1) == 1  # 0 absorbing


def test_validate_rejects_bad_identity():
    with pytest.raises(BadIdentity):
        mg.validate_monoid(["1", "g"], "1", [["1", "g"], ["1", "g"]])


def test_validate_rejects_unknown_label():
    with pytest.raises(UnknownLabel):
        mg.validate_monoid(["1", "g"], "1", [["1", "g"], ["g", "x"]])


def test_validate_rejects_nonassociative_with_witness():
    # (a.a).a = b.a = a  but  a.(a.a) = a.b = 1
    with pytest.raises(NonAssociative) as err:
        mg.validate_monoid(
            ["1", "a", "b"],
            "1",
            [["1", "a", "b"], ["a", "b", "1"], ["b", "a", "a"]],
        )
    assert len(err.value.triple) == 3


# ---------------------------------------------------------------------------
# opposite, invertibles, idempotents


def test_opposite_is_involution_on_fixtures(small_fixtures):
    for m in small_fixtures:
        assert mg.opposite(mg.opposite(m)) == m


def test_opposite_left_zero_is_right_zero():
    m = zoo.left_zero_adjoined()
    op = mg.opposite(m)
    # oracle: transpose the table by hand
    expected = tuple(tuple(m.table[j][i] for j in range(3)) for i in range(3))
    assert op.table == expected
    a, b = m.index("a"), m.index("b")
    assert op.mul(a, b) == b and op.mul(b, a) == a


def test_invertibles_examples():
    assert mg.invertibles(zoo.cyclic(2), "right") == (0, 1)
    assert mg.invertibles(zoo.b2(), "right") == (0,)
    assert mg.invertibles(zoo.a2(), "left") == (0,)


def test_invertibles_sides_agree(small_fixtures):
    for m in small_fixtures:
        assert mg.invertibles(m, "right") == mg.invertibles(m, "left")


def test_idempotents_examples():
    assert mg.idempotents(zoo.cyclic(2)) == (0,)
    assert mg.idempotents(zoo.b2()) == (0, 1)
    a2 = zoo.a2()
    assert mg.idempotents(a2) == (a2.index("1"), a2.index("z"))


# ---------------------------------------------------------------------------
# corners and Morita


def test_corner_at_identity_is_whole_monoid():
    b2 = zoo.b2()
    m, incl = mg.corner(b2, b2.identity)
    assert m == b2 and incl.map == (0, 1)


def test_corner_b2_at_zero_is_trivial():
    b2 = zoo.b2()
    m, incl = mg.corner(b2, b2.index("0"))
    assert m.elements == ("0",)
    assert incl.image_of_identity == b2.index("0")
    assert mg.is_isomorphic(m, zoo.trivial())


def test_corner_a2_at_z():
    a2 = zoo.a2()
    m, incl = mg.corner(a2, a2.index("z"))
    assert m.elements == ("z",)


def test_morita_corner_examples(small_fixtures):
    for m in small_fixtures:
        assert mg.is_morita_corner(m, m.identity).value
    b2 = zoo.b2()
    res = mg.is_morita_corner(b2, b2.index("0"))
    assert not res.value
    assert res.certificate == {"failing_idempotent": "1"}
    with pytest.raises(NotIdempotent):
        mg.is_morita_corner(zoo.cyclic(2), zoo.cyclic(2).index("g"))


def test_morita_corner_group_only_idempotent_is_identity():
    g = zoo.klein()
    assert mg.idempotents(g) == (g.identity,)
    assert mg.is_morita_corner(g, g.identity).value


# ---------------------------------------------------------------------------
# congruences and quotients


def test_congruence_closure_of_nothing_is_discrete():
    b2 = zoo.b2()
    c = mg.congruence_closure(b2, [], "two-sided")
    assert c.num_classes == b2.size


def test_congruence_closure_a2_collapses_all():
    a2 = zoo.a2()
    c = mg.congruence_closure(a2, [(a2.index("z"), a2.index("1"))], "two-sided")
    assert c.num_classes == 1  # z ~ 1 forces a = a.1 ~ a.z = z ~ 1


def test_right_congruence_closure_b2():
    b2 = zoo.b2()
    c = mg.congruence_closure(b2, [(0, 1)], "right")
    assert c.num_classes == 1


def test_quotient_by_discrete_is_isomorphic_copy():
    a2 = zoo.a2()
    quo, proj = mg.quotient_by_congruence(a2, mg.congruence_closure(a2, [], "two-sided"))
    assert mg.is_isomorphic(quo, a2) and proj.is_injective


def test_quotient_a2_by_a_equals_z_is_b2():
    a2 = zoo.a2()
    quo, proj = mg.quotient_by_congruence(
        a2, mg.congruence_closure(a2, [(a2.index("a"), a2.index("z"))], "two-sided")
    )
    assert quo.size == 2 and mg.is_isomorphic(quo, zoo.b2())
    assert proj.map[a2.index("a")] == proj.map[a2.index("z")]


def test_quotient_b2_collapse_is_trivial():
    b2 = zoo.b2()
    quo, _ = mg.quotient_by_congruence(b2, mg.congruence_closure(b2, [(0, 1)], "two-sided"))
    assert mg.is_isomorphic(quo, zoo.trivial())


@pytest.mark.parametrize("pairs", [[(0, 1)], [(1, 2)], [(0, 2), (1, 2)]])
def test_quotient_universal_property_brute_force(pairs):
    """Every hom killing the generating pairs factors uniquely through the
    projection (checked against all homs into small fixtures)."""
    m = zoo.a2()
    cong = mg.congruence_closure(m, pairs, "two-sided")
    quo, proj = mg.quotient_by_congruence(m, cong)
    for target in [zoo.trivial(), zoo.cyclic(2), zoo.b2(), zoo.a2(), zoo.chain(3)]:
        for h in mg.enumerate_semigroup_homs(m, target):
            if any(h.map[a] != h.map[b] for a, b in pairs):
                continue
            factorizations = [
                k for k in mg.enumerate_semigroup_homs(quo, target)
                if mg.compose_homs(k, proj).map == h.map
            ]
            assert len(factorizations) == 1


# ---------------------------------------------------------------------------
# idempotent completion


def test_completion_of_group_has_one_object():
    comp = mg.idempotent_completion(zoo.cyclic(2))
    assert len(comp.category.objects) == 1
    assert len(comp.category.arrows) == 2


def test_completion_b2_hom_sets():
    b2 = zoo.b2()
    comp = mg.idempotent_completion(b2)
    cat = comp.category
    one, zero = 0, 1  # object order follows idempotent element order
    assert comp.object_element == (b2.index("1"), b2.index("0"))
    labels = lambda pair: sorted(cat.arrows[i].label for i in cat.hom(*pair))  # noqa: E731
    assert labels((one, one)) == ["0", "1"]
    assert labels((zero, zero)) == ["0"]
    assert labels((one, zero)) == ["0"]
    assert labels((zero, one)) == ["0"]


def test_completion_a2_hom_sets():
    a2 = zoo.a2()
    cat = mg.idempotent_completion(a2).category
    labels = lambda pair: sorted(cat.arrows[i].label for i in cat.hom(*pair))  # noqa: E731
    assert labels((0, 0)) == ["1", "a", "z"]
    assert labels((1, 1)) == ["z"]
    assert labels((0, 1)) == ["z"]
    assert labels((1, 0)) == ["z"]


def test_completion_is_idempotent_complete_and_embedding_fully_faithful(small_fixtures):
    for m in small_fixtures:
        comp = mg.idempotent_completion(m)
        assert mg.is_idempotent_complete(comp.category)
        props = mg.functor_properties(comp.embedding)
        assert props.full and props.faithful


def test_collapsing_object_of_completion_recovers_monoid(small_fixtures):
    for m in small_fixtures:
        found = mg.find_collapsing_object(mg.idempotent_completion(m).category)
        assert found is not None
        _, end_monoid, _ = found
        assert mg.is_isomorphic(end_monoid, m)


def test_one_object_b2_category_is_not_idempotent_complete():
    from monoidgeom.core import one_object_category

    assert not mg.is_idempotent_complete(one_object_category(zoo.b2()))
    assert mg.is_idempotent_complete(one_object_category(zoo.cyclic(3)))


def test_two_object_discrete_category_has_no_collapsing_object():
    from monoidgeom.core import Arrow, FiniteCategory

    cat = FiniteCategory(
        ("x", "y"),
        (Arrow("1x", 0, 0), Arrow("1y", 1, 1)),
        {(0, 0): 0, (1, 1): 1},
        (0, 1),
    )
    cat.validate()
    assert mg.find_collapsing_object(cat) is None


# ---------------------------------------------------------------------------
# lifted functors


def test_lift_identity_hom_is_identity_functor():
    b2 = zoo.b2()
    fun = mg.lift_hom_to_completion(mg.identity_hom(b2))
    assert fun.object_map == tuple(range(len(fun.source.objects)))
    assert fun.arrow_map == tuple(range(len(fun.source.arrows)))


def test_lift_iota_b_sends_object_to_zero_corner():
    fun = mg.lift_hom_to_completion(zoo.iota_b2())
    comp_n = mg.idempotent_completion(zoo.b2())
    assert fun.object_map == (comp_n.object_of_idempotent(zoo.b2().index("0")),)
    props = mg.functor_properties(fun)
    assert props.full and props.faithful and not props.ess_surj_retracts


def test_functor_properties_incl_c2():
    props = mg.functor_properties(mg.lift_hom_to_completion(zoo.incl_c2()))
    assert (props.full, props.faithful, props.ess_surj_retracts) == (False, True, True)


def test_functor_properties_q_a2():
    props = mg.functor_properties(mg.lift_hom_to_completion(zoo.q_a2()))
    assert (props.full, props.faithful, props.ess_surj_retracts) == (True, False, True)


def test_functor_properties_of_quotient_and_injective_homs(small_fixtures):
    for m in small_fixtures:
        for target in small_fixtures:
            for h in mg.enumerate_semigroup_homs(m, target):
                props = mg.functor_properties(mg.lift_hom_to_completion(h))
                if h.is_surjective and h.is_monoid_hom:
                    assert props.full and props.ess_surj_retracts
                if h.is_injective:
                    assert props.faithful


# ---------------------------------------------------------------------------
# hom enumeration and isomorphism


def test_enumerate_homs_counts():
    assert len(mg.enumerate_semigroup_homs(zoo.trivial(), zoo.b2())) == 2
    assert len(mg.enumerate_semigroup_homs(zoo.cyclic(2), zoo.cyclic(2))) == 2
    assert len(mg.enumerate_semigroup_homs(zoo.trivial(), zoo.chain(3))) == 3
    assert len(mg.enumerate_monoid_homs(zoo.klein(), zoo.klein())) == 16


def test_isomorphism_detects_and_rejects():
    assert mg.is_isomorphic(zoo.cyclic(4), zoo.cyclic(4))
    assert not mg.is_isomorphic(zoo.cyclic(4), zoo.klein())
    assert not mg.is_isomorphic(zoo.b2(), zoo.cyclic(2))


@given(st.sampled_from(zoo.fixtures_upto(4)), st.data())
def test_congruence_closure_is_a_congruence(m, data):
    k = data.draw(st.integers(0, 2))
    pairs = [
        (data.draw(st.integers(0, m.size - 1)), data.draw(st.integers(0, m.size - 1)))
        for _ in range(k)
    ]
    from monoidgeom.core import is_congruence

    for side in ("left", "right", "two-sided"):
        c = mg.congruence_closure(m, pairs, side)
        assert is_congruence(m, c.partition, side) is None
        for a, b in pairs:
            assert c.same(a, b)
