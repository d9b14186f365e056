"""Bounded presentation enumeration: words, rewriting, congruence pass."""

from __future__ import annotations

import pytest

import monoidgeom as mg
from monoidgeom import zoo
from monoidgeom.errors import CapExceeded, ParseError
from monoidgeom.presentations import enumerate_presentation, parse_word, presentation


def test_parse_word():
    assert parse_word("a a b", ("a", "b")) == ("a", "a", "b")
    assert parse_word("", ("a",)) == ()
    assert parse_word("1", ("a",)) == ()


def test_parse_word_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_word("a c", ("a", "b"))
    assert err.value.position == 1


def test_c2_from_presentation():
    m = enumerate_presentation(presentation(["a"], [("a a", "1")], 10))
    assert m.size == 2 and mg.is_isomorphic(m, zoo.cyclic(2))


def test_a2_from_presentation():
    m = enumerate_presentation(presentation(["a"], [("a a a", "a a")], 10))
    assert m.size == 3 and mg.is_isomorphic(m, zoo.a2())


def test_bicyclic_presentation_exceeds_cap():
    with pytest.raises(CapExceeded):
        enumerate_presentation(presentation(["u", "v"], [("u v", "1")], 100))


def test_klein_from_presentation():
    m = enumerate_presentation(
        presentation(["a", "b"], [("a a", "1"), ("b b", "1"), ("a b", "b a")], 50)
    )
    assert mg.is_isomorphic(m, zoo.klein())


def test_free_monoid_on_one_generator_exceeds_cap():
    with pytest.raises(CapExceeded):
        enumerate_presentation(presentation(["a"], [], 20))


def test_enumeration_is_deterministic():
    p = presentation(["a", "b"], [("a a", "a"), ("b b", "b"), ("a b", "b a")], 40)
    m1 = enumerate_presentation(p)
    m2 = enumerate_presentation(p)
    assert m1 == m2


def test_relations_hold_in_the_result():
    p = presentation(["a", "b"], [("a a", "a"), ("b b", "b"), ("a b", "b a")], 40)
    m = enumerate_presentation(p)

    # evaluate both sides of each relation starting from every element
    gens = {g: m.index(g) for g in p.generators}

    def evaluate(start, word):
        v = start
        for tok in word:
            v = m.mul(v, gens[tok])
        return v

    for lhs, rhs in p.relations:
        for v in range(m.size):
            assert evaluate(v, lhs) == evaluate(v, rhs)


def test_universal_property_against_fixture_targets():
    """Any generator assignment into a fixture monoid satisfying the
    relations extends to exactly one hom from the enumerated monoid."""
    from itertools import product as iproduct

    p = presentation(["a"], [("a a a", "a a")], 10)
    m = enumerate_presentation(p)
    for target in [zoo.trivial(), zoo.cyclic(2), zoo.b2(), zoo.a2()]:
        for (img,) in iproduct(range(target.size)):
            # does the assignment a -> img satisfy a^3 = a^2?
            a2_ = target.mul(img, img)
            a3_ = target.mul(a2_, img)
            if a3_ != a2_:
                continue
            extensions = [
                h
                for h in mg.enumerate_semigroup_homs(m, target)
                if h.is_monoid_hom and h.map[m.index("a")] == img
            ]
            assert len(extensions) == 1
