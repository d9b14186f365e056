"""Classification of homs and biactions, the implication lattice, congruence
enumeration, and undecided-at-scale outcomes."""

from __future__ import annotations

import pytest

import monoidgeom as mg
from monoidgeom import zoo
from monoidgeom.actions import BiAction
from monoidgeom.classify import IMPLICATIONS, PROPERTIES, ClassifyOptions
from monoidgeom.errors import NotFlat


def values(report):
    return {p: v.value for p, v in report.entries.items()}


# ---------------------------------------------------------------------------
# the worked hom examples


def test_classify_incl_c2():
    got = values(mg.classify_hom(zoo.incl_c2()))
    assert got["etale"] is True
    assert got["complete_spread"] is True
    assert got["locally_constant_etale"] is True
    assert got["terminal_connected"] is False
    assert got["pure"] is False
    assert got["localic"] is True
    assert got["inclusion"] is False
    assert got["surjection"] is True


def test_classify_q_a2():
    got = values(mg.classify_hom(zoo.q_a2()))
    assert got["hyperconnected"] is True
    assert got["surjection"] is True
    assert got["localic"] is False
    assert got["etale"] is False


def test_classify_iota_b2():
    got = values(mg.classify_hom(zoo.iota_b2()))
    assert got["terminal_connected"] is True
    assert got["surjection"] is False
    assert got["inclusion"] is True
    assert got["etale"] is False


def test_classify_group_inclusions_are_lc_etale():
    for h in [zoo.incl_c2(), zoo.incl_c2_klein()]:
        got = values(mg.classify_hom(h))
        assert got["etale"] and got["complete_spread"] and got["locally_constant_etale"]


def test_monoid_homs_are_surjections(small_fixtures):
    for m in small_fixtures:
        for n in small_fixtures:
            for h in mg.enumerate_monoid_homs(m, n):
                assert mg.classify_hom(h).value("surjection") is True


def test_reports_respect_the_implication_lattice(small_fixtures):
    for m in small_fixtures:
        for n in small_fixtures:
            for h in mg.enumerate_semigroup_homs(m, n)[:8]:
                report = mg.classify_hom(h)
                got = values(report)
                for p, q in IMPLICATIONS:
                    assert not (got[p] is True and got[q] is False), (h.describe(), p, q)
                assert got["locally_constant_etale"] == (got["etale"] and got["complete_spread"])
                assert got["dominant"] is True and got["essential"] is True
                assert set(got) == set(PROPERTIES)


def test_lc_etale_matches_direct_two_sided_criterion(small_fixtures):
    """Cross-check the composed verdict against the one-shot criterion:
    injective, image factorable on both sides, both translations."""
    from monoidgeom.closures import is_factorable_subset
    from monoidgeom.core import corner, invertibles, is_morita_corner

    for m in small_fixtures:
        for n in small_fixtures:
            for h in mg.enumerate_semigroup_homs(m, n)[:8]:
                e = h.image_of_identity
                cmon, cincl = corner(n, e)
                back = {v: i for i, v in enumerate(cincl.map)}
                img = {back[v] for v in h.map}
                direct = (
                    is_morita_corner(n, e).value
                    and h.is_injective
                    and is_factorable_subset(cmon, img, "right")
                    and is_factorable_subset(cmon, img, "left")
                    and all(
                        any(cmon.mul(v, u) in img for u in invertibles(cmon, "right"))
                        for v in range(cmon.size)
                    )
                    and all(
                        any(cmon.mul(u, v) in img for u in invertibles(cmon, "left"))
                        for v in range(cmon.size)
                    )
                )
                assert mg.classify_hom(h).value("locally_constant_etale") == direct


# ---------------------------------------------------------------------------
# duality (spot checks; the acceptance suite sweeps)


def test_duality_tc_pure_and_etale_cs(hom_fixtures):
    for h in hom_fixtures:
        r = mg.classify_hom(h)
        r_op = mg.classify_hom(mg.opposite_hom(h))
        assert r.value("terminal_connected") == r_op.value("pure")
        assert r.value("pure") == r_op.value("terminal_connected")
        assert r.value("etale") == r_op.value("complete_spread")
        assert r.value("complete_spread") == r_op.value("etale")


# ---------------------------------------------------------------------------
# congruence enumeration


def test_right_congruence_counts():
    assert len(mg.enumerate_right_congruences(zoo.trivial(), 1)) == 1
    assert len(mg.enumerate_right_congruences(zoo.cyclic(2), 1)) == 2
    assert len(mg.enumerate_right_congruences(zoo.b2(), 1)) == 2


def test_right_congruences_are_compatible():
    for n in [zoo.b2(), zoo.a2(), zoo.chain(3)]:
        for c in mg.enumerate_right_congruences(n, 1):
            for x in range(n.size):
                for y in range(n.size):
                    if c.same(x, y):
                        for g in range(n.size):
                            assert c.same(n.mul(x, g), n.mul(y, g))


def test_right_congruence_cap():
    from monoidgeom.errors import SizeCap

    with pytest.raises(SizeCap):
        mg.enumerate_right_congruences(zoo.cyclic(6), 1, cap=5)


# ---------------------------------------------------------------------------
# biaction classification


def test_classify_biact_identity_b2_all_true():
    got = values(mg.classify_biact(mg.hom_to_biact(mg.identity_hom(zoo.b2()))))
    for p in ("pure", "injection", "surjection", "hyperconnected", "localic", "essential"):
        assert got[p] is True, p


def test_classify_biact_incl_c2():
    got = values(mg.classify_biact(mg.hom_to_biact(zoo.incl_c2())))
    assert got["pure"] is False  # two components
    assert got["injection"] is True


def test_classify_biact_regular_b2_over_trivial_right():
    """The biaction of the monoid hom T1 -> B2 at the identity: B2 with
    trivial right action. Terminal-connectedness fails (the discrete
    principal act separates), purity fails, injection holds."""
    b2 = zoo.b2()
    h = mg.hom_by_labels(zoo.trivial(), b2, {"1": "1"})
    a = mg.hom_to_biact(h)
    got = values(mg.classify_biact(a))
    assert got["terminal_connected"] is False
    assert got["pure"] is False
    assert got["injection"] is True
    hom_got = values(mg.classify_hom(h))
    assert hom_got["terminal_connected"] is False


def test_essential_recognition_recovers_hom(hom_fixtures):
    from monoidgeom.classify import recognize_essential

    for h in hom_fixtures:
        a = mg.hom_to_biact(h)
        witness = recognize_essential(a)
        assert witness is not None
        assert mg.find_biaction_iso(mg.hom_to_biact(witness.hom), a) is not None


def test_classify_biact_agrees_with_hom(hom_fixtures):
    shared = ("pure", "injection", "spread", "localic", "surjection", "hyperconnected", "terminal_connected")
    for h in hom_fixtures:
        rb = mg.classify_biact(mg.hom_to_biact(h), ClassifyOptions(congruence_cap=4))
        rh = mg.classify_hom(h)
        for p in shared:
            assert rb.value(p) == rh.value(p), (h.describe(), p)


def test_classify_biact_undecided_at_scale():
    a = mg.hom_to_biact(mg.identity_hom(zoo.cyclic(6)))
    report = mg.classify_biact(a, ClassifyOptions(congruence_cap=5))
    undecided = report.undecided_properties()
    assert "surjection" in undecided and "terminal_connected" in undecided
    assert "hyperconnected" in undecided
    # decidable entries are still decided
    assert report.value("pure") is True
    assert report.value("essential") is True


def test_classify_biact_rejects_non_flat():
    c2 = zoo.cyclic(2)
    point = BiAction(c2, zoo.trivial(), ("*",), ((0, 0),), ((0,),))
    with pytest.raises(NotFlat) as err:
        mg.classify_biact(point)
    assert err.value.condition == 3


def test_classify_biact_non_group_point_is_flat_and_classified():
    b2 = zoo.b2()
    point = BiAction(b2, zoo.trivial(), ("*",), ((0, 0),), ((0,),))
    got = values(mg.classify_biact(point))
    assert got["essential"] is True  # the point at the idempotent 0
    assert got["terminal_connected"] is True
    assert got["surjection"] is False


def test_report_json_shape():
    report = mg.classify_hom(zoo.incl_c2())
    data = report.to_json()
    assert list(data["properties"]) == list(PROPERTIES)
    for p in PROPERTIES:
        assert set(data["properties"][p]) == {"value", "method", "certificate"}


def test_classify_biact_deadline_reports_undecided():
    import time as time_mod

    a = mg.hom_to_biact(mg.identity_hom(zoo.klein()))
    opts = ClassifyOptions(congruence_cap=5, deadline=time_mod.monotonic())  # already expired
    report = mg.classify_biact(a, opts)
    assert report.value("surjection") == "undecided"
    assert report.value("terminal_connected") == "undecided"
    # untimed properties are still decided
    assert report.value("pure") is True


def test_pure_inclusion_coherence(hom_fixtures):
    """pure and injection verdicts coincide with connectedness of the
    inducing act plus the regular retract, exactly."""
    for h in hom_fixtures:
        a = mg.hom_to_biact(h)
        rb = mg.classify_biact(a)
        connected = mg.components(a.as_right()).num_classes == 1
        retract = mg.find_regular_retract(a.as_right()) is not None
        assert (rb.value("pure") and rb.value("injection")) == (connected and retract)


def test_underlying_set_and_constant_action():
    m = zoo.b2()
    x = mg.constant_action(m, ["p", "q"])
    assert mg.underlying_set(x) == ("p", "q")
    assert mg.underlying_set(mg.constant_action(m, [])) == ()
