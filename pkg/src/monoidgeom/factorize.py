"""Explicit factorizations of the geometric morphisms induced by semigroup
homs and biactions: (surjection, inclusion), (hyperconnected, localic), the
combined three-part chain, (terminal-connected, etale), and its dual
(pure, complete spread).

The terminal-connected/etale chain is materialized over the idempotent
completion of the codomain, so the two intermediate submonoids are visible
as endomorphism monoids of the two distinguished objects of the category of
elements; this is cross-checked against the factorable closures every time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .actions import (
    BiAction,
    CompletionElementsCategory,
    LeftAction,
    RightAction,
    co_category_of_elements,
    components,
    is_flat,
    left_to_right,
    strong_generators,
    strong_generators_left,
)
from .classify import classify_hom
from .closures import factorable_closure
from .core import (
    FiniteCategory,
    FiniteMonoid,
    SemigroupHom,
    compose_homs,
    corner,
    factor_through,
    find_collapsing_object,
    hom_between_subsets,
    kernel_congruence,
    opposite,
    opposite_hom,
    quotient_by_congruence,
    submonoid,
)
from .errors import BadAction, NotFlat
from .tensor import TerminalPushforward, pushforward_terminal
from .actions import elements_over_completion


# ---------------------------------------------------------------------------
# (surjection, inclusion) / (hyperconnected, localic) / three parts


@dataclass
class ThreePartFactorization:
    """hom = iota . psi . pi with pi the quotient onto the image (the
    hyperconnected part), psi an injective monoid hom into the corner (the
    localic surjection part), and iota the corner inclusion (the inclusion
    part)."""

    hom: SemigroupHom
    quotient: FiniteMonoid
    corner_monoid: FiniteMonoid
    pi: SemigroupHom
    psi: SemigroupHom
    iota: SemigroupHom

    def surjection_part(self) -> SemigroupHom:
        return compose_homs(self.psi, self.pi)

    def localic_part(self) -> SemigroupHom:
        return compose_homs(self.iota, self.psi)

    def composite(self) -> SemigroupHom:
        return compose_homs(self.iota, compose_homs(self.psi, self.pi))


def factor_three(h: SemigroupHom) -> ThreePartFactorization:
    m, n = h.domain, h.codomain
    cong = kernel_congruence(h)
    quo, pi = quotient_by_congruence(m, cong)
    cmon, iota = corner(n, h.image_of_identity)
    reps = cong.partition.representatives()
    back = {v: i for i, v in enumerate(iota.map)}
    psi = SemigroupHom(quo, cmon, tuple(back[h.map[r]] for r in reps), f"{quo.name} into {cmon.name}")
    out = ThreePartFactorization(h, quo, cmon, pi, psi, iota)
    if out.composite().map != h.map:
        raise AssertionError("three-part factorization does not compose to the input hom")
    if not psi.is_injective or not psi.is_monoid_hom or not pi.is_surjective:
        raise AssertionError("three-part factorization has the wrong shape")
    return out


# ---------------------------------------------------------------------------
# (terminal-connected, etale)


@dataclass
class TcEtaleFactorization:
    """The chain M -> D -> E -> elements(pushforward of the terminal object)
    -> N, where D and E are the right-factorable closures of the image in the
    corner and in the codomain. k and j1 are terminal-connected by the
    closure criterion; the last step is etale. When the category of elements
    collapses onto a single object, the etale part is presented by a monoid
    and its hom into the codomain."""

    hom: SemigroupHom
    corner_closure: FiniteMonoid  # right-factorable closure of the image in eNe
    closure: FiniteMonoid  # right-factorable closure of the image in N
    k: SemigroupHom  # M -> corner_closure (monoid hom)
    j1: SemigroupHom  # corner_closure -> closure
    corner_closure_inclusion: SemigroupHom  # corner_closure -> N
    closure_inclusion: SemigroupHom  # closure -> N
    slice_object: TerminalPushforward
    elements_category: CompletionElementsCategory
    corner_object: int  # the object (e, * (x) e)
    unit_object: int  # the object (1, * (x) e)
    slice_monoid: Optional[FiniteMonoid]
    slice_hom: Optional[SemigroupHom]


def factor_tc_etale(h: SemigroupHom) -> TcEtaleFactorization:
    m, n = h.domain, h.codomain
    e = h.image_of_identity
    image = sorted(set(h.map))

    cmon, cincl = corner(n, e)
    back = {v: i for i, v in enumerate(cincl.map)}
    img_in_corner = sorted({back[v] for v in h.map})

    e_set = factorable_closure(n, image, "right", want_trace=False).closure
    emon, eincl = submonoid(n, e_set, f"{n.name}.rfcl")
    d_set_corner = factorable_closure(cmon, img_in_corner, "right", want_trace=False).closure
    dmon, dincl_c = submonoid(cmon, d_set_corner, f"{cmon.name}.rfcl")
    dincl = compose_homs(cincl, dincl_c)

    # the corner closure is the corner of the big closure: D = e E e
    eEe = {n.mul(n.mul(e, v), e) for v in eincl.map}
    if eEe != set(dincl.map):
        raise AssertionError("corner closure differs from the corner of the closure")

    k = factor_through(h, dincl)
    if not k.is_monoid_hom:
        raise AssertionError("terminal-connected surjection part must be a monoid hom")
    j1 = hom_between_subsets((dmon, dincl), (emon, eincl))

    slice_obj = pushforward_terminal(h)
    ec = elements_over_completion(n, slice_obj.action)
    base_class = slice_obj.class_of(n.identity)
    corner_object = ec.locate(e, base_class)
    unit_object = ec.locate(n.identity, base_class)

    # the two distinguished endomorphism monoids are exactly the closures
    d_end, _ = ec.category.endomorphism_monoid(corner_object)
    e_end, _ = ec.category.endomorphism_monoid(unit_object)
    if set(d_end.elements) != set(dmon.elements) or set(e_end.elements) != set(emon.elements):
        raise AssertionError("elements-category endomorphisms disagree with the closures")

    collapsed = find_collapsing_object(ec.category)
    slice_monoid = None
    slice_hom = None
    if collapsed is not None:
        _, mon, endo_arrows = collapsed
        slice_monoid = mon
        slice_hom = SemigroupHom(
            mon, n, tuple(ec.arrow_element[ai] for ai in endo_arrows), f"{mon.name} into {n.name}"
        )

    return TcEtaleFactorization(
        h,
        dmon,
        emon,
        k,
        j1,
        dincl,
        eincl,
        slice_obj,
        ec,
        corner_object,
        unit_object,
        slice_monoid,
        slice_hom,
    )


# ---------------------------------------------------------------------------
# (pure, complete spread)


@dataclass
class PureCsFactorization:
    """Dual of the terminal-connected/etale chain, via left-factorable
    closures and the left action of the codomain on N.e (x)_M 1 (for homs) or
    on the components of the biaction (in general). For biactions the
    intermediate topos is presented by a monoid exactly when the components
    object has a strong generator; then the pure part is the component
    biaction over the stabilizer monoid and the complete spread part is the
    stabilizer's inclusion."""

    source: str
    corner_closure: Optional[FiniteMonoid]  # left-factorable closure of the image in eNe
    closure: Optional[FiniteMonoid]  # left-factorable closure of the image in N
    k: Optional[SemigroupHom]  # M -> corner_closure
    j1: Optional[SemigroupHom]
    corner_closure_inclusion: Optional[SemigroupHom]
    closure_inclusion: Optional[SemigroupHom]
    components_object: LeftAction
    cos_elements_category: FiniteCategory
    intermediate_monoid: Optional[FiniteMonoid]
    intermediate_hom: Optional[SemigroupHom]  # inclusion into the codomain
    intermediate_biaction: Optional[BiAction]  # biaction case only


def factor_pure_cs_hom(h: SemigroupHom) -> PureCsFactorization:
    """Computed by applying the terminal-connected/etale factorization to the
    opposite hom and transporting everything back through opposites."""
    n = h.codomain
    e = h.image_of_identity
    dual = factor_tc_etale(opposite_hom(h))
    components_object = LeftAction(
        n,
        dual.slice_object.action.carrier,
        dual.slice_object.action.table,
        f"terminal pullback of {h.describe()}",
    )
    cos_cat = dual.elements_category.category.opposite()
    inter_monoid = opposite(dual.slice_monoid) if dual.slice_monoid is not None else None
    inter_hom = opposite_hom(dual.slice_hom) if dual.slice_hom is not None else None
    corner_name = n.name if e == n.identity else f"{n.name}[{n.label(e)}]"
    return PureCsFactorization(
        h.describe(),
        opposite(dual.corner_closure).renamed(f"{corner_name}.lfcl"),
        opposite(dual.closure).renamed(f"{n.name}.lfcl"),
        opposite_hom(dual.k),
        opposite_hom(dual.j1),
        opposite_hom(dual.corner_closure_inclusion),
        opposite_hom(dual.closure_inclusion),
        components_object,
        cos_cat,
        inter_monoid,
        inter_hom,
        None,
    )


def factor_pure_cs_biact(a: BiAction) -> PureCsFactorization:
    n, m = a.left_monoid, a.right_monoid
    flat = is_flat(a.as_left())
    if not flat:
        raise NotFlat(flat.failed_condition or 0, flat.witness)

    comps = components(a.as_right())
    blocks = comps.blocks()
    cls = comps.class_of
    labels = tuple(f"[{a.carrier[block[0]]}]" for block in blocks)
    table = []
    for block in blocks:
        rep = block[0]
        table.append(tuple(cls[a.left_table[rep][g]] for g in range(n.size)))
        for v in block:
            for g in range(n.size):
                if cls[a.left_table[v][g]] != table[-1][g]:
                    raise BadAction("left action descends to components", (a.carrier[v], n.label(g)))
    comp_obj = LeftAction(n, labels, tuple(table), f"components of {a.name or 'biaction'}")

    cos_cat = co_category_of_elements(comp_obj).category

    inter_monoid = None
    inter_hom = None
    inter_biact = None
    sg = strong_generators_left(comp_obj)
    if sg:
        c = sg[0]
        stab = [g for g in range(n.size) if comp_obj.table[c][g] == c]
        inter_monoid, inter_hom = submonoid(n, stab, f"{n.name}.stab({labels[c]})")
        block = blocks[c]
        pos = {v: i for i, v in enumerate(block)}
        left = tuple(tuple(pos[a.left_table[v][g]] for g in inter_hom.map) for v in block)
        right = tuple(tuple(pos[a.right_table[v][g]] for g in range(m.size)) for v in block)
        inter_biact = BiAction(
            inter_monoid,
            m,
            tuple(a.carrier[v] for v in block),
            left,
            right,
            f"{a.name or 'biaction'}|{labels[c]}",
        )
        sub_flat = is_flat(inter_biact.as_left())
        if not sub_flat:
            raise AssertionError("component biaction must be flat over the stabilizer monoid")

    return PureCsFactorization(
        a.name or "biaction",
        None,
        None,
        None,
        None,
        None,
        None,
        comp_obj,
        cos_cat,
        inter_monoid,
        inter_hom,
        inter_biact,
    )


# ---------------------------------------------------------------------------
# slice collapses


@dataclass
class SliceCollapse:
    monoid: FiniteMonoid
    inclusion: SemigroupHom
    generator: int  # carrier index of the chosen strong generator


def collapse_slice(n: FiniteMonoid, x: RightAction) -> Optional[SliceCollapse]:
    """When the right N-set X has a strong generator x, the slice topos over
    X is presented by the stabilizer monoid N_x = {g : x . g = x}, included
    into N; the inclusion induces an etale geometric morphism. The least
    strong generator is chosen; different choices give Morita-equivalent
    (not necessarily isomorphic) monoids."""
    if x.monoid != n:
        raise BadAction("action over the stated monoid", x.monoid.name)
    sg = strong_generators(x)
    if not sg:
        return None
    v = sg[0]
    stab = [g for g in range(n.size) if x.table[v][g] == v]
    mon, incl = submonoid(n, stab, f"{n.name}.stab({x.carrier[v]})")
    return SliceCollapse(mon, incl, v)


def collapse_cos_slice(n: FiniteMonoid, y: LeftAction) -> Optional[SliceCollapse]:
    """Dual of ``collapse_slice`` for left actions; the inclusion of the
    stabilizer N^y = {g : g . y = y} induces a complete spread."""
    res = collapse_slice(opposite(n), left_to_right(y))
    if res is None:
        return None
    return SliceCollapse(opposite(res.monoid), opposite_hom(res.inclusion), res.generator)


# ---------------------------------------------------------------------------
# part classification helpers (used by the CLI and the test-suite)


def classify_three_parts(f: ThreePartFactorization) -> dict[str, Any]:
    return {
        "pi": classify_hom(f.pi),
        "psi": classify_hom(f.psi),
        "iota": classify_hom(f.iota),
    }
