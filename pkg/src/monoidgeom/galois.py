"""Groupification and the classification of locally constant etale morphisms.

For a finite monoid the universal group quotient is the quotient by the
two-sided congruence identifying every idempotent with 1: each element has
an idempotent power, so all classes become invertible, and any hom into a
group kills idempotents, so it factors (uniquely, the projection being
surjective) through the quotient. The classification then runs over the
subgroups of that group that meet the invertible-translation condition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import RightAction, regular_right
from .classify import classify_hom
from .core import (
    FiniteMonoid,
    Partition,
    SemigroupHom,
    congruence_closure,
    idempotents,
    invertibles,
    quotient_by_congruence,
    submonoid,
)
from .actions import quotient_right_action
from .errors import NotAGroup, SizeCap


@dataclass
class Groupification:
    monoid: FiniteMonoid
    group: FiniteMonoid
    eta: SemigroupHom  # surjective monoid hom onto the group


def groupification(n: FiniteMonoid) -> Groupification:
    """The universal group receiving a monoid hom from N, computed as the
    quotient by the idempotent-killing congruence."""
    pairs = [(e, n.identity) for e in idempotents(n)]
    cong = congruence_closure(n, pairs, "two-sided")
    grp, eta = quotient_by_congruence(n, cong)
    grp = grp.renamed(f"pi1({n.name})")
    eta = SemigroupHom(n, grp, eta.map, f"eta_{n.name}")
    if not grp.is_group():
        raise AssertionError(f"idempotent-kill quotient of {n.name} is not a group")
    return Groupification(n, grp, eta)


def subgroups(g: FiniteMonoid, cap: int = 24) -> list[tuple[int, ...]]:
    """All subgroups, as sorted element tuples, by closure of generator sets.
    In a finite group multiplicative closure already yields inverses."""
    if not g.is_group():
        bad = next(v for v in range(g.size) if v not in invertibles(g, "right"))
        raise NotAGroup(g.label(bad))
    if g.size > cap:
        raise SizeCap("subgroup enumeration", cap)

    def close(seed: frozenset[int]) -> frozenset[int]:
        out = set(seed) | {g.identity}
        frontier = list(out)
        while frontier:
            x = frontier.pop()
            for y in list(out):
                for p in (g.mul(x, y), g.mul(y, x)):
                    if p not in out:
                        out.add(p)
                        frontier.append(p)
        return frozenset(out)

    found = {frozenset({g.identity})}
    frontier = [frozenset({g.identity})]
    while frontier:
        nxt = []
        for h in frontier:
            for v in range(g.size):
                if v in h:
                    continue
                k = close(h | {v})
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        frontier = nxt
    return sorted((tuple(sorted(h)) for h in found), key=lambda t: (len(t), t))


@dataclass
class LcEtaleEntry:
    subgroup: tuple[int, ...]  # element indices in the groupification
    monoid: FiniteMonoid  # the preimage of the subgroup
    hom: SemigroupHom  # its inclusion into N
    condition_witnesses: dict[str, str]  # y |-> u with y.u in the subgroup


@dataclass
class LcEtaleClassification:
    groupification: Groupification
    entries: list[LcEtaleEntry]


def coset_action(g: FiniteMonoid, subgroup: tuple[int, ...]) -> RightAction:
    """The right coset space H\\G as a right G-set (quotient of the regular
    action by the orbit partition of left multiplication by H)."""
    hset = set(subgroup)
    raw = [-1] * g.size
    nxt = 0
    for y in range(g.size):
        if raw[y] != -1:
            continue
        for h in hset:
            raw[g.mul(h, y)] = nxt
        nxt += 1
    return quotient_right_action(regular_right(g), Partition.normalized(raw), f"H\\{g.name}")


def pullback_action(x: RightAction, eta: SemigroupHom) -> RightAction:
    """Restrict a right action along a hom into its monoid."""
    if x.monoid != eta.codomain:
        raise NotAGroup(x.monoid.name)
    table = tuple(tuple(x.table[v][eta.map[m]] for m in range(eta.domain.size)) for v in range(x.size))
    return RightAction(eta.domain, x.carrier, table, f"{x.name} along {eta.describe()}")


def classify_lc_etale(n: FiniteMonoid, subgroup_cap: int = 24) -> LcEtaleClassification:
    """All locally constant etale morphisms into the topos of N, one per
    subgroup H of the groupification such that every group element can be
    right-translated into H by the image of an invertible of N. Each entry
    is the inclusion of the preimage monoid, cross-checked against the
    hom classifier's locally-constant-etale verdict."""
    gp = groupification(n)
    g = gp.group
    unit_image = sorted({gp.eta.map[u] for u in invertibles(n, "right")})
    entries: list[LcEtaleEntry] = []
    for sub in subgroups(g, subgroup_cap):
        hset = set(sub)
        witnesses: dict[str, str] = {}
        ok = True
        for y in range(g.size):
            u = next((u for u in unit_image if g.mul(y, u) in hset), None)
            if u is None:
                ok = False
                break
            witnesses[g.label(y)] = g.label(u)
        if not ok:
            continue
        preimage = [v for v in range(n.size) if gp.eta.map[v] in hset]
        mon, incl = submonoid(n, preimage, f"eta^-1({'{' + ','.join(g.labels(sub)) + '}'})")
        verdict = classify_hom(incl)
        if verdict.value("locally_constant_etale") is not True:
            raise AssertionError(
                f"classification entry for subgroup {g.labels(sub)} of {g.name} fails the hom check"
            )
        entries.append(LcEtaleEntry(sub, mon, incl, witnesses))
    return LcEtaleClassification(gp, entries)
