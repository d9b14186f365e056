"""Shared fixtures: the monoid zoo, deterministic random monoids and homs,
and brute-force oracles kept independent of the library code paths they check."""

from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import settings

from monoidgeom import FiniteMonoid, SemigroupHom, enumerate_semigroup_homs
from monoidgeom import zoo

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")


# ---------------------------------------------------------------------------
# deterministic random monoids (submonoids of the transformation monoid on
# a few points, closed under composition)


def transformation_monoid(gens: list[tuple[int, ...]], points: int, name: str) -> FiniteMonoid:
    ident = tuple(range(points))
    elems = [ident]
    seen = {ident}
    qi = 0
    while qi < len(elems):
        f = elems[qi]
        qi += 1
        for g in gens:
            for h in ((tuple(f[g[i]] for i in range(points))), (tuple(g[f[i]] for i in range(points)))):
                if h not in seen:
                    seen.add(h)
                    elems.append(h)
    elems = sorted(seen)
    labels = tuple(f"t{i}" for i in range(len(elems)))
    pos = {f: i for i, f in enumerate(elems)}
    table = tuple(
        tuple(pos[tuple(f[g[i]] for i in range(points))] for g in elems) for f in elems
    )
    return FiniteMonoid(name, labels, pos[ident], table)


def random_monoid_pool(seed: int, count: int, max_size: int, points: int = 3) -> list[FiniteMonoid]:
    rng = random.Random(seed)
    pool: list[FiniteMonoid] = []
    attempts = 0
    while len(pool) < count and attempts < 10_000:
        attempts += 1
        gens = [
            tuple(rng.randrange(points) for _ in range(points))
            for _ in range(rng.randint(1, 2))
        ]
        m = transformation_monoid(gens, points, f"R{seed}.{len(pool)}")
        if 1 < m.size <= max_size:
            pool.append(m)
    return pool


def random_homs(seed: int, count: int, monoids: list[FiniteMonoid]) -> list[SemigroupHom]:
    rng = random.Random(seed)
    out: list[SemigroupHom] = []
    while len(out) < count:
        m = rng.choice(monoids)
        n = rng.choice(monoids)
        homs = enumerate_semigroup_homs(m, n)
        if homs:
            out.append(rng.choice(homs))
    return out


# ---------------------------------------------------------------------------
# independent oracles


def oracle_factorable_closure(m: FiniteMonoid, seed: set[int], side: str) -> set[int]:
    """Exhaustive oracle: the intersection of all factorable submonoids
    containing the seed, found by scanning every subset of the monoid."""
    best: set[int] | None = None
    n = m.size
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if not seed <= s or m.identity not in s:
            continue
        if not all(m.table[x][y] in s for x in s for y in s):
            continue
        if side == "right":
            ok = all(m.table[x][y] not in s or y in s for x in s for y in range(n))
        else:
            ok = all(m.table[y][x] not in s or y in s for x in s for y in range(n))
        if ok and (best is None or len(s) < len(best)):
            best = s
    assert best is not None
    return best


def oracle_equivariant_maps(x, y) -> list[tuple[int, ...]]:
    """Every equivariant map between two right actions, by full enumeration."""
    assert x.monoid == y.monoid
    out = []
    for cand in product(range(y.size), repeat=x.size):
        if all(
            cand[x.table[v][g]] == y.table[cand[v]][g]
            for v in range(x.size)
            for g in range(x.monoid.size)
        ):
            out.append(cand)
    return out


def oracle_has_regular_retract(x) -> bool:
    """Exhaustive search for a section/retraction pair with the regular action."""
    from monoidgeom import regular_right

    reg = regular_right(x.monoid)
    sections = oracle_equivariant_maps(reg, x)
    retractions = oracle_equivariant_maps(x, reg)
    return any(
        all(r[s[g]] == g for g in range(x.monoid.size)) for s in sections for r in retractions
    )


@pytest.fixture(scope="session")
def small_fixtures():
    return zoo.fixtures_upto(4)


@pytest.fixture(scope="session")
def hom_fixtures():
    return zoo.hom_fixtures()
