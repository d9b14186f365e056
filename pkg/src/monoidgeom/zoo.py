"""Small named monoids and homs used throughout the tests, scripts and docs."""

from __future__ import annotations

from functools import lru_cache

from .core import FiniteMonoid, SemigroupHom, hom_by_labels, validate_monoid


@lru_cache(maxsize=None)
def trivial() -> FiniteMonoid:
    return validate_monoid(["1"], "1", [["1"]], "T1")


@lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteMonoid:
    labels = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    table = [[labels[(i + j) % n] for j in range(n)] for i in range(n)]
    return validate_monoid(labels, "1", table, f"C{n}")


@lru_cache(maxsize=None)
def klein() -> FiniteMonoid:
    labels = ["1", "a", "b", "ab"]
    idx = {l: i for i, l in enumerate(labels)}
    xor = lambda i, j: labels[i ^ j]  # noqa: E731  (bitmask group structure)
    table = [[xor(idx[x], idx[y]) for y in labels] for x in labels]
    return validate_monoid(labels, "1", table, "C2xC2")


@lru_cache(maxsize=None)
def chain(n: int) -> FiniteMonoid:
    """The n-element chain semilattice 1 > e1 > ... > 0, product = min."""
    if n < 1:
        raise ValueError("chain needs at least one element")
    labels = ["1"] + [f"e{k}" for k in range(1, n - 1)] + (["0"] if n > 1 else [])
    table = [[labels[max(i, j)] for j in range(n)] for i in range(n)]
    return validate_monoid(labels, "1", table, f"CH{n}")


@lru_cache(maxsize=None)
def b2() -> FiniteMonoid:
    """The multiplicative monoid {1, 0} (0 absorbing); also the 2-chain."""
    return validate_monoid(["1", "0"], "1", [["1", "0"], ["0", "0"]], "B2")


@lru_cache(maxsize=None)
def a2() -> FiniteMonoid:
    """{1, a, z} with a.a = z and z absorbing; the monogenic monoid a^3 = a^2."""
    return validate_monoid(
        ["1", "a", "z"],
        "1",
        [["1", "a", "z"], ["a", "z", "z"], ["z", "z", "z"]],
        "A2",
    )


@lru_cache(maxsize=None)
def left_zero_adjoined() -> FiniteMonoid:
    """{1, a, b} with xy = x on {a, b}: a left-zero semigroup with identity."""
    return validate_monoid(
        ["1", "a", "b"],
        "1",
        [["1", "a", "b"], ["a", "a", "a"], ["b", "b", "b"]],
        "LZ2+1",
    )


@lru_cache(maxsize=None)
def sym3() -> FiniteMonoid:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    labels = ["1", "r", "rr", "s", "sr", "srr"]

    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(3))

    table = [[labels[perms.index(compose(p, q))] for q in perms] for p in perms]
    return validate_monoid(labels, "1", table, "S3")


def product_monoid(m: FiniteMonoid, n: FiniteMonoid, name: str = "") -> FiniteMonoid:
    labels = [f"({a},{b})" for a in m.elements for b in n.elements]

    def idx(i: int, j: int) -> int:
        return i * n.size + j

    table = [
        [
            labels[idx(m.table[i1][i2], n.table[j1][j2])]
            for i2 in range(m.size)
            for j2 in range(n.size)
        ]
        for i1 in range(m.size)
        for j1 in range(n.size)
    ]
    return validate_monoid(labels, f"({m.label(m.identity)},{n.label(n.identity)})", table, name or f"{m.name}x{n.name}")


# -- named homs ---------------------------------------------------------------


def incl_c2() -> SemigroupHom:
    """The trivial subgroup of C2."""
    return hom_by_labels(trivial(), cyclic(2), {"1": "1"}, "incl_C2")


def iota_b2() -> SemigroupHom:
    """The point of the B2 topos given by the idempotent 0."""
    return hom_by_labels(trivial(), b2(), {"1": "0"}, "iota_B")


def q_a2() -> SemigroupHom:
    """The quotient A2 -> B2 collapsing a and z."""
    return hom_by_labels(a2(), b2(), {"1": "1", "a": "0", "z": "0"}, "q_A")


def psi_b2() -> SemigroupHom:
    """B2 into the 3-chain, 0 to the bottom."""
    return hom_by_labels(b2(), chain(3), {"1": "1", "0": "0"}, "psi_B")


def incl_c2_klein() -> SemigroupHom:
    """C2 as the first factor of C2 x C2."""
    return hom_by_labels(cyclic(2), klein(), {"1": "1", "g": "a"}, "incl_C2xC2")


def fixtures_upto(max_size: int) -> list[FiniteMonoid]:
    pool = [
        trivial(),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        cyclic(5),
        klein(),
        b2(),
        a2(),
        chain(3),
        chain(4),
        left_zero_adjoined(),
        sym3(),
    ]
    return [m for m in pool if m.size <= max_size]


def hom_fixtures() -> list[SemigroupHom]:
    return [incl_c2(), iota_b2(), q_a2(), psi_b2(), incl_c2_klein()]


def group_fixtures_upto(max_size: int) -> list[FiniteMonoid]:
    pool = [trivial(), cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6), klein(), sym3()]
    return [g for g in pool if g.size <= max_size]
