"""Finite monoids, semigroup homomorphisms, congruences, and finite categories.

Everything is index-based: the elements of a monoid are identified by their
position in its ``elements`` tuple and labels are presentation-only, so that
comparison and certificates are canonical. All values are immutable; the
heavier derived structures (idempotent completions, unit groups) are cached
per monoid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import product
from typing import Any, Iterable, Optional, Sequence

from .errors import (
    BadIdentity,
    NonAssociative,
    NotAHomomorphism,
    NotIdempotent,
    UnknownLabel,
    WrongSidedness,
)

Label = str


# ---------------------------------------------------------------------------
# partitions and the saturation engine


@dataclass(frozen=True)
class Partition:
    """A partition of ``range(n)``, with class ids ordered by least member."""

    class_of: tuple[int, ...]

    @staticmethod
    def normalized(raw: Sequence[int]) -> "Partition":
        relabel: dict[int, int] = {}
        out = []
        for c in raw:
            if c not in relabel:
                relabel[c] = len(relabel)
            out.append(relabel[c])
        return Partition(tuple(out))

    @staticmethod
    def discrete(n: int) -> "Partition":
        return Partition(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def same(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return tuple(tuple(b) for b in out)

    def representatives(self) -> tuple[int, ...]:
        reps: list[int] = []
        seen: set[int] = set()
        for x, c in enumerate(self.class_of):
            if c not in seen:
                seen.add(c)
                reps.append(x)
        return tuple(reps)


def equivalence_closure(
    n: int,
    pairs: Iterable[tuple[int, int]],
    consequence_maps: Sequence[Sequence[int]] = (),
) -> Partition:
    """Smallest equivalence relation containing ``pairs`` and closed under
    x ~ y  =>  f(x) ~ f(y) for every map f in ``consequence_maps``.

    Union-find saturation with a FIFO worklist; consequences are enqueued for
    each merging pair, which suffices by transitivity of the merged chains.
    Representatives are deterministic (smallest index wins).
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue: deque[tuple[int, int]] = deque(pairs)
    while queue:
        x, y = queue.popleft()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if ry < rx:
            rx, ry = ry, rx
        parent[ry] = rx
        for f in consequence_maps:
            queue.append((f[x], f[y]))
    return Partition.normalized([find(x) for x in range(n)])


# ---------------------------------------------------------------------------
# finite monoids


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid given by its Cayley table.

    ``table[i][j]`` is the index of ``elements[i] * elements[j]``. The table
    is validated eagerly (closure, identity, associativity) at construction.
    """

    name: str
    elements: tuple[Label, ...]
    identity: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.elements)
        if len(set(self.elements)) != n:
            dup = next(l for l in self.elements if self.elements.count(l) > 1)
            raise UnknownLabel(dup, f"duplicate label in monoid {self.name!r}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise NonAssociative(("<table>", "<is>", "<not square>"))
        for row in self.table:
            for v in row:
                if not (0 <= v < n):
                    raise UnknownLabel(str(v), f"table entry of {self.name!r}")
        e = self.identity
        for i in range(n):
            if self.table[e][i] != i:
                raise BadIdentity(self.elements[e], self.elements[i], self.elements[self.table[e][i]])
            if self.table[i][e] != i:
                raise BadIdentity(self.elements[e], self.elements[i], self.elements[self.table[i][e]])
        t = self.table
        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    if t[ij][k] != t[i][t[j][k]]:
                        raise NonAssociative((self.elements[i], self.elements[j], self.elements[k]))

    # -- basic accessors

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> Label:
        return self.elements[i]

    def labels(self, indices: Iterable[int]) -> tuple[Label, ...]:
        return tuple(self.elements[i] for i in indices)

    def index(self, label: Label) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UnknownLabel(label, f"monoid {self.name!r}") from None

    def is_idempotent(self, i: int) -> bool:
        return self.table[i][i] == i

    def is_commutative(self) -> bool:
        return all(
            self.table[i][j] == self.table[j][i]
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )

    def is_group(self) -> bool:
        return len(invertibles(self, "right")) == self.size

    def renamed(self, name: str) -> "FiniteMonoid":
        return replace(self, name=name)

    def __repr__(self) -> str:
        return f"FiniteMonoid({self.name!r}, n={self.size})"


def validate_monoid(
    labels: Sequence[Label],
    identity: Label,
    raw_table: Sequence[Sequence[Label]],
    name: str = "M",
) -> FiniteMonoid:
    """Build a monoid from a label-level Cayley table, checking every axiom."""
    labels = tuple(labels)
    index = {l: i for i, l in enumerate(labels)}
    if len(index) != len(labels):
        dup = next(l for l in labels if labels.count(l) > 1)
        raise UnknownLabel(dup, "duplicate element label")
    if identity not in index:
        raise UnknownLabel(identity, "identity")
    if len(raw_table) != len(labels):
        raise UnknownLabel("<row count>", "table is not square")
    rows = []
    for i, row in enumerate(raw_table):
        if len(row) != len(labels):
            raise UnknownLabel("<column count>", f"table row {labels[i]!r}")
        out = []
        for entry in row:
            if entry not in index:
                raise UnknownLabel(entry, "table entry")
            out.append(index[entry])
        rows.append(tuple(out))
    return FiniteMonoid(name, labels, index[identity], tuple(rows))


def opposite(m: FiniteMonoid) -> FiniteMonoid:
    """Transpose the multiplication table; an involution (names round-trip)."""
    n = m.size
    table = tuple(tuple(m.table[j][i] for j in range(n)) for i in range(n))
    name = m.name[:-3] if m.name.endswith("^op") else m.name + "^op"
    return FiniteMonoid(name, m.elements, m.identity, table)


@lru_cache(maxsize=None)
def idempotents(m: FiniteMonoid) -> tuple[int, ...]:
    return tuple(i for i in range(m.size) if m.table[i][i] == i)


@lru_cache(maxsize=None)
def invertibles(m: FiniteMonoid, side: str = "right") -> tuple[int, ...]:
    """Right- (or left-) invertible elements.

    In a finite monoid both sets coincide with the group of units; this is
    checked rather than assumed.
    """
    one = m.identity
    right = tuple(u for u in range(m.size) if any(m.table[u][v] == one for v in range(m.size)))
    left = tuple(v for v in range(m.size) if any(m.table[u][v] == one for u in range(m.size)))
    if right != left:
        raise AssertionError(f"unit group mismatch in {m.name}: {right} vs {left}")
    if side == "right":
        return right
    if side == "left":
        return left
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


# ---------------------------------------------------------------------------
# semigroup homomorphisms


@dataclass(frozen=True)
class SemigroupHom:
    """A multiplication-preserving map between finite monoids.

    Preservation of the identity is not required; ``image_of_identity`` is an
    idempotent of the codomain.
    """

    domain: FiniteMonoid
    codomain: FiniteMonoid
    map: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if len(self.map) != self.domain.size:
            raise NotAHomomorphism("<map size>", "<domain size>")
        for v in self.map:
            if not (0 <= v < self.codomain.size):
                raise UnknownLabel(str(v), f"hom into {self.codomain.name!r}")
        for x in range(self.domain.size):
            for y in range(self.domain.size):
                if self.map[self.domain.table[x][y]] != self.codomain.table[self.map[x]][self.map[y]]:
                    raise NotAHomomorphism(self.domain.label(x), self.domain.label(y))

    def __call__(self, i: int) -> int:
        return self.map[i]

    @property
    def image_of_identity(self) -> int:
        return self.map[self.domain.identity]

    @property
    def is_monoid_hom(self) -> bool:
        return self.image_of_identity == self.codomain.identity

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == self.domain.size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.codomain.size

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.map)))

    def describe(self) -> str:
        if self.name:
            return self.name
        return f"{self.domain.name} -> {self.codomain.name}"

    def __repr__(self) -> str:
        return f"SemigroupHom({self.describe()!r}, map={self.map})"


def hom_by_labels(
    domain: FiniteMonoid,
    codomain: FiniteMonoid,
    mapping: dict[Label, Label],
    name: str = "",
) -> SemigroupHom:
    out = []
    for l in domain.elements:
        if l not in mapping:
            raise UnknownLabel(l, "hom mapping (missing key)")
        out.append(codomain.index(mapping[l]))
    return SemigroupHom(domain, codomain, tuple(out), name)


def identity_hom(m: FiniteMonoid) -> SemigroupHom:
    return SemigroupHom(m, m, tuple(range(m.size)), f"id_{m.name}")


def compose_homs(outer: SemigroupHom, inner: SemigroupHom) -> SemigroupHom:
    if outer.domain != inner.codomain:
        raise NotAHomomorphism("<codomain of inner>", "<domain of outer>")
    return SemigroupHom(
        inner.domain,
        outer.codomain,
        tuple(outer.map[v] for v in inner.map),
        f"{outer.describe()} . {inner.describe()}",
    )


def opposite_hom(h: SemigroupHom) -> SemigroupHom:
    """The same underlying map, viewed between the opposite monoids."""
    return SemigroupHom(opposite(h.domain), opposite(h.codomain), h.map, h.name + "^op" if h.name else "")


def submonoid(m: FiniteMonoid, subset: Iterable[int], name: str = "") -> tuple[FiniteMonoid, SemigroupHom]:
    """A multiplication-closed subset with an internal two-sided identity,
    returned with its inclusion hom (a monoid hom only if the internal
    identity is the ambient one)."""
    elems = sorted(set(subset))
    pos = {v: i for i, v in enumerate(elems)}
    for x in elems:
        for y in elems:
            if m.table[x][y] not in pos:
                raise NotAHomomorphism(m.label(x), m.label(y))
    internal = [e for e in elems if all(m.table[e][x] == x and m.table[x][e] == x for x in elems)]
    if not internal:
        raise BadIdentity("<none>", m.name, "<no internal identity>")
    ident = internal[0]
    table = tuple(tuple(pos[m.table[x][y]] for y in elems) for x in elems)
    sub = FiniteMonoid(name or f"{m.name}|{{{','.join(m.labels(elems))}}}", m.labels(elems), pos[ident], table)
    incl = SemigroupHom(sub, m, tuple(elems), f"{sub.name} into {m.name}")
    return sub, incl


def corner(m: FiniteMonoid, e: int) -> tuple[FiniteMonoid, SemigroupHom]:
    """The corner monoid eMe = {eme : m in M} with identity e, plus its
    inclusion (a semigroup hom whose image of identity is e)."""
    if not m.is_idempotent(e):
        raise NotIdempotent(m.label(e))
    if e == m.identity:
        return m, identity_hom(m)
    carrier = sorted({m.mul(m.mul(e, x), e) for x in range(m.size)})
    return submonoid(m, carrier, f"{m.name}[{m.label(e)}]")


def image_submonoid(h: SemigroupHom, name: str = "") -> tuple[FiniteMonoid, SemigroupHom]:
    return submonoid(h.codomain, set(h.map), name or f"im({h.describe()})")


def factor_through(h: SemigroupHom, inclusion: SemigroupHom) -> SemigroupHom:
    """Corestrict h: M -> N along an inclusion S -> N with image(h) <= S."""
    back = {v: i for i, v in enumerate(inclusion.map)}
    try:
        return SemigroupHom(
            h.domain,
            inclusion.domain,
            tuple(back[v] for v in h.map),
            f"{h.describe()} through {inclusion.domain.name}",
        )
    except KeyError as k:
        raise UnknownLabel(h.codomain.label(k.args[0]), "corestriction target") from None


def hom_between_subsets(
    sub_a: tuple[FiniteMonoid, SemigroupHom],
    sub_b: tuple[FiniteMonoid, SemigroupHom],
) -> SemigroupHom:
    """Inclusion A -> B for two submonoid inclusions into a common parent
    with elements(A) contained in elements(B)."""
    a, incl_a = sub_a
    b, incl_b = sub_b
    if incl_a.codomain != incl_b.codomain:
        raise NotAHomomorphism("<parents differ>", "")
    back = {v: i for i, v in enumerate(incl_b.map)}
    return SemigroupHom(a, b, tuple(back[v] for v in incl_a.map), f"{a.name} into {b.name}")


@dataclass(frozen=True)
class Certified:
    value: bool
    certificate: Any = None

    def __bool__(self) -> bool:
        return self.value


def is_morita_corner(m: FiniteMonoid, e: int) -> Certified:
    """Whether the corner inclusion eMe -> M induces an equivalence of
    presheaf toposes: every idempotent d must be a retract of e in the
    idempotent completion, i.e. there are r, s with re = r = dr,
    sd = s = es, and rs = d. Exhaustive search with witnesses."""
    if not m.is_idempotent(e):
        raise NotIdempotent(m.label(e))
    witnesses = []
    for d in idempotents(m):
        found = None
        for r in range(m.size):
            if not (m.mul(r, e) == r == m.mul(d, r)):
                continue
            for s in range(m.size):
                if m.mul(s, d) == s == m.mul(e, s) and m.mul(r, s) == d:
                    found = (r, s)
                    break
            if found:
                break
        if found is None:
            return Certified(False, {"failing_idempotent": m.label(d)})
        witnesses.append(
            {"idempotent": m.label(d), "retraction": m.label(found[0]), "section": m.label(found[1])}
        )
    return Certified(True, witnesses)


# ---------------------------------------------------------------------------
# congruences and quotients


@dataclass(frozen=True)
class Congruence:
    partition: Partition
    sidedness: str  # "left" | "right" | "two-sided"

    @property
    def num_classes(self) -> int:
        return self.partition.num_classes

    def same(self, x: int, y: int) -> bool:
        return self.partition.same(x, y)


def _mult_maps(m: FiniteMonoid, sidedness: str) -> list[tuple[int, ...]]:
    rights = [tuple(m.table[x][a] for x in range(m.size)) for a in range(m.size)]
    lefts = [tuple(m.table[a][x] for x in range(m.size)) for a in range(m.size)]
    if sidedness == "right":
        return rights
    if sidedness == "left":
        return lefts
    if sidedness == "two-sided":
        return rights + lefts
    raise WrongSidedness("left/right/two-sided", sidedness)


def congruence_closure(
    m: FiniteMonoid, pairs: Iterable[tuple[int, int]], sidedness: str = "two-sided"
) -> Congruence:
    """Smallest congruence of the requested sidedness containing the pairs."""
    part = equivalence_closure(m.size, pairs, _mult_maps(m, sidedness))
    return Congruence(part, sidedness)


def is_congruence(m: FiniteMonoid, partition: Partition, sidedness: str) -> Optional[tuple[int, int, int]]:
    """None if compatible, else a witness (x, y, a) with x ~ y but the
    required products inequivalent."""
    for x in range(m.size):
        for y in range(x + 1, m.size):
            if not partition.same(x, y):
                continue
            for a in range(m.size):
                if sidedness in ("right", "two-sided") and not partition.same(m.table[x][a], m.table[y][a]):
                    return (x, y, a)
                if sidedness in ("left", "two-sided") and not partition.same(m.table[a][x], m.table[a][y]):
                    return (x, y, a)
    return None


def kernel_congruence(h: SemigroupHom) -> Congruence:
    classes = Partition.normalized([h.map[x] for x in range(h.domain.size)])
    return Congruence(classes, "two-sided")


def quotient_by_congruence(m: FiniteMonoid, cong: Congruence) -> tuple[FiniteMonoid, SemigroupHom]:
    """The quotient monoid by a two-sided congruence, with its projection."""
    if cong.sidedness != "two-sided":
        raise WrongSidedness("two-sided", cong.sidedness)
    bad = is_congruence(m, cong.partition, "two-sided")
    if bad is not None:
        raise WrongSidedness("two-sided", "incompatible partition", m.labels(bad))
    reps = cong.partition.representatives()
    labels = tuple(f"[{m.label(r)}]" for r in reps)
    cls = cong.partition.class_of
    table = tuple(tuple(cls[m.table[u][v]] for v in reps) for u in reps)
    quo = FiniteMonoid(f"{m.name}/~", labels, cls[m.identity], table)
    proj = SemigroupHom(m, quo, cls, f"{m.name} onto {quo.name}")
    return quo, proj


# ---------------------------------------------------------------------------
# finite categories


@dataclass(frozen=True)
class Arrow:
    label: str
    src: int
    dst: int


@dataclass
class FiniteCategory:
    """A finite category with explicit composition.

    ``composition[(g, f)] = g after f``, defined exactly on composable pairs.
    Arrow labels are only required to be unique within each hom-set.
    """

    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    composition: dict[tuple[int, int], int]
    identities: tuple[int, ...]

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return tuple(i for i, ar in enumerate(self.arrows) if ar.src == a and ar.dst == b)

    def endos(self, a: int) -> tuple[int, ...]:
        return self.hom(a, a)

    def compose(self, g: int, f: int) -> int:
        return self.composition[(g, f)]

    def identity_of(self, obj: int) -> int:
        return self.identities[obj]

    def validate(self) -> None:
        for o, i in enumerate(self.identities):
            ar = self.arrows[i]
            if ar.src != o or ar.dst != o:
                raise NonAssociative((self.objects[o], "identity", ar.label))
        for a in range(len(self.objects)):
            for b in range(len(self.objects)):
                labels = [self.arrows[i].label for i in self.hom(a, b)]
                if len(set(labels)) != len(labels):
                    raise UnknownLabel(labels[0], f"duplicate arrow label in hom({a},{b})")
        for gi, g in enumerate(self.arrows):
            for fi, f in enumerate(self.arrows):
                if f.dst == g.src:
                    if (gi, fi) not in self.composition:
                        raise NonAssociative((f.label, g.label, "<undefined composite>"))
                    h = self.arrows[self.composition[(gi, fi)]]
                    if h.src != f.src or h.dst != g.dst:
                        raise NonAssociative((f.label, g.label, h.label))
                elif (gi, fi) in self.composition:
                    raise NonAssociative((f.label, g.label, "<non-composable pair composed>"))
        for fi, f in enumerate(self.arrows):
            if self.composition[(fi, self.identities[f.src])] != fi:
                raise BadIdentity(self.objects[f.src], f.label, "<right identity law>")
            if self.composition[(self.identities[f.dst], fi)] != fi:
                raise BadIdentity(self.objects[f.dst], f.label, "<left identity law>")
        for fi, f in enumerate(self.arrows):
            for gi, g in enumerate(self.arrows):
                if g.src != f.dst:
                    continue
                gf = self.composition[(gi, fi)]
                for hi, h in enumerate(self.arrows):
                    if h.src != g.dst:
                        continue
                    if self.composition[(hi, gf)] != self.composition[(self.composition[(hi, gi)], fi)]:
                        raise NonAssociative((f.label, g.label, h.label))

    def opposite(self) -> "FiniteCategory":
        arrows = tuple(Arrow(a.label, a.dst, a.src) for a in self.arrows)
        comp = {(f, g): h for (g, f), h in self.composition.items()}
        return FiniteCategory(self.objects, arrows, comp, self.identities)

    def endomorphism_monoid(self, obj: int, name: str = "") -> tuple[FiniteMonoid, tuple[int, ...]]:
        """The endomorphism monoid at ``obj`` (mult = composition), with the
        arrow index of each monoid element."""
        endo = self.endos(obj)
        pos = {a: i for i, a in enumerate(endo)}
        labels = tuple(self.arrows[a].label for a in endo)
        table = tuple(tuple(pos[self.composition[(g, f)]] for f in endo) for g in endo)
        mon = FiniteMonoid(name or f"End({self.objects[obj]})", labels, pos[self.identities[obj]], table)
        return mon, endo

    def __repr__(self) -> str:
        return f"FiniteCategory(|obj|={len(self.objects)}, |arr|={len(self.arrows)})"


def one_object_category(m: FiniteMonoid) -> FiniteCategory:
    arrows = tuple(Arrow(l, 0, 0) for l in m.elements)
    comp = {(g, f): m.table[g][f] for g in range(m.size) for f in range(m.size)}
    return FiniteCategory((m.name,), arrows, comp, (m.identity,))


@dataclass
class FunctorData:
    source: FiniteCategory
    target: FiniteCategory
    object_map: tuple[int, ...]
    arrow_map: tuple[int, ...]

    def validate(self) -> None:
        for i, a in enumerate(self.source.arrows):
            b = self.target.arrows[self.arrow_map[i]]
            if b.src != self.object_map[a.src] or b.dst != self.object_map[a.dst]:
                raise NotAHomomorphism(a.label, "<src/dst not preserved>")
        for o, i in enumerate(self.source.identities):
            if self.arrow_map[i] != self.target.identities[self.object_map[o]]:
                raise NotAHomomorphism(self.source.objects[o], "<identity not preserved>")
        for (g, f), h in self.source.composition.items():
            if self.target.composition[(self.arrow_map[g], self.arrow_map[f])] != self.arrow_map[h]:
                raise NotAHomomorphism(self.source.arrows[f].label, self.source.arrows[g].label)


def find_object_retract(cat: FiniteCategory, d: int, c: int) -> Optional[tuple[int, int]]:
    """A (section, retraction) pair exhibiting d as a retract of c, or None."""
    ident = cat.identities[d]
    for s in cat.hom(d, c):
        for r in cat.hom(c, d):
            if cat.composition[(r, s)] == ident:
                return (s, r)
    return None


@dataclass
class FunctorProperties:
    full: bool
    faithful: bool
    ess_surj_retracts: bool
    certificate: dict[str, Any] = field(default_factory=dict)


def functor_properties(fun: FunctorData) -> FunctorProperties:
    """Fullness and faithfulness on every hom-set, plus essential surjectivity
    up to retracts (every target object a retract of some image object)."""
    src, tgt = fun.source, fun.target
    cert: dict[str, Any] = {}
    full = True
    faithful = True
    for a in range(len(src.objects)):
        for b in range(len(src.objects)):
            homset = src.hom(a, b)
            images = [fun.arrow_map[f] for f in homset]
            if len(set(images)) != len(images):
                faithful = False
                seen: dict[int, int] = {}
                for f, im in zip(homset, images):
                    if im in seen:
                        cert.setdefault("faithful_counterexample", {
                            "arrows": [src.arrows[seen[im]].label, src.arrows[f].label],
                            "hom": [src.objects[a], src.objects[b]],
                        })
                        break
                    seen[im] = f
            target_hom = tgt.hom(fun.object_map[a], fun.object_map[b])
            missing = sorted(set(target_hom) - set(images))
            if missing:
                full = False
                cert.setdefault("full_counterexample", {
                    "hom": [src.objects[a], src.objects[b]],
                    "unreached": tgt.arrows[missing[0]].label,
                })
    ess = True
    retract_witnesses = []
    for d in range(len(tgt.objects)):
        hit = None
        for c in range(len(src.objects)):
            pair = find_object_retract(tgt, d, fun.object_map[c])
            if pair is not None:
                hit = {
                    "object": tgt.objects[d],
                    "through": src.objects[c],
                    "section": tgt.arrows[pair[0]].label,
                    "retraction": tgt.arrows[pair[1]].label,
                }
                break
        if hit is None:
            ess = False
            cert.setdefault("ess_surj_counterexample", {"object": tgt.objects[d]})
        else:
            retract_witnesses.append(hit)
    if ess:
        cert["retract_witnesses"] = retract_witnesses
    return FunctorProperties(full, faithful, ess, cert)


def find_collapsing_object(cat: FiniteCategory) -> Optional[tuple[int, FiniteMonoid, tuple[int, ...]]]:
    """The least object of which every object is a retract, together with its
    endomorphism monoid; None when no such object exists. When one exists the
    presheaf topos of the category is equivalent to that of the monoid."""
    for c in range(len(cat.objects)):
        if all(find_object_retract(cat, d, c) is not None for d in range(len(cat.objects))):
            mon, endo = cat.endomorphism_monoid(c)
            return (c, mon, endo)
    return None


def is_idempotent_complete(cat: FiniteCategory) -> bool:
    """Every idempotent arrow e splits: e = s.r with r.s an identity."""
    for ei, e in enumerate(cat.arrows):
        if e.src != e.dst or cat.composition[(ei, ei)] != ei:
            continue
        c = e.src
        split = False
        for d in range(len(cat.objects)):
            for r in cat.hom(c, d):
                for s in cat.hom(d, c):
                    if cat.composition[(r, s)] == cat.identities[d] and cat.composition[(s, r)] == ei:
                        split = True
                        break
                if split:
                    break
            if split:
                break
        if not split:
            return False
    return True


# ---------------------------------------------------------------------------
# idempotent completion


@dataclass
class CompletionData:
    """The idempotent completion of a monoid: objects are idempotents,
    Hom(e, d) = {m : me = m = dm}, composition is multiplication."""

    monoid: FiniteMonoid
    category: FiniteCategory
    embedding: FunctorData
    object_element: tuple[int, ...]
    arrow_element: tuple[int, ...]
    arrow_index: dict[tuple[int, int, int], int]  # (element, src obj, dst obj) -> arrow

    def object_of_idempotent(self, e: int) -> int:
        return self.object_element.index(e)


@lru_cache(maxsize=None)
def idempotent_completion(m: FiniteMonoid) -> CompletionData:
    idems = idempotents(m)
    objects = tuple(f"{m.label(e)}_" for e in idems)
    arrows: list[Arrow] = []
    meta: list[tuple[int, int, int]] = []  # (element, src, dst)
    index: dict[tuple[int, int, int], int] = {}
    for si, e in enumerate(idems):
        for di, d in enumerate(idems):
            for x in range(m.size):
                if m.mul(x, e) == x and m.mul(d, x) == x:
                    index[(x, si, di)] = len(arrows)
                    arrows.append(Arrow(m.label(x), si, di))
                    meta.append((x, si, di))
    comp: dict[tuple[int, int], int] = {}
    for gi, (gx, gs, gd) in enumerate(meta):
        for fi, (fx, fs, fd) in enumerate(meta):
            if fd == gs:
                comp[(gi, fi)] = index[(m.mul(gx, fx), fs, gd)]
    identities = tuple(index[(e, i, i)] for i, e in enumerate(idems))
    cat = FiniteCategory(objects, arrows, comp, identities)
    one = one_object_category(m)
    obj1 = idems.index(m.identity)
    embedding = FunctorData(
        one,
        cat,
        (obj1,),
        tuple(index[(x, obj1, obj1)] for x in range(m.size)),
    )
    data = CompletionData(m, cat, embedding, idems, tuple(t[0] for t in meta), index)
    cat.validate()
    embedding.validate()
    return data


def lift_hom_to_completion(h: SemigroupHom) -> FunctorData:
    """The functor between idempotent completions induced by a semigroup hom:
    objects e -> phi(e), arrows m -> phi(m)."""
    cm = idempotent_completion(h.domain)
    cn = idempotent_completion(h.codomain)
    object_map = tuple(cn.object_of_idempotent(h.map[e]) for e in cm.object_element)
    arrow_map = []
    for ai, x in enumerate(cm.arrow_element):
        a = cm.category.arrows[ai]
        arrow_map.append(cn.arrow_index[(h.map[x], object_map[a.src], object_map[a.dst])])
    fun = FunctorData(cm.category, cn.category, object_map, tuple(arrow_map))
    fun.validate()
    return fun


# ---------------------------------------------------------------------------
# brute-force enumeration (desk scale)


def enumerate_semigroup_homs(m: FiniteMonoid, n: FiniteMonoid) -> list[SemigroupHom]:
    """All multiplication-preserving maps M -> N, by backtracking."""
    out: list[SemigroupHom] = []
    size = m.size
    assign = [0] * size

    def ok(k: int) -> bool:
        for i in range(k + 1):
            for j in range(k + 1):
                p = m.table[i][j]
                if p <= k and n.table[assign[i]][assign[j]] != assign[p]:
                    return False
        return True

    def rec(k: int) -> None:
        if k == size:
            out.append(SemigroupHom(m, n, tuple(assign)))
            return
        for v in range(n.size):
            assign[k] = v
            if ok(k):
                rec(k + 1)

    rec(0)
    return out


def enumerate_monoid_homs(m: FiniteMonoid, n: FiniteMonoid) -> list[SemigroupHom]:
    return [h for h in enumerate_semigroup_homs(m, n) if h.is_monoid_hom]


def monoid_isomorphism(m: FiniteMonoid, n: FiniteMonoid) -> Optional[tuple[int, ...]]:
    """A bijective multiplicative map M -> N, or None. Brute force with
    identity/idempotent pruning; intended for sizes <= 8."""
    if m.size != n.size:
        return None
    if len(idempotents(m)) != len(idempotents(n)):
        return None
    assign: list[Optional[int]] = [None] * m.size
    used = [False] * n.size
    assign[m.identity] = n.identity
    used[n.identity] = True

    def ok(k: int) -> bool:
        for i in range(m.size):
            if assign[i] is None:
                continue
            for j in range(m.size):
                if assign[j] is None:
                    continue
                p = m.table[i][j]
                if assign[p] is not None and n.table[assign[i]][assign[j]] != assign[p]:
                    return False
        return True

    order = [x for x in range(m.size) if x != m.identity]

    def rec(pos: int) -> bool:
        if pos == len(order):
            return True
        x = order[pos]
        for v in range(n.size):
            if used[v]:
                continue
            if m.is_idempotent(x) != n.is_idempotent(v):
                continue
            assign[x] = v
            used[v] = True
            if ok(x) and rec(pos + 1):
                return True
            assign[x] = None
            used[v] = False
        return False

    if rec(0):
        return tuple(assign)  # type: ignore[arg-type]
    return None


def is_isomorphic(m: FiniteMonoid, n: FiniteMonoid) -> bool:
    return monoid_isomorphism(m, n) is not None
