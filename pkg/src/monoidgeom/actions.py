"""Finite right/left actions and biactions: the presheaf side of the story.

Provides the canonical functors between a monoid topos and sets (fixed
points, connected components, constant and underlying-set functors),
flatness, sub-acts, retract searches, strong generators, local constancy,
and categories of elements with their projection functors.

Left/right duality is implemented once through opposite-monoid adapters
wherever that keeps the invariants true by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence, Union

from .core import (
    Arrow,
    FiniteCategory,
    FiniteMonoid,
    FunctorData,
    Partition,
    equivalence_closure,
    idempotent_completion,
    invertibles,
    one_object_category,
    opposite,
)
from .errors import BadAction, SizeCap, UnknownLabel

Label = str


# ---------------------------------------------------------------------------
# the three kinds of action


@dataclass(frozen=True)
class RightAction:
    """A finite right M-set. ``table[x][m]`` is the index of x . m."""

    monoid: FiniteMonoid
    carrier: tuple[Label, ...]
    table: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        _check_action_shape(self.monoid, self.carrier, self.table)
        t, mt = self.table, self.monoid.table
        one = self.monoid.identity
        for x in range(len(self.carrier)):
            if t[x][one] != x:
                raise BadAction("x . 1 = x", (self.carrier[x],))
            for m in range(self.monoid.size):
                for n in range(self.monoid.size):
                    if t[x][mt[m][n]] != t[t[x][m]][n]:
                        raise BadAction(
                            "x . (m n) = (x . m) . n",
                            (self.carrier[x], self.monoid.label(m), self.monoid.label(n)),
                        )

    @property
    def size(self) -> int:
        return len(self.carrier)

    def act(self, x: int, m: int) -> int:
        return self.table[x][m]

    def orbit(self, x: int) -> tuple[int, ...]:
        return tuple(sorted({self.table[x][m] for m in range(self.monoid.size)}))

    def restrict(self, subset: Sequence[int], name: str = "") -> "RightAction":
        subset = sorted(subset)
        pos = {v: i for i, v in enumerate(subset)}
        try:
            table = tuple(tuple(pos[self.table[x][m]] for m in range(self.monoid.size)) for x in subset)
        except KeyError:
            raise BadAction("subset closed under the action", tuple(self.carrier[v] for v in subset))
        return RightAction(self.monoid, tuple(self.carrier[v] for v in subset), table, name or self.name)

    def __repr__(self) -> str:
        return f"RightAction({self.name or '?'} over {self.monoid.name}, |X|={self.size})"


@dataclass(frozen=True)
class LeftAction:
    """A finite left M-set. ``table[x][m]`` is the index of m . x."""

    monoid: FiniteMonoid
    carrier: tuple[Label, ...]
    table: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        _check_action_shape(self.monoid, self.carrier, self.table)
        t, mt = self.table, self.monoid.table
        one = self.monoid.identity
        for x in range(len(self.carrier)):
            if t[x][one] != x:
                raise BadAction("1 . x = x", (self.carrier[x],))
            for m in range(self.monoid.size):
                for n in range(self.monoid.size):
                    if t[x][mt[m][n]] != t[t[x][n]][m]:
                        raise BadAction(
                            "(m n) . x = m . (n . x)",
                            (self.monoid.label(m), self.monoid.label(n), self.carrier[x]),
                        )

    @property
    def size(self) -> int:
        return len(self.carrier)

    def act(self, m: int, x: int) -> int:
        return self.table[x][m]

    def __repr__(self) -> str:
        return f"LeftAction({self.name or '?'} over {self.monoid.name}, |X|={self.size})"


@dataclass(frozen=True)
class BiAction:
    """A set with compatible left N-action and right M-action."""

    left_monoid: FiniteMonoid
    right_monoid: FiniteMonoid
    carrier: tuple[Label, ...]
    left_table: tuple[tuple[int, ...], ...]
    right_table: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        self.as_left()
        self.as_right()
        for x in range(len(self.carrier)):
            for n in range(self.left_monoid.size):
                for m in range(self.right_monoid.size):
                    if self.right_table[self.left_table[x][n]][m] != self.left_table[self.right_table[x][m]][n]:
                        raise BadAction(
                            "(n . x) . m = n . (x . m)",
                            (self.left_monoid.label(n), self.carrier[x], self.right_monoid.label(m)),
                        )

    @property
    def size(self) -> int:
        return len(self.carrier)

    def as_left(self) -> LeftAction:
        return LeftAction(self.left_monoid, self.carrier, self.left_table, self.name)

    def as_right(self) -> RightAction:
        return RightAction(self.right_monoid, self.carrier, self.right_table, self.name)

    def left_act(self, n: int, x: int) -> int:
        return self.left_table[x][n]

    def right_act(self, x: int, m: int) -> int:
        return self.right_table[x][m]

    def __repr__(self) -> str:
        return (
            f"BiAction({self.name or '?'} over ({self.left_monoid.name}, "
            f"{self.right_monoid.name}), |X|={self.size})"
        )


def _check_action_shape(m: FiniteMonoid, carrier: tuple[Label, ...], table) -> None:
    if len(set(carrier)) != len(carrier):
        dup = next(l for l in carrier if carrier.count(l) > 1)
        raise UnknownLabel(dup, "duplicate carrier label")
    if len(table) != len(carrier):
        raise BadAction("table has one row per carrier element", len(table))
    for row in table:
        if len(row) != m.size:
            raise BadAction("table has one column per monoid element", len(row))
        for v in row:
            if not (0 <= v < len(carrier)):
                raise BadAction("table entries index the carrier", v)


# -- constructors


def right_action_by_labels(
    m: FiniteMonoid, carrier: Sequence[Label], act: dict[Label, dict[Label, Label]], name: str = ""
) -> RightAction:
    carrier = tuple(carrier)
    cidx = {l: i for i, l in enumerate(carrier)}
    rows = []
    for x in carrier:
        if x not in act:
            raise UnknownLabel(x, "action (missing carrier row)")
        row = []
        for lm in m.elements:
            if lm not in act[x]:
                raise UnknownLabel(lm, f"action row {x!r}")
            target = act[x][lm]
            if target not in cidx:
                raise UnknownLabel(target, f"action value at ({x!r}, {lm!r})")
            row.append(cidx[target])
        rows.append(tuple(row))
    return RightAction(m, carrier, tuple(rows), name)


def left_action_by_labels(
    m: FiniteMonoid, carrier: Sequence[Label], act: dict[Label, dict[Label, Label]], name: str = ""
) -> LeftAction:
    carrier = tuple(carrier)
    cidx = {l: i for i, l in enumerate(carrier)}
    rows = []
    for x in carrier:
        if x not in act:
            raise UnknownLabel(x, "action (missing carrier row)")
        row = []
        for lm in m.elements:
            if lm not in act[x]:
                raise UnknownLabel(lm, f"action row {x!r}")
            target = act[x][lm]
            if target not in cidx:
                raise UnknownLabel(target, f"action value at ({lm!r}, {x!r})")
            row.append(cidx[target])
        rows.append(tuple(row))
    return LeftAction(m, carrier, tuple(rows), name)


def regular_right(m: FiniteMonoid) -> RightAction:
    return RightAction(m, m.elements, m.table, f"{m.name} (right regular)")


def regular_left(m: FiniteMonoid) -> LeftAction:
    table = tuple(tuple(m.table[a][x] for a in range(m.size)) for x in range(m.size))
    return LeftAction(m, m.elements, table, f"{m.name} (left regular)")


def constant_action(m: FiniteMonoid, carrier: Sequence[Label], name: str = "") -> RightAction:
    carrier = tuple(carrier)
    table = tuple(tuple(x for _ in range(m.size)) for x in range(len(carrier)))
    return RightAction(m, carrier, table, name or f"constant {set(carrier) or '{}'}")


def terminal_right(m: FiniteMonoid) -> RightAction:
    return constant_action(m, ("*",), "terminal")


def underlying_set(x: Union[RightAction, LeftAction, BiAction]) -> tuple[Label, ...]:
    return x.carrier


def coproduct_right(actions: Sequence[RightAction], name: str = "") -> RightAction:
    mon = actions[0].monoid
    labels: list[Label] = []
    rows: list[tuple[int, ...]] = []
    offset = 0
    for k, a in enumerate(actions):
        if a.monoid != mon:
            raise BadAction("coproduct over a single monoid", a.monoid.name)
        labels.extend(f"{k}:{l}" for l in a.carrier)
        rows.extend(tuple(v + offset for v in row) for row in a.table)
        offset += a.size
    return RightAction(mon, tuple(labels), tuple(rows), name or "coproduct")


def quotient_right_action(x: RightAction, partition: Partition, name: str = "") -> RightAction:
    """Quotient by an action-compatible partition (a right congruence on X)."""
    reps = partition.representatives()
    cls = partition.class_of
    for v in range(x.size):
        for m in range(x.monoid.size):
            if cls[x.table[v][m]] != cls[x.table[reps[cls[v]]][m]]:
                raise BadAction("partition compatible with the action", (x.carrier[v], x.monoid.label(m)))
    labels = tuple(f"[{x.carrier[r]}]" for r in reps)
    table = tuple(tuple(cls[x.table[r][m]] for m in range(x.monoid.size)) for r in reps)
    return RightAction(x.monoid, labels, table, name or f"{x.name}/~")


# -- opposite adapters


def right_to_left(x: RightAction) -> LeftAction:
    return LeftAction(opposite(x.monoid), x.carrier, x.table, x.name)


def left_to_right(y: LeftAction) -> RightAction:
    return RightAction(opposite(y.monoid), y.carrier, y.table, y.name)


def op_biaction(a: BiAction) -> BiAction:
    """Swap the two actions, over the opposite monoids."""
    return BiAction(
        opposite(a.right_monoid),
        opposite(a.left_monoid),
        a.carrier,
        a.right_table,
        a.left_table,
        a.name + "^op" if a.name else "",
    )


# ---------------------------------------------------------------------------
# equivariant maps


@dataclass(frozen=True)
class EquivariantMap:
    source: RightAction
    target: RightAction
    map: tuple[int, ...]

    def __post_init__(self):
        if self.source.monoid != self.target.monoid:
            raise BadAction("equivariant map over one monoid", self.target.monoid.name)
        for x in range(self.source.size):
            for m in range(self.source.monoid.size):
                if self.map[self.source.table[x][m]] != self.target.table[self.map[x]][m]:
                    raise BadAction(
                        "f(x . m) = f(x) . m", (self.source.carrier[x], self.source.monoid.label(m))
                    )

    def __call__(self, x: int) -> int:
        return self.map[x]


# ---------------------------------------------------------------------------
# canonical functors


def fixed_points(x: RightAction) -> tuple[int, ...]:
    """Elements fixed by every monoid element; elementwise this is the set of
    maps from the terminal action."""
    return tuple(v for v in range(x.size) if all(x.table[v][m] == v for m in range(x.monoid.size)))


def fixed_points_left(y: LeftAction) -> tuple[int, ...]:
    return tuple(v for v in range(y.size) if all(y.table[v][m] == v for m in range(y.monoid.size)))


def components(x: Union[RightAction, LeftAction]) -> Partition:
    """Connected components: the equivalence generated by v ~ v . m."""
    pairs = [(v, x.table[v][m]) for v in range(x.size) for m in range(x.monoid.size)]
    return equivalence_closure(x.size, pairs)


# ---------------------------------------------------------------------------
# flatness


@dataclass(frozen=True)
class FlatnessResult:
    flat: bool
    failed_condition: Optional[int] = None
    witness: Any = None

    def __bool__(self) -> bool:
        return self.flat


def is_flat(a: LeftAction) -> FlatnessResult:
    """The three filteredness conditions for a left N-set, checked verbatim:
    (1) nonempty; (2) any two elements dominated by a common one;
    (3) equalized pairs factor through a common refinement."""
    n = a.monoid
    if a.size == 0:
        return FlatnessResult(False, 1, "empty carrier")
    for b in range(a.size):
        for b2 in range(a.size):
            if not any(
                a.table[c][p] == b and a.table[c][q] == b2
                for c in range(a.size)
                for p in range(n.size)
                for q in range(n.size)
            ):
                return FlatnessResult(False, 2, {"pair": [a.carrier[b], a.carrier[b2]]})
    for c in range(a.size):
        for p in range(n.size):
            for q in range(n.size):
                if a.table[c][p] != a.table[c][q]:
                    continue
                if not any(
                    a.table[d][r] == c and n.table[p][r] == n.table[q][r]
                    for d in range(a.size)
                    for r in range(n.size)
                ):
                    return FlatnessResult(
                        False,
                        3,
                        {"element": a.carrier[c], "pair": [n.label(p), n.label(q)]},
                    )
    return FlatnessResult(True)


# ---------------------------------------------------------------------------
# sub-acts


def cyclic_sub_acts(x: RightAction) -> list[tuple[int, ...]]:
    seen: dict[tuple[int, ...], None] = {}
    for v in range(x.size):
        seen.setdefault(x.orbit(v))
    return sorted(seen, key=lambda t: (len(t), t))


def sub_acts(x: RightAction, cap: int = 4096) -> list[tuple[int, ...]]:
    """All action-closed subsets, as unions of cyclic sub-acts. Includes the
    empty set and the whole carrier; raises SizeCap beyond ``cap``."""
    cyclics = cyclic_sub_acts(x)
    found: set[frozenset[int]] = {frozenset()}
    frontier: list[frozenset[int]] = [frozenset()]
    while frontier:
        nxt: list[frozenset[int]] = []
        for s in frontier:
            for c in cyclics:
                u = s | frozenset(c)
                if u not in found:
                    found.add(u)
                    nxt.append(u)
                    if len(found) > cap:
                        raise SizeCap("sub-act lattice", cap)
        frontier = nxt
    return sorted((tuple(sorted(s)) for s in found), key=lambda t: (len(t), t))


# ---------------------------------------------------------------------------
# retract of the regular action


@dataclass(frozen=True)
class RegularRetract:
    base_point: int
    section: EquivariantMap  # M -> X, m |-> a . m
    retraction: EquivariantMap  # X -> M, with r(a) = 1


def _extend_equivariant(
    x: RightAction, target: RightAction, seed: dict[int, int]
) -> Optional[tuple[int, ...]]:
    """Backtracking completion of a partial equivariant map X -> target.
    Assigned values propagate along the action before branching."""
    m = x.monoid
    assign: dict[int, int] = {}

    def propagate(pending: list[tuple[int, int]]) -> Optional[list[int]]:
        added: list[int] = []
        while pending:
            v, val = pending.pop()
            if v in assign:
                if assign[v] != val:
                    for a in added:
                        del assign[a]
                    return None
                continue
            assign[v] = val
            added.append(v)
            for g in range(m.size):
                pending.append((x.table[v][g], target.table[val][g]))
        return added

    if propagate(list(seed.items())) is None:
        return None

    def rec() -> bool:
        free = next((v for v in range(x.size) if v not in assign), None)
        if free is None:
            return True
        for val in range(target.size):
            added = propagate([(free, val)])
            if added is not None:
                if rec():
                    return True
                for a in added:
                    del assign[a]
        return False

    if rec():
        return tuple(assign[v] for v in range(x.size))
    return None


def find_regular_retract(x: RightAction) -> Optional[RegularRetract]:
    """A pair (s, r) with s the orbit map of a free point a (a . m all
    distinct), r equivariant with r(a) = 1, so r . s = id on the regular
    action. Depth-first search over orbit-representative images."""
    m = x.monoid
    reg = regular_right(m)
    for a in range(x.size):
        images = [x.table[a][g] for g in range(m.size)]
        if len(set(images)) != m.size:
            continue
        found = _extend_equivariant(x, reg, {a: m.identity})
        if found is not None:
            section = EquivariantMap(reg, x, tuple(images))
            return RegularRetract(a, section, EquivariantMap(x, reg, found))
    return None


# ---------------------------------------------------------------------------
# strong generators and local constancy


def strong_generators(x: RightAction) -> tuple[int, ...]:
    """Elements reachable from every element by a right-invertible translate."""
    units = invertibles(x.monoid, "right")
    return tuple(
        v
        for v in range(x.size)
        if all(any(x.table[y][u] == v for u in units) for y in range(x.size))
    )


def strong_generators_left(y: LeftAction) -> tuple[int, ...]:
    """Dual notion for left actions, using left-invertible elements."""
    units = invertibles(y.monoid, "left")
    return tuple(
        v
        for v in range(y.size)
        if all(any(y.table[z][u] == v for u in units) for z in range(y.size))
    )


def is_locally_constant(x: RightAction) -> bool:
    """Every monoid element acts bijectively on the carrier."""
    n = x.size
    return all(len({x.table[v][m] for v in range(n)}) == n for m in range(x.monoid.size))


def regular_trivialization(x: RightAction) -> Optional[dict[tuple[int, int], tuple[int, int]]]:
    """For a locally constant action, the explicit isomorphism
    coprod_{a in X} N  ~  X x N  given by (a, n) -> (a . n, n), witnessing
    that the regular action trivializes X. None when not locally constant."""
    if not is_locally_constant(x):
        return None
    iso = {(a, n): (x.table[a][n], n) for a in range(x.size) for n in range(x.monoid.size)}
    if len(set(iso.values())) != len(iso):
        raise BadAction("trivialization is a bijection", x.name)
    return iso


# ---------------------------------------------------------------------------
# categories of elements


@dataclass
class ElementsCategory:
    """The category of elements of an action, with its projection to the
    one-object category of the monoid.

    Arrows are indexed by triples (monoid element, source, target), so the
    projection stays arrow-level honest even when distinct elements act
    identically."""

    category: FiniteCategory
    projection: FunctorData
    arrow_element: tuple[int, ...]
    object_carrier: tuple[int, ...]


def category_of_elements(x: RightAction) -> ElementsCategory:
    """Objects are the elements of X; an arrow n : v -> w whenever w . n = v.
    The projection sends it to n and is a discrete fibration."""
    n = x.monoid
    arrows: list[Arrow] = []
    meta: list[tuple[int, int, int]] = []  # (elem, src, dst)
    index: dict[tuple[int, int], int] = {}  # (elem, dst) -> arrow (src is determined)
    for w in range(x.size):
        for g in range(n.size):
            v = x.table[w][g]
            index[(g, w)] = len(arrows)
            arrows.append(Arrow(n.label(g), v, w))
            meta.append((g, v, w))
    comp: dict[tuple[int, int], int] = {}
    for gi, (ge, gs, gd) in enumerate(meta):
        for fi, (fe, fs, fd) in enumerate(meta):
            if fd == gs:
                comp[(gi, fi)] = index[(n.table[ge][fe], gd)]
    identities = tuple(index[(n.identity, w)] for w in range(x.size))
    cat = FiniteCategory(tuple(x.carrier), tuple(arrows), comp, identities)
    proj = FunctorData(cat, one_object_category(n), tuple(0 for _ in x.carrier), tuple(t[0] for t in meta))
    return ElementsCategory(cat, proj, tuple(t[0] for t in meta), tuple(range(x.size)))


def co_category_of_elements(y: LeftAction) -> ElementsCategory:
    """Dual construction for left actions: an arrow n : v -> w whenever
    n . v = w; the projection is a discrete opfibration. Built through the
    opposite-monoid adapter and categorical opposite."""
    ec = category_of_elements(left_to_right(y))
    cat = ec.category.opposite()
    proj = FunctorData(cat, one_object_category(y.monoid), ec.projection.object_map, ec.projection.arrow_map)
    proj.validate()
    return ElementsCategory(cat, proj, ec.arrow_element, ec.object_carrier)


def is_discrete_fibration(ec: ElementsCategory) -> bool:
    """Unique lift of every monoid element at every object, on the target side."""
    n_arrows = len(ec.category.arrows)
    mon_size = len(ec.projection.target.arrows)
    for w in range(len(ec.category.objects)):
        for g in range(mon_size):
            lifts = [
                i
                for i in range(n_arrows)
                if ec.category.arrows[i].dst == w and ec.arrow_element[i] == g
            ]
            if len(lifts) != 1:
                return False
    return True


def is_discrete_opfibration(ec: ElementsCategory) -> bool:
    """Unique co-lift of every monoid element at every object, on the source side."""
    n_arrows = len(ec.category.arrows)
    mon_size = len(ec.projection.target.arrows)
    for v in range(len(ec.category.objects)):
        for g in range(mon_size):
            lifts = [
                i
                for i in range(n_arrows)
                if ec.category.arrows[i].src == v and ec.arrow_element[i] == g
            ]
            if len(lifts) != 1:
                return False
    return True


@dataclass
class CompletionElementsCategory:
    """Category of elements of a right N-set seen as a presheaf on the
    idempotent completion of N: objects are pairs (idempotent d, x with
    x . d = x); an arrow n : (d, x) -> (d', x') is n : d -> d' in the
    completion with x' . n = x."""

    category: FiniteCategory
    object_info: tuple[tuple[int, int], ...]  # (idempotent element, carrier element)
    arrow_element: tuple[int, ...]

    def locate(self, idem: int, x: int) -> int:
        return self.object_info.index((idem, x))


def elements_over_completion(n: FiniteMonoid, x: RightAction) -> CompletionElementsCategory:
    if x.monoid != n:
        raise BadAction("action over the stated monoid", x.monoid.name)
    comp = idempotent_completion(n)
    idems = comp.object_element
    objects: list[tuple[int, int]] = []
    for d in idems:
        for v in range(x.size):
            if x.table[v][d] == v:
                objects.append((d, v))
    obj_index = {o: i for i, o in enumerate(objects)}
    labels = tuple(f"({n.label(d)},{x.carrier[v]})" for d, v in objects)
    arrows: list[Arrow] = []
    meta: list[tuple[int, int, int]] = []  # (elem, src obj, dst obj)
    index: dict[tuple[int, int], int] = {}  # (completion arrow elem+src idem via dst) -> see below
    arr_index: dict[tuple[int, int, int], int] = {}
    for di, (d2, w) in enumerate(objects):
        dst_obj = di
        d2_pos = idems.index(d2)
        for ai, g in enumerate(comp.arrow_element):
            a = comp.category.arrows[ai]
            if a.dst != d2_pos:
                continue
            d1 = idems[a.src]
            v = x.table[w][g]
            src_obj = obj_index[(d1, v)]
            arr_index[(g, src_obj, dst_obj)] = len(arrows)
            arrows.append(Arrow(n.label(g), src_obj, dst_obj))
            meta.append((g, src_obj, dst_obj))
    compo: dict[tuple[int, int], int] = {}
    for gi, (ge, gs, gd) in enumerate(meta):
        for fi, (fe, fs, fd) in enumerate(meta):
            if fd == gs:
                compo[(gi, fi)] = arr_index[(n.table[ge][fe], fs, gd)]
    identities = tuple(arr_index[(d, i, i)] for i, (d, v) in enumerate(objects))
    cat = FiniteCategory(labels, tuple(arrows), compo, identities)
    return CompletionElementsCategory(cat, tuple(objects), tuple(t[0] for t in meta))
