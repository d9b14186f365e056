"""Tensor products of actions over a monoid, and biaction composition.

The tensor X (x)_N A identifies (x . n, a) with (x, n . a); classes are
computed by disjoint-set closure over the full product carrier, with
lexicographically least representatives for reproducible output. When A
carries a compatible right M-action the quotient inherits a right M-action.

Also provides the inducing biaction of a semigroup hom, and the terminal
pushforward/pullback objects which drive the terminal-connected/etale and
pure/complete-spread factorizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .actions import (
    BiAction,
    LeftAction,
    RightAction,
    is_flat,
    left_to_right,
    terminal_right,
)
from .core import Partition, SemigroupHom, equivalence_closure, opposite_hom
from .errors import BadAction, MonoidMismatch, NotFlat, SizeCap


@dataclass
class TensorResult:
    """The quotient of X x A by the tensor identifications."""

    x: RightAction
    a: Union[LeftAction, BiAction]
    partition: Partition  # over pairs, indexed x * |A| + a
    class_reps: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]
    induced_action: Optional[RightAction]  # right action over A.right_monoid, if A is a BiAction

    @property
    def num_classes(self) -> int:
        return self.partition.num_classes

    def pairing(self, xi: int, ai: int) -> int:
        return self.partition.class_of[xi * self.a.size + ai]


def tensor(x: RightAction, a: Union[LeftAction, BiAction], cap: int = 10_000) -> TensorResult:
    """X (x)_N A for a right N-set X and a left N-set (or (N,M)-biaction) A."""
    n = x.monoid
    left = a.as_left() if isinstance(a, BiAction) else a
    if left.monoid != n:
        raise MonoidMismatch(n.name, left.monoid.name)
    size = x.size * a.size
    if size > cap:
        raise SizeCap("tensor product carrier", cap)

    def pidx(xi: int, ai: int) -> int:
        return xi * a.size + ai

    pairs = [
        (pidx(x.table[xi][g], ai), pidx(xi, left.table[ai][g]))
        for xi in range(x.size)
        for ai in range(a.size)
        for g in range(n.size)
    ]
    part = equivalence_closure(size, pairs)
    reps = tuple(divmod(r, a.size) for r in part.representatives())
    labels = tuple(f"{x.carrier[xi]}(x){a.carrier[ai]}" for xi, ai in reps)

    induced = None
    if isinstance(a, BiAction):
        m = a.right_monoid
        cls = part.class_of
        table = []
        for xi, ai in reps:
            table.append(tuple(cls[pidx(xi, a.right_table[ai][g])] for g in range(m.size)))
        # well-definedness: every member of a class must land in the same class
        for xi in range(x.size):
            for ai in range(a.size):
                c = cls[pidx(xi, ai)]
                for g in range(m.size):
                    if cls[pidx(xi, a.right_table[ai][g])] != table[c][g]:
                        raise BadAction(
                            "right action descends to tensor classes",
                            (x.carrier[xi], a.carrier[ai], m.label(g)),
                        )
        induced = RightAction(m, labels, tuple(table), f"{x.name}(x){a.name}")
    return TensorResult(x, a, part, reps, labels, induced)


# ---------------------------------------------------------------------------
# the biaction induced by a semigroup hom


def hom_to_biact(h: SemigroupHom) -> BiAction:
    """The left ideal N.e (e the image of the identity), with N acting by
    left multiplication and M acting on the right through the hom. This is
    the flat-left biaction inducing the essential geometric morphism of h."""
    n, m = h.codomain, h.domain
    e = h.image_of_identity
    carrier = sorted({n.mul(v, e) for v in range(n.size)})
    pos = {v: i for i, v in enumerate(carrier)}
    labels = n.labels(carrier)
    left = tuple(tuple(pos[n.mul(g, v)] for g in range(n.size)) for v in carrier)
    right = tuple(tuple(pos[n.mul(v, h.map[g])] for g in range(m.size)) for v in carrier)
    biact = BiAction(n, m, labels, left, right, f"{n.name}.{n.label(e)} via {h.describe()}")
    flat = is_flat(biact.as_left())
    if not flat:
        raise NotFlat(flat.failed_condition or 0, flat.witness)
    return biact


# ---------------------------------------------------------------------------
# terminal pushforward and its dual


@dataclass
class TerminalPushforward:
    """The right N-set 1 (x)_M e.N: classes of the right ideal e.N under the
    identifications e.n ~ phi(m).e.n. A single class means the induced
    morphism is terminal-connected."""

    hom: SemigroupHom
    ideal: tuple[int, ...]  # the elements of e.N, as indices in N
    tensor: TensorResult
    action: RightAction  # over N

    def class_of_ideal_element(self, v: int) -> int:
        return self.tensor.pairing(0, self.ideal.index(v))

    def class_of(self, g: int) -> int:
        """Class of e.g for an arbitrary element g of N."""
        n = self.hom.codomain
        return self.class_of_ideal_element(n.mul(self.hom.image_of_identity, g))

    def unit_class_elements(self) -> tuple[int, ...]:
        """{n : * (x) e.n = * (x) e} -- the tensor-side oracle for the
        right-factorable closure of the hom image."""
        base = self.class_of(self.hom.codomain.identity)
        return tuple(g for g in range(self.hom.codomain.size) if self.class_of(g) == base)


def pushforward_terminal(h: SemigroupHom) -> TerminalPushforward:
    n, m = h.codomain, h.domain
    e = h.image_of_identity
    ideal = tuple(sorted({n.mul(e, v) for v in range(n.size)}))
    pos = {v: i for i, v in enumerate(ideal)}
    labels = n.labels(ideal)
    # e.N as an (M, N)-biaction: M on the left through the hom, N on the right.
    left = tuple(tuple(pos[n.mul(h.map[g], v)] for g in range(m.size)) for v in ideal)
    right = tuple(tuple(pos[n.mul(v, g)] for g in range(n.size)) for v in ideal)
    biact = BiAction(m, n, labels, left, right, f"{n.label(e)}.{n.name}")
    t = tensor(terminal_right(m), biact)
    assert t.induced_action is not None
    action = RightAction(
        n,
        t.labels,
        t.induced_action.table,
        f"terminal pushforward of {h.describe()}",
    )
    return TerminalPushforward(h, ideal, t, action)


@dataclass
class TerminalPullbackDual:
    """The left N-set N.e (x)_M 1: classes of N.e under n.e ~ n.e.phi(m),
    computed by dualizing the terminal pushforward through opposites."""

    hom: SemigroupHom
    ideal: tuple[int, ...]  # the elements of N.e, as indices in N
    action: LeftAction  # over N
    dual: TerminalPushforward

    def class_of(self, g: int) -> int:
        return self.dual.class_of(g)

    def unit_class_elements(self) -> tuple[int, ...]:
        return self.dual.unit_class_elements()


def pullback_terminal_dual(h: SemigroupHom) -> TerminalPullbackDual:
    dual = pushforward_terminal(opposite_hom(h))
    n = h.codomain
    e = h.image_of_identity
    ideal = tuple(sorted({n.mul(v, e) for v in range(n.size)}))
    action = LeftAction(n, dual.action.carrier, dual.action.table, f"terminal pullback of {h.describe()}")
    return TerminalPullbackDual(h, ideal, action, dual)


# ---------------------------------------------------------------------------
# composition of biactions


def compose_biacts(a: BiAction, b: BiAction, cap: int = 10_000) -> BiAction:
    """A (x)_L B for A over (N, L) and B over (L, M): the biaction inducing
    the composite geometric morphism. Flatness is checked when both inputs
    are flat on the left."""
    if a.right_monoid != b.left_monoid:
        raise MonoidMismatch(a.right_monoid.name, b.left_monoid.name)
    t = tensor(a.as_right(), b.as_left(), cap)
    n, m = a.left_monoid, b.right_monoid
    cls = t.partition.class_of

    def pidx(xi: int, ai: int) -> int:
        return xi * b.size + ai

    reps = t.class_reps
    left = []
    right = []
    for xi, bi in reps:
        left.append(tuple(cls[pidx(a.left_table[xi][g], bi)] for g in range(n.size)))
        right.append(tuple(cls[pidx(xi, b.right_table[bi][g])] for g in range(m.size)))
    for xi in range(a.size):
        for bi in range(b.size):
            c = cls[pidx(xi, bi)]
            for g in range(n.size):
                if cls[pidx(a.left_table[xi][g], bi)] != left[c][g]:
                    raise BadAction("left action descends to tensor classes", (a.carrier[xi], b.carrier[bi]))
            for g in range(m.size):
                if cls[pidx(xi, b.right_table[bi][g])] != right[c][g]:
                    raise BadAction("right action descends to tensor classes", (a.carrier[xi], b.carrier[bi]))
    out = BiAction(n, m, t.labels, tuple(left), tuple(right), f"{a.name} (x) {b.name}")
    if is_flat(a.as_left()) and is_flat(b.as_left()):
        flat = is_flat(out.as_left())
        if not flat:
            raise NotFlat(flat.failed_condition or 0, flat.witness)
    return out


# ---------------------------------------------------------------------------
# isomorphism search for actions


def _struct_iso(
    n: int,
    ops_x: Sequence[Sequence[int]],
    ops_y: Sequence[Sequence[int]],
    size_y: int,
) -> Optional[tuple[int, ...]]:
    """A bijection f with f(op_i(v)) = op'_i(f(v)) for every i, by
    backtracking over images with forward propagation along the operations."""
    if n != size_y:
        return None
    assign: dict[int, int] = {}
    used: set[int] = set()

    def propagate(stack: list[tuple[int, int]]) -> Optional[list[int]]:
        added: list[int] = []
        while stack:
            v, w = stack.pop()
            if v in assign:
                if assign[v] != w:
                    for q in added:
                        used.discard(assign[q])
                        del assign[q]
                    return None
                continue
            if w in used:
                for q in added:
                    used.discard(assign[q])
                    del assign[q]
                return None
            assign[v] = w
            used.add(w)
            added.append(v)
            for fx, fy in zip(ops_x, ops_y):
                stack.append((fx[v], fy[w]))
        return added

    def undo(added: list[int]) -> None:
        for q in added:
            used.discard(assign[q])
            del assign[q]

    def rec() -> bool:
        free = next((v for v in range(n) if v not in assign), None)
        if free is None:
            return True
        for w in range(size_y):
            if w in used:
                continue
            added = propagate([(free, w)])
            if added is not None:
                if rec():
                    return True
                undo(added)
        return False

    if rec():
        return tuple(assign[v] for v in range(n))
    return None


def find_right_action_iso(x: RightAction, y: RightAction) -> Optional[tuple[int, ...]]:
    if x.monoid != y.monoid:
        return None
    ops_x = [tuple(x.table[v][g] for v in range(x.size)) for g in range(x.monoid.size)]
    ops_y = [tuple(y.table[v][g] for v in range(y.size)) for g in range(y.monoid.size)]
    return _struct_iso(x.size, ops_x, ops_y, y.size)


def find_left_action_iso(x: LeftAction, y: LeftAction) -> Optional[tuple[int, ...]]:
    if x.monoid != y.monoid:
        return None
    return find_right_action_iso(left_to_right(x), left_to_right(y))


def find_biaction_iso(a: BiAction, b: BiAction) -> Optional[tuple[int, ...]]:
    if a.left_monoid != b.left_monoid or a.right_monoid != b.right_monoid:
        return None
    ops_a = [tuple(a.left_table[v][g] for v in range(a.size)) for g in range(a.left_monoid.size)]
    ops_a += [tuple(a.right_table[v][g] for v in range(a.size)) for g in range(a.right_monoid.size)]
    ops_b = [tuple(b.left_table[v][g] for v in range(b.size)) for g in range(b.left_monoid.size)]
    ops_b += [tuple(b.right_table[v][g] for v in range(b.size)) for g in range(b.right_monoid.size)]
    return _struct_iso(a.size, ops_a, ops_b, b.size)
