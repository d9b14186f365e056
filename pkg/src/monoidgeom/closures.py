"""Right- and left-factorable submonoid closures.

A subset S of a monoid is right-factorable when x in S and xy in S force
y in S (dually on the left). The closure of a seed set is the least
right-factorable (resp. left-factorable) submonoid containing it; these
closures decide terminal-connectedness and purity of the induced geometric
morphisms, so they carry derivation traces for checkable evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import FiniteMonoid
from .errors import UnknownLabel


@dataclass(frozen=True)
class TraceStep:
    element: int
    rule: str  # "seed" | "identity" | "mul" | "factor"
    premises: tuple[int, ...]


@dataclass(frozen=True)
class FactorableClosureResult:
    monoid: FiniteMonoid
    seed: tuple[int, ...]
    side: str  # "right" | "left"
    closure: tuple[int, ...]
    trace: Optional[tuple[TraceStep, ...]] = None

    def contains(self, x: int) -> bool:
        return x in set(self.closure)

    def is_everything(self) -> bool:
        return len(self.closure) == self.monoid.size

    def labels(self) -> tuple[str, ...]:
        return self.monoid.labels(self.closure)


def factorable_closure(
    m: FiniteMonoid,
    seed: Iterable[int],
    side: str = "right",
    want_trace: bool = True,
) -> FactorableClosureResult:
    """Least fixpoint of: add the identity; close under multiplication;
    and (side="right") if x and xy are in, add y; (side="left") if y and
    xy are in, add x.

    Deterministic worklist with incremental pair-indexed rule firing: each
    newly added element is paired against the members known so far, so the
    trace records exactly one derivation per element.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    seed = tuple(sorted(set(seed)))
    for s in seed:
        if not (0 <= s < m.size):
            raise UnknownLabel(str(s), f"closure seed over {m.name!r}")

    member = [False] * m.size
    order: list[int] = []
    trace: list[TraceStep] = []

    def add(x: int, rule: str, premises: tuple[int, ...]) -> None:
        if not member[x]:
            member[x] = True
            order.append(x)
            if want_trace:
                trace.append(TraceStep(x, rule, premises))

    add(m.identity, "identity", ())
    for s in seed:
        add(s, "seed", ())

    # Worklist: pair each new element against all current members, firing the
    # product rule both ways and the division rule for the requested side.
    queue = list(order)
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        snapshot = [v for v in range(m.size) if member[v]]
        for y in snapshot:
            for a, b in ((x, y), (y, x)):
                p = m.table[a][b]
                if not member[p]:
                    add(p, "mul", (a, b))
                    queue.append(p)
            if side == "right":
                # x in S and x*c in S  =>  c in S
                for a, b in ((x, y), (y, x)):
                    for c in range(m.size):
                        if m.table[a][c] == b and not member[c]:
                            add(c, "factor", (a, b))
                            queue.append(c)
            else:
                # c in S via: x*? no -- left: c*a = b with a, b in S  =>  c in S
                for a, b in ((x, y), (y, x)):
                    for c in range(m.size):
                        if m.table[c][a] == b and not member[c]:
                            add(c, "factor", (a, b))
                            queue.append(c)

    closure = tuple(v for v in range(m.size) if member[v])
    return FactorableClosureResult(m, seed, side, closure, tuple(trace) if want_trace else None)


def closure_equals_all(m: FiniteMonoid, seed: Iterable[int], side: str = "right") -> bool:
    return factorable_closure(m, seed, side, want_trace=False).is_everything()


def is_factorable_subset(m: FiniteMonoid, subset: Iterable[int], side: str = "right") -> bool:
    """Direct check of the factorability condition on a subset (no closure)."""
    s = set(subset)
    if side == "right":
        return all(
            m.table[x][y] not in s or y in s for x in s for y in range(m.size)
        )
    return all(m.table[y][x] not in s or y in s for x in s for y in range(m.size))


def replay_trace(result: FactorableClosureResult) -> bool:
    """Re-derive the closure from its trace: every step must follow from the
    previously established members by its stated rule."""
    if result.trace is None:
        return False
    m = result.monoid
    have: set[int] = set()
    for step in result.trace:
        if step.rule == "identity":
            if step.element != m.identity:
                return False
        elif step.rule == "seed":
            if step.element not in result.seed:
                return False
        elif step.rule == "mul":
            a, b = step.premises
            if a not in have or b not in have or m.table[a][b] != step.element:
                return False
        elif step.rule == "factor":
            a, b = step.premises
            if a not in have or b not in have:
                return False
            if result.side == "right":
                if m.table[a][step.element] != b:
                    return False
            else:
                if m.table[step.element][a] != b:
                    return False
        else:
            return False
        have.add(step.element)
    return have == set(result.closure)
