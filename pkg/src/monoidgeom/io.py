"""JSON schemas and the named-object workspace.

All files carry a top-level ``"format": "monoid-geom/1"``. Loaders accept
exactly what the dumpers emit, so every value round-trips. Object kinds are
recognized by shape: a monoid has a ``table``, a hom a ``map``, an action a
``side``, a biaction a ``left_action``, a presentation ``generators``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Union

from .actions import BiAction, LeftAction, RightAction, left_action_by_labels, right_action_by_labels
from .core import FiniteMonoid, SemigroupHom, validate_monoid
from .errors import SchemaError, UnknownLabel
from .presentations import Presentation, presentation

FORMAT = "monoid-geom/1"

Obj = Union[FiniteMonoid, SemigroupHom, RightAction, LeftAction, BiAction, Presentation]


def _require(data: dict, key: str, context: str) -> Any:
    if key not in data:
        raise SchemaError(f"missing key {key!r} in {context}")
    return data[key]


def _check_format(data: dict, context: str) -> None:
    fmt = data.get("format")
    if fmt is not None and fmt != FORMAT:
        raise SchemaError(f"unsupported format {fmt!r} in {context} (expected {FORMAT!r})")


# ---------------------------------------------------------------------------
# monoids


def load_monoid(data: dict, workspace: "Workspace | None" = None) -> FiniteMonoid:
    _check_format(data, "monoid")
    name = data.get("name", "M")
    elements = _require(data, "elements", f"monoid {name!r}")
    identity = _require(data, "identity", f"monoid {name!r}")
    table = _require(data, "table", f"monoid {name!r}")
    return validate_monoid(elements, identity, table, name)


def dump_monoid(m: FiniteMonoid) -> dict:
    return {
        "format": FORMAT,
        "name": m.name,
        "elements": list(m.elements),
        "identity": m.label(m.identity),
        "table": [[m.label(v) for v in row] for row in m.table],
    }


def _resolve_monoid(ref: Any, workspace: "Workspace | None", context: str) -> FiniteMonoid:
    if isinstance(ref, str):
        if workspace is None or ref not in workspace.monoids:
            raise SchemaError(f"unresolved monoid reference {ref!r} in {context}")
        return workspace.monoids[ref]
    if isinstance(ref, dict):
        return load_monoid(ref)
    raise SchemaError(f"monoid reference must be a name or an inline object in {context}")


# ---------------------------------------------------------------------------
# homs


def load_hom(data: dict, workspace: "Workspace | None" = None) -> SemigroupHom:
    _check_format(data, "hom")
    name = data.get("name", "")
    domain = _resolve_monoid(_require(data, "domain", "hom"), workspace, "hom domain")
    codomain = _resolve_monoid(_require(data, "codomain", "hom"), workspace, "hom codomain")
    mapping = _require(data, "map", "hom")
    out = []
    for l in domain.elements:
        if l not in mapping:
            raise UnknownLabel(l, "hom map (missing key)")
        out.append(codomain.index(mapping[l]))
    return SemigroupHom(domain, codomain, tuple(out), name)


def dump_hom(h: SemigroupHom) -> dict:
    return {
        "format": FORMAT,
        "name": h.name,
        "domain": dump_monoid(h.domain),
        "codomain": dump_monoid(h.codomain),
        "map": {h.domain.label(i): h.codomain.label(v) for i, v in enumerate(h.map)},
    }


# ---------------------------------------------------------------------------
# actions


def load_action(data: dict, workspace: "Workspace | None" = None) -> Union[RightAction, LeftAction]:
    _check_format(data, "action")
    name = data.get("name", "")
    monoid = _resolve_monoid(_require(data, "monoid", "action"), workspace, "action monoid")
    side = _require(data, "side", "action")
    carrier = _require(data, "carrier", "action")
    act = _require(data, "action", "action")
    if side == "right":
        return right_action_by_labels(monoid, carrier, act, name)
    if side == "left":
        return left_action_by_labels(monoid, carrier, act, name)
    raise SchemaError(f"side must be 'right' or 'left', got {side!r}")


def dump_action(x: Union[RightAction, LeftAction]) -> dict:
    side = "right" if isinstance(x, RightAction) else "left"
    return {
        "format": FORMAT,
        "name": x.name,
        "monoid": dump_monoid(x.monoid),
        "side": side,
        "carrier": list(x.carrier),
        "action": {
            x.carrier[v]: {x.monoid.label(g): x.carrier[x.table[v][g]] for g in range(x.monoid.size)}
            for v in range(x.size)
        },
    }


def load_biaction(data: dict, workspace: "Workspace | None" = None) -> BiAction:
    _check_format(data, "biaction")
    name = data.get("name", "")
    left_monoid = _resolve_monoid(_require(data, "left_monoid", "biaction"), workspace, "biaction")
    right_monoid = _resolve_monoid(_require(data, "right_monoid", "biaction"), workspace, "biaction")
    carrier = list(_require(data, "carrier", "biaction"))
    left = left_action_by_labels(left_monoid, carrier, _require(data, "left_action", "biaction"))
    right = right_action_by_labels(right_monoid, carrier, _require(data, "right_action", "biaction"))
    return BiAction(left_monoid, right_monoid, tuple(carrier), left.table, right.table, name)


def dump_biaction(a: BiAction) -> dict:
    return {
        "format": FORMAT,
        "name": a.name,
        "left_monoid": dump_monoid(a.left_monoid),
        "right_monoid": dump_monoid(a.right_monoid),
        "carrier": list(a.carrier),
        "left_action": {
            a.carrier[v]: {a.left_monoid.label(g): a.carrier[a.left_table[v][g]] for g in range(a.left_monoid.size)}
            for v in range(a.size)
        },
        "right_action": {
            a.carrier[v]: {a.right_monoid.label(g): a.carrier[a.right_table[v][g]] for g in range(a.right_monoid.size)}
            for v in range(a.size)
        },
    }


# ---------------------------------------------------------------------------
# presentations


def load_presentation(data: dict, workspace: "Workspace | None" = None) -> Presentation:
    _check_format(data, "presentation")
    generators = list(_require(data, "generators", "presentation"))
    relations = [tuple(pair) for pair in _require(data, "relations", "presentation")]
    for pair in relations:
        if len(pair) != 2 or not all(isinstance(w, str) for w in pair):
            raise SchemaError("each relation must be a pair of word strings")
    max_elements = _require(data, "max_elements", "presentation")
    if not isinstance(max_elements, int):
        raise SchemaError("max_elements must be an integer")
    return presentation(generators, relations, max_elements)


def dump_presentation(p: Presentation) -> dict:
    return {
        "format": FORMAT,
        "generators": list(p.generators),
        "relations": [[" ".join(l), " ".join(r)] for l, r in p.relations],
        "max_elements": p.max_elements,
    }


# ---------------------------------------------------------------------------
# dispatch and workspace


def load_object(data: dict, workspace: "Workspace | None" = None) -> Obj:
    if not isinstance(data, dict):
        raise SchemaError("top level must be a JSON object")
    if "table" in data:
        return load_monoid(data, workspace)
    if "map" in data:
        return load_hom(data, workspace)
    if "left_action" in data:
        return load_biaction(data, workspace)
    if "side" in data:
        return load_action(data, workspace)
    if "generators" in data:
        return load_presentation(data, workspace)
    raise SchemaError("unrecognized object shape (expected monoid/hom/action/biaction/presentation)")


def dump_object(obj: Obj) -> dict:
    if isinstance(obj, FiniteMonoid):
        return dump_monoid(obj)
    if isinstance(obj, SemigroupHom):
        return dump_hom(obj)
    if isinstance(obj, (RightAction, LeftAction)):
        return dump_action(obj)
    if isinstance(obj, BiAction):
        return dump_biaction(obj)
    if isinstance(obj, Presentation):
        return dump_presentation(obj)
    raise SchemaError(f"cannot dump object of type {type(obj).__name__}")


@dataclass
class Workspace:
    """Named objects loaded from files, with provenance. Names are unique."""

    monoids: dict[str, FiniteMonoid] = field(default_factory=dict)
    homs: dict[str, SemigroupHom] = field(default_factory=dict)
    actions: dict[str, Union[RightAction, LeftAction]] = field(default_factory=dict)
    biactions: dict[str, BiAction] = field(default_factory=dict)
    provenance: dict[str, tuple[str, str]] = field(default_factory=dict)

    def add(self, obj: Obj, source: str = "<memory>") -> Obj:
        table = {
            FiniteMonoid: self.monoids,
            SemigroupHom: self.homs,
            RightAction: self.actions,
            LeftAction: self.actions,
            BiAction: self.biactions,
        }.get(type(obj))
        if table is None:
            return obj
        name = getattr(obj, "name", "")
        if name:
            if name in self.provenance:
                raise SchemaError(f"duplicate name {name!r} (already loaded from {self.provenance[name][0]})")
            table[name] = obj  # type: ignore[index]
            self.provenance[name] = (source, FORMAT)
        if isinstance(obj, SemigroupHom):
            for m in (obj.domain, obj.codomain):
                if m.name and m.name not in self.monoids:
                    self.monoids[m.name] = m
                    self.provenance.setdefault(m.name, (source, FORMAT))
        return obj

    def load_file(self, path: Union[str, Path]) -> Obj:
        path = Path(path)
        data = json.loads(path.read_text())
        obj = load_object(data, self)
        return self.add(obj, str(path))


def load_path(path: Union[str, Path], workspace: "Workspace | None" = None) -> Obj:
    data = json.loads(Path(path).read_text())
    return load_object(data, workspace)
