"""Command-line surface: validation, classification, factorizations,
closures, tensors, the Galois classification, slice collapses, and bounded
presentation enumeration.

Exit codes: 0 success, 2 validation error, 3 cap exceeded or undecided
outcomes (the undecided properties are listed in the report).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .actions import BiAction, LeftAction, RightAction
from .classify import ClassifyOptions, classify_biact, classify_hom
from .closures import factorable_closure
from .core import FiniteCategory, FiniteMonoid, SemigroupHom
from .errors import CapExceeded, MonoidGeomError, SchemaError, SizeCap
from .factorize import (
    collapse_cos_slice,
    collapse_slice,
    factor_pure_cs_biact,
    factor_pure_cs_hom,
    factor_tc_etale,
    factor_three,
)
from .galois import classify_lc_etale
from .io import FORMAT, Workspace, dump_action, dump_biaction, dump_hom, dump_monoid
from .presentations import Presentation, enumerate_presentation
from .tensor import compose_biacts, tensor


def _category_payload(cat: FiniteCategory) -> dict:
    return {
        "objects": list(cat.objects),
        "arrows": [{"label": a.label, "src": cat.objects[a.src], "dst": cat.objects[a.dst]} for a in cat.arrows],
        "identities": [cat.arrows[i].label for i in cat.identities],
    }


def _hom_payload(h: SemigroupHom) -> dict:
    return dump_hom(h)


def _part_payload(h: SemigroupHom) -> dict:
    report = classify_hom(h)
    return {
        "hom": dump_hom(h),
        "classification": {p: v.value for p, v in report.entries.items()},
    }


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load(args, path: str):
    ws = Workspace()
    for extra in getattr(args, "load", None) or []:
        ws.load_file(extra)
    return ws.load_file(path)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    results = []
    ws = Workspace()
    for path in args.files:
        obj = ws.load_file(path)
        results.append({"file": path, "kind": type(obj).__name__, "name": getattr(obj, "name", "")})
    _emit(args, {"format": FORMAT, "validated": results},
          "\n".join(f"ok: {r['kind']} {r['name']!r} from {r['file']}" for r in results))
    return 0


def _cmd_classify_hom(args) -> int:
    h = _load(args, args.file)
    if not isinstance(h, SemigroupHom):
        raise SchemaError(f"{args.file} does not contain a hom")
    report = classify_hom(h)
    payload = {"format": FORMAT, **report.to_json()}
    lines = [f"classification of {h.describe()}:"]
    for p, v in report.entries.items():
        lines.append(f"  {p:24s} {v.value}   [{v.method}]")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_classify_biact(args) -> int:
    a = _load(args, args.file)
    if not isinstance(a, BiAction):
        raise SchemaError(f"{args.file} does not contain a biaction")
    report = classify_biact(a, ClassifyOptions(congruence_cap=args.congruence_cap))
    undecided = report.undecided_properties()
    payload = {"format": FORMAT, **report.to_json(), "undecided": list(undecided)}
    lines = [f"classification of {a.name or 'biaction'}:"]
    for p, v in report.entries.items():
        lines.append(f"  {p:24s} {v.value}   [{v.method}]")
    if undecided:
        lines.append(f"undecided at this scale: {', '.join(undecided)}")
    _emit(args, payload, "\n".join(lines))
    return 3 if undecided else 0


def _cmd_factorize(args) -> int:
    obj = _load(args, args.file)
    system = args.system
    if isinstance(obj, BiAction):
        if system != "pure-cs":
            raise SchemaError("biactions only support --system pure-cs")
        f = factor_pure_cs_biact(obj)
        payload: dict[str, Any] = {
            "format": FORMAT,
            "system": system,
            "components_object": dump_action(f.components_object),
            "cos_elements_category": _category_payload(f.cos_elements_category),
            "intermediate_monoid": dump_monoid(f.intermediate_monoid) if f.intermediate_monoid else None,
            "intermediate_hom": dump_hom(f.intermediate_hom) if f.intermediate_hom else None,
            "intermediate_biaction": dump_biaction(f.intermediate_biaction) if f.intermediate_biaction else None,
        }
        text = (
            f"pure / complete-spread factorization of {obj.name or 'biaction'}:\n"
            f"  components: {len(f.components_object.carrier)}\n"
            f"  intermediate monoid: {f.intermediate_monoid.name if f.intermediate_monoid else 'not a monoid topos'}"
        )
        _emit(args, payload, text)
        return 0
    if not isinstance(obj, SemigroupHom):
        raise SchemaError(f"{args.file} does not contain a hom or biaction")
    h = obj
    if system in ("si", "hl", "three"):
        f = factor_three(h)
        if system == "three":
            parts = {"pi": f.pi, "psi": f.psi, "iota": f.iota}
        elif system == "si":
            parts = {"surjection": f.surjection_part(), "inclusion": f.iota}
        else:
            parts = {"hyperconnected": f.pi, "localic": f.localic_part()}
        payload = {
            "format": FORMAT,
            "system": system,
            "parts": {name: _part_payload(part) for name, part in parts.items()},
        }
        text_lines = [f"{system} factorization of {h.describe()}:"]
        for name, part in parts.items():
            text_lines.append(f"  {name}: {part.domain.name} -> {part.codomain.name}")
        _emit(args, payload, "\n".join(text_lines))
        return 0
    if system == "tc-etale":
        f = factor_tc_etale(h)
        payload = {
            "format": FORMAT,
            "system": system,
            "corner_closure": dump_monoid(f.corner_closure),
            "closure": dump_monoid(f.closure),
            "k": _part_payload(f.k),
            "j1": _part_payload(f.j1),
            "slice_object": dump_action(f.slice_object.action),
            "elements_category": _category_payload(f.elements_category.category),
            "slice_monoid": dump_monoid(f.slice_monoid) if f.slice_monoid else None,
            "slice_hom": _part_payload(f.slice_hom) if f.slice_hom else None,
        }
        text = (
            f"terminal-connected / etale factorization of {h.describe()}:\n"
            f"  corner closure: {{{', '.join(f.corner_closure.elements)}}}\n"
            f"  closure: {{{', '.join(f.closure.elements)}}}\n"
            f"  slice object size: {f.slice_object.action.size}\n"
            f"  etale part monoid: {f.slice_monoid.name if f.slice_monoid else 'not collapsed'}"
        )
        _emit(args, payload, text)
        return 0
    if system == "pure-cs":
        f = factor_pure_cs_hom(h)
        payload = {
            "format": FORMAT,
            "system": system,
            "corner_closure": dump_monoid(f.corner_closure) if f.corner_closure else None,
            "closure": dump_monoid(f.closure) if f.closure else None,
            "k": _part_payload(f.k) if f.k else None,
            "j1": _part_payload(f.j1) if f.j1 else None,
            "components_object": dump_action(f.components_object),
            "cos_elements_category": _category_payload(f.cos_elements_category),
            "intermediate_monoid": dump_monoid(f.intermediate_monoid) if f.intermediate_monoid else None,
            "intermediate_hom": _part_payload(f.intermediate_hom) if f.intermediate_hom else None,
        }
        text = (
            f"pure / complete-spread factorization of {h.describe()}:\n"
            f"  left closure in corner: {{{', '.join(f.corner_closure.elements)}}}\n"
            f"  left closure: {{{', '.join(f.closure.elements)}}}\n"
            f"  complete-spread part monoid: {f.intermediate_monoid.name if f.intermediate_monoid else 'not collapsed'}"
        )
        _emit(args, payload, text)
        return 0
    raise SchemaError(f"unknown factorization system {system!r}")


def _cmd_closure(args) -> int:
    m = _load(args, args.file)
    if not isinstance(m, FiniteMonoid):
        raise SchemaError(f"{args.file} does not contain a monoid")
    seed_labels: list[str] = []
    for chunk in args.seed:
        seed_labels.extend(s for s in chunk.split(",") if s)
    seed = [m.index(l) for l in seed_labels]
    res = factorable_closure(m, seed, args.side)
    payload = {
        "format": FORMAT,
        "monoid": m.name,
        "side": args.side,
        "seed": list(m.labels(res.seed)),
        "closure": list(res.labels()),
        "is_everything": res.is_everything(),
        "trace": [
            {"element": m.label(s.element), "rule": s.rule, "premises": list(m.labels(s.premises))}
            for s in (res.trace or ())
        ],
    }
    text = (
        f"{args.side}-factorable closure of {{{', '.join(m.labels(res.seed))}}} in {m.name}: "
        f"{{{', '.join(res.labels())}}}"
        + (" (everything)" if res.is_everything() else "")
    )
    _emit(args, payload, text)
    return 0


def _cmd_tensor(args) -> int:
    ws = Workspace()
    x = ws.load_file(args.x_file)
    a = ws.load_file(args.a_file)
    if not isinstance(x, RightAction):
        raise SchemaError(f"{args.x_file} must contain a right action")
    if not isinstance(a, (LeftAction, BiAction)):
        raise SchemaError(f"{args.a_file} must contain a left action or biaction")
    t = tensor(x, a)
    payload = {
        "format": FORMAT,
        "classes": list(t.labels),
        "count": t.num_classes,
        "induced_action": dump_action(t.induced_action) if t.induced_action else None,
    }
    _emit(args, payload, f"tensor has {t.num_classes} classes: {', '.join(t.labels)}")
    return 0


def _cmd_compose(args) -> int:
    ws = Workspace()
    a = ws.load_file(args.a_file)
    b = ws.load_file(args.b_file)
    if not isinstance(a, BiAction) or not isinstance(b, BiAction):
        raise SchemaError("compose expects two biaction files")
    out = compose_biacts(a, b)
    payload = {"format": FORMAT, "composite": dump_biaction(out)}
    _emit(args, payload, f"composite biaction over ({out.left_monoid.name}, {out.right_monoid.name}), carrier size {out.size}")
    return 0


def _cmd_galois(args) -> int:
    m = _load(args, args.file)
    if not isinstance(m, FiniteMonoid):
        raise SchemaError(f"{args.file} does not contain a monoid")
    cls = classify_lc_etale(m)
    payload = {
        "format": FORMAT,
        "groupification": {
            "group": dump_monoid(cls.groupification.group),
            "eta": {m.label(i): cls.groupification.group.label(v) for i, v in enumerate(cls.groupification.eta.map)},
        },
        "entries": [
            {
                "subgroup": list(cls.groupification.group.labels(e.subgroup)),
                "monoid": dump_monoid(e.monoid),
                "hom": {e.monoid.label(i): m.label(v) for i, v in enumerate(e.hom.map)},
                "witnesses": e.condition_witnesses,
            }
            for e in cls.entries
        ],
    }
    lines = [f"groupification of {m.name}: {cls.groupification.group.name} with {cls.groupification.group.size} elements"]
    for e in cls.entries:
        lines.append(
            f"  subgroup {{{', '.join(cls.groupification.group.labels(e.subgroup))}}} -> monoid {{{', '.join(e.monoid.elements)}}}"
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_slice(args) -> int:
    x = _load(args, args.action)
    if isinstance(x, RightAction):
        res = collapse_slice(x.monoid, x)
    elif isinstance(x, LeftAction):
        res = collapse_cos_slice(x.monoid, x)
    else:
        raise SchemaError(f"{args.action} does not contain an action")
    if res is None:
        payload = {"format": FORMAT, "strong_generator": None, "monoid": None, "inclusion": None}
        _emit(args, payload, "no strong generator: the slice is not a monoid topos")
        return 0
    payload = {
        "format": FORMAT,
        "strong_generator": x.carrier[res.generator],
        "monoid": dump_monoid(res.monoid),
        "inclusion": dump_hom(res.inclusion),
    }
    _emit(
        args,
        payload,
        f"strong generator {x.carrier[res.generator]!r}; stabilizer monoid {{{', '.join(res.monoid.elements)}}}",
    )
    return 0


def _cmd_present(args) -> int:
    p = _load(args, args.file)
    if not isinstance(p, Presentation):
        raise SchemaError(f"{args.file} does not contain a presentation")
    m = enumerate_presentation(p)
    payload = {"format": FORMAT, "monoid": dump_monoid(m)}
    _emit(args, payload, f"enumerated {m.name}: {m.size} elements: {', '.join(m.elements)}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoid-geom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--load", action="append", metavar="FILE", help="preload named objects")

    p = sub.add_parser("validate", help="validate object files")
    p.add_argument("files", nargs="+")
    common(p)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("classify-hom", help="classify the morphism induced by a hom")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_classify_hom)

    p = sub.add_parser("classify-biact", help="classify the morphism induced by a biaction")
    p.add_argument("file")
    p.add_argument("--congruence-cap", type=int, default=5)
    common(p)
    p.set_defaults(fn=_cmd_classify_biact)

    p = sub.add_parser("factorize", help="compute a factorization")
    p.add_argument("--system", required=True, choices=["si", "hl", "three", "tc-etale", "pure-cs"])
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_factorize)

    p = sub.add_parser("closure", help="factorable closure of a subset")
    p.add_argument("--side", required=True, choices=["left", "right"])
    p.add_argument("--seed", action="append", required=True, metavar="LABELS", help="comma-separated labels")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_closure)

    p = sub.add_parser("tensor", help="tensor a right action with a left action or biaction")
    p.add_argument("x_file")
    p.add_argument("a_file")
    common(p)
    p.set_defaults(fn=_cmd_tensor)

    p = sub.add_parser("compose", help="compose two biactions")
    p.add_argument("a_file")
    p.add_argument("b_file")
    common(p)
    p.set_defaults(fn=_cmd_compose)

    p = sub.add_parser("galois", help="groupification and locally constant etale classification")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_galois)

    p = sub.add_parser("slice", help="collapse a slice topos to a monoid when possible")
    p.add_argument("--action", required=True)
    common(p)
    p.set_defaults(fn=_cmd_slice)

    p = sub.add_parser("present", help="enumerate a finitely presented monoid")
    p.add_argument("--file", required=True)
    common(p)
    p.set_defaults(fn=_cmd_present)

    return parser


def run_command(argv: Sequence[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SizeCap, CapExceeded) as err:
        payload = {"format": FORMAT, "error": err.payload()}
        if getattr(args, "json", False):
            print(json.dumps(payload, indent=2))
        else:
            print(f"error [{err.code}]: {err}", file=sys.stderr)
        return 3
    except MonoidGeomError as err:
        payload = {"format": FORMAT, "error": err.payload()}
        if getattr(args, "json", False):
            print(json.dumps(payload, indent=2))
        else:
            print(f"error [{err.code}]: {err}", file=sys.stderr)
        return 2
    except FileNotFoundError as err:
        print(f"error [io]: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
