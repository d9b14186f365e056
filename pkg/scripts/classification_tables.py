#!/usr/bin/env python3
"""Print the classification table of every semigroup hom between the small
fixture monoids, plus the worked-example morphisms. Useful for eyeballing
how the properties interact at desk scale.

Usage: python3 scripts/classification_tables.py [--max-order 3]
"""

from __future__ import annotations

import argparse

import monoidgeom as mg
from monoidgeom import zoo
from monoidgeom.classify import PROPERTIES

SHORT = {
    "surjection": "surj",
    "inclusion": "incl",
    "injection": "inj",
    "hyperconnected": "hc",
    "localic": "loc",
    "terminal_connected": "tc",
    "etale": "et",
    "pure": "pure",
    "complete_spread": "cs",
    "spread": "spr",
    "locally_constant_etale": "lce",
    "dominant": "dom",
    "essential": "ess",
}


def fmt(value) -> str:
    if value is True:
        return "+"
    if value is False:
        return "."
    return "?"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=3)
    args = parser.parse_args()

    header = f"{'hom':34s} " + " ".join(f"{SHORT[p]:>4s}" for p in PROPERTIES)
    print(header)
    print("-" * len(header))

    named = zoo.hom_fixtures()
    seen = set()
    rows = []
    for h in named:
        rows.append((h.describe(), h))
        seen.add((h.domain.name, h.codomain.name, h.map))
    for m in zoo.fixtures_upto(args.max_order):
        for n in zoo.fixtures_upto(args.max_order):
            for h in mg.enumerate_semigroup_homs(m, n):
                key = (m.name, n.name, h.map)
                if key not in seen:
                    seen.add(key)
                    label = f"{m.name}->{n.name} {dict(zip(m.elements, n.labels(h.map)))}"
                    rows.append((label, h))

    for label, h in rows:
        report = mg.classify_hom(h)
        cells = " ".join(f"{fmt(report.value(p)):>4s}" for p in PROPERTIES)
        print(f"{label[:34]:34s} {cells}")
    print(f"\n{len(rows)} homs; + true, . false, ? undecided")


if __name__ == "__main__":
    main()
