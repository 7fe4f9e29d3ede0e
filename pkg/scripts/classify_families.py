"""Pairwise verdicts for a list of named graphs, plus the resulting classes.

    python3 scripts/classify_families.py --graphs line:3 line:4 kbipartite:3:3 kbipartite:2:5 star:3 star:4
    python3 scripts/classify_families.py --catalog 4 --out catalog4.json
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from _config import parse_config

from gfr.distinguish import classify_catalog
from gfr.families import FamilySpec, graph_catalog


@dataclass(frozen=True)
class Config:
    """Classify graphs by what the distinguisher can prove about their factors."""

    graphs: tuple[str, ...] = ("line:3", "line:4", "line:5", "cycle:5", "cycle:6", "kbipartite:3:3", "kbipartite:2:5", "star:3", "star:4")
    catalog: int = 0  # if > 0, use every connected graph with this many vertices or fewer instead
    strict: bool = False
    out: str = ""


def load(cfg: Config):
    if cfg.catalog > 0:
        from gfr.graph import is_connected

        gs = [g for g in graph_catalog(cfg.catalog) if len(g) and is_connected(g)]
        return [" ".join(f"{u}-{v}" for u, v in g.edges()) or "K1" for g in gs], gs
    return list(cfg.graphs), [FamilySpec.parse(s).build() for s in cfg.graphs]


def main() -> None:
    cfg = parse_config(Config)
    names, graphs = load(cfg)
    report = classify_catalog(graphs, strict=cfg.strict)
    counts = Counter(v.kind.value for v in report.verdicts.values())
    print(f"{len(graphs)} graphs, {len(report.verdicts)} pairs: " + ", ".join(f"{k} {n}" for k, n in sorted(counts.items())))
    print(f"{len(report.classes)} classes:")
    for cls in report.classes:
        print("  " + " | ".join(names[i] for i in cls))
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True)
        print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
