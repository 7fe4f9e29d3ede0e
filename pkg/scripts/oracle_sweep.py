"""Run every property suite and write one JSON report.

    python3 scripts/oracle_sweep.py --seed 7 --jobs 4 --out sweep.json

Sample counts default to the library defaults; ``--scale`` multiplies them.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from _config import parse_config

from gfr.verify import DEFAULT_SAMPLES, SUITES, run_suite


@dataclass(frozen=True)
class Config:
    """Seeded sweep over all verification suites."""

    seed: int = 0
    scale: float = 1.0
    max_n: int = 7
    jobs: int = 1
    suites: tuple[str, ...] = SUITES
    out: str = ""


def main() -> int:
    cfg = parse_config(Config)
    report, worst = {"schema": 1, "seed": cfg.seed, "suites": {}}, 0
    for suite in cfg.suites:
        samples = max(1, round(DEFAULT_SAMPLES[suite] * cfg.scale))
        start = time.perf_counter()
        res = run_suite(suite, samples=samples, seed=cfg.seed, max_n=cfg.max_n, jobs=cfg.jobs)
        elapsed = time.perf_counter() - start
        print(f"{suite:8s} {'pass' if res.passed else 'FAIL'}  {res.checked:6d} checked  {elapsed:7.2f}s")
        for f in res.failures[:5]:
            print(f.render())
        report["suites"][suite] = res.to_json()
        worst = max(worst, res.exit_code)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
