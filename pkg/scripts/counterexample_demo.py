"""Saturate {-1 + aX, -1 + bY} under the order (1 sqrt2) and tabulate LC valuations.

    python3 -u scripts/counterexample_demo.py --depth 12 [--json out.json]
"""

import argparse
import json
import time
from dataclasses import dataclass

from serreloc.scalars import format_quad, quad_to_decimal
from serreloc.serrering import bezout_serre, counterexample_report, counterexample_setup


@dataclass
class DemoConfig:
    depth: int = 10
    bezout_depth: int = 10
    json_path: str | None = None


def run(cfg: DemoConfig) -> dict:
    t0 = time.perf_counter()
    report = counterexample_report(cfg.depth)
    elapsed = time.perf_counter() - t0
    print(f"{'gen':>3} {'new':>4}  {'min LC valuation':<18} approx")
    for q, row in enumerate(report.rows):
        m = report.min_valuations[q]
        shown = "-" if m is None else format_quad(m)
        approx = "" if m is None else quad_to_decimal(m, 12)
        print(f"{q:>3} {len(row):>4}  {shown:<18} {approx}")
    print(f"saturation to depth {cfg.depth}: {elapsed:.2f}s, stop={report.stop}")
    print(f"unit LC found: {report.unit_lc_found}; running minimum non-increasing: "
          f"{report.running_min_nonincreasing}; per-generation minimum strictly decreasing: "
          f"{report.strictly_decreasing}")
    _, order, f, g = counterexample_setup()
    out = bezout_serre(f, g, order, depth_limit=cfg.bezout_depth)
    print(f"Bezout search under (1 sqrt2), depth {cfg.bezout_depth}: {out.status}")
    print(f"Bezout search under lex: {report.lex_contrast.status}")
    data = report.to_json()
    data["bezout_irrational"] = out.status
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(data, fh, indent=2)
    return data


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=DemoConfig.depth)
    ap.add_argument("--bezout-depth", type=int, default=DemoConfig.bezout_depth)
    ap.add_argument("--json", dest="json_path")
    a = ap.parse_args()
    run(DemoConfig(a.depth, a.bezout_depth, a.json_path))


if __name__ == "__main__":
    main()
