"""Monic membership before and after the monomial transport phi_M.

For random generator sets and random nonnegative rank-n matrices M, decide
whether <G> contains an element with unit leading coefficient under the order
of M, and whether <phi_M G> does under lex.  Reports agreement counts and
timing per ring.

    python3 -u scripts/transfer_experiment.py --instances 200 --rings Zp:2 Zp:3 Z
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from serreloc.coeffrings import ring_from_descriptor
from serreloc.monorder import idlex_order, order_from_matrix
from serreloc.oracle import InstanceGen
from serreloc.polyring import phi_m
from serreloc.sgroebner import monic_membership


@dataclass
class TransferConfig:
    instances: int = 100
    rings: list = field(default_factory=lambda: ["Zp:2", "Z"])
    n: int = 2
    max_degree: int = 3
    depth: int = 8
    size_limit: int = 400
    seed: int = 11


def _conclusive(res) -> bool:
    return res.found or res.trace.stop == "stabilized"


def run_ring(cfg: TransferConfig, descriptor: str) -> Counter:
    R = ring_from_descriptor(descriptor)
    gen = InstanceGen(seed=cfg.seed, max_degree=cfg.max_degree)
    counts: Counter = Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.instances):
        G = gen.generators(R, cfg.n)
        M = gen.nonneg_matrix(cfg.n)
        here = monic_membership(G, order_from_matrix(M), cfg.depth, cfg.size_limit)
        there = monic_membership([phi_m(g, M) for g in G], idlex_order(cfg.n), cfg.depth,
                                 cfg.size_limit)
        if not (_conclusive(here) and _conclusive(there)):
            counts["inconclusive"] += 1
        elif here.found == there.found:
            counts["agree_found" if here.found else "agree_absent"] += 1
        else:
            counts["disagree"] += 1
            print(f"  disagreement: M={M} G={[str(g) for g in G]}")
    counts["seconds"] = round(time.perf_counter() - t0, 2)
    return counts


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=TransferConfig.instances)
    ap.add_argument("--rings", nargs="+", default=None)
    ap.add_argument("--n", type=int, default=TransferConfig.n)
    ap.add_argument("--seed", type=int, default=TransferConfig.seed)
    a = ap.parse_args()
    cfg = TransferConfig(a.instances, a.rings or TransferConfig().rings, a.n, seed=a.seed)
    for d in cfg.rings:
        print(d, dict(run_ring(cfg, d)), flush=True)


if __name__ == "__main__":
    main()
