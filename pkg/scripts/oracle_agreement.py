"""Compare saturation-based term membership with the bounded brute-force oracle.

A disagreement where the engine says "member" and the oracle says "not a
member" can be an artifact of the oracle's multiplier bound; raise
--multiplier-degree to rule that out.

    python3 -u scripts/oracle_agreement.py --seeds 1 2 3 --rings Zp:2 Zmod:2^3 Z Vsqrt2
"""

import argparse
import time
from dataclasses import dataclass, field

from serreloc.coeffrings import ring_from_descriptor
from serreloc.monorder import grlex_order, lex_order
from serreloc.oracle import InstanceGen, OracleBounds, oracle_term_membership
from serreloc.polyring import MultiPoly
from serreloc.sgroebner import lt_ideal, lt_membership


@dataclass
class AgreementConfig:
    seeds: list = field(default_factory=lambda: [7])
    rings: list = field(default_factory=lambda: ["Zp:2", "Zmod:2^3", "Z"])
    instances: int = 20
    terms: int = 10
    multiplier_degree: int = 4
    depth: int = 8
    size_limit: int = 300


def run(cfg: AgreementConfig) -> int:
    total_dis = 0
    for seed in cfg.seeds:
        for d in cfg.rings:
            R = ring_from_descriptor(d)
            gen = InstanceGen(seed=seed, max_degree=3)
            stops: dict = {}
            checks = dis = 0
            t0 = time.perf_counter()
            for k in range(cfg.instances):
                n = gen.rng.randint(1, 2)
                G = gen.generators(R, n)
                order = lex_order(n) if k % 2 else grlex_order(n)
                pres, trace = lt_ideal(G, order, cfg.depth, cfg.size_limit)
                stops[trace.stop] = stops.get(trace.stop, 0) + 1
                if trace.stop != "stabilized":
                    continue
                for _ in range(cfg.terms):
                    t = MultiPoly.monomial(R, n, gen.exponent(n, 4), gen.coefficient(R))
                    mine = lt_membership(pres, t)
                    theirs = oracle_term_membership(G, t, order, OracleBounds(cfg.multiplier_degree))
                    checks += 1
                    if mine != theirs:
                        dis += 1
                        print(f"  {d} seed {seed}: G={[str(g) for g in G]} t={t} "
                              f"engine={mine} oracle={theirs}")
            total_dis += dis
            print(f"seed {seed} {d}: stops={stops} checks={checks} disagreements={dis} "
                  f"({time.perf_counter() - t0:.2f}s)", flush=True)
    return total_dis


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[7])
    ap.add_argument("--rings", nargs="+", default=None)
    ap.add_argument("--instances", type=int, default=AgreementConfig.instances)
    ap.add_argument("--multiplier-degree", type=int, default=AgreementConfig.multiplier_degree)
    a = ap.parse_args()
    cfg = AgreementConfig(a.seeds, a.rings or AgreementConfig().rings, a.instances,
                          multiplier_degree=a.multiplier_degree)
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
