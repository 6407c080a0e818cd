"""Time full-basis products per ring and cross-check each quantum product
against the rim-hook pipeline.

    python3 scripts/benchmark_products.py --grassmannians 2,5 3,6 3,7
"""

import argparse
import time
from dataclasses import dataclass, field

from grasschub import GrContext
from grasschub.cli import PRODUCTS
from grasschub.quantum import product_quantum, product_quantum_rimhook


@dataclass
class BenchConfig:
    grassmannians: list = field(default_factory=lambda: [(2, 5), (3, 6)])
    rings: tuple = ("classical", "quantum", "equivariant", "equivariant-quantum")
    check_quantum: bool = True


@dataclass
class BenchResult:
    ctx: GrContext
    ring: str
    products: int
    seconds: float
    mismatches: int = 0


def run(cfg: BenchConfig) -> list:
    results = []
    for k, n in cfg.grassmannians:
        ctx = GrContext(k, n)
        basis = ctx.basis()
        pairs = [(a, b) for i, a in enumerate(basis) for b in basis[i:]]
        for ring in cfg.rings:
            start = time.perf_counter()
            for a, b in pairs:
                PRODUCTS[ring](a, b, ctx)
            res = BenchResult(ctx, ring, len(pairs), time.perf_counter() - start)
            if ring == "quantum" and cfg.check_quantum:
                res.mismatches = sum(product_quantum(a, b, ctx) != product_quantum_rimhook(a, b, ctx)
                                     for a, b in pairs)
            results.append(res)
    return results


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--grassmannians", nargs="+", default=["2,5", "3,6"], help="k,n pairs")
    args = p.parse_args(argv)
    cfg = BenchConfig(grassmannians=[tuple(map(int, s.split(","))) for s in args.grassmannians])
    for r in run(cfg):
        extra = f"  rim-hook mismatches: {r.mismatches}" if r.ring == "quantum" else ""
        print(f"{str(r.ctx):9s} {r.ring:20s} {r.products:5d} products {r.seconds:8.3f}s{extra}")


if __name__ == "__main__":
    main()
