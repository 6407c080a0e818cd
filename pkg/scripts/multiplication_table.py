"""Write the multiplication table of a Schubert ring of Gr(k, n).

    python3 scripts/multiplication_table.py --k 2 --n 4 --ring equivariant-quantum --format latex
"""

import argparse
from dataclasses import dataclass

from grasschub import GrContext
from grasschub.cli import PRODUCTS, latex_table


@dataclass
class TableConfig:
    k: int = 2
    n: int = 4
    ring: str = "equivariant-quantum"
    format: str = "text"
    out: str | None = None


def build_rows(cfg: TableConfig):
    ctx = GrContext(cfg.k, cfg.n)
    basis = [p for p in ctx.basis() if p]
    product = PRODUCTS[cfg.ring]
    return ctx, [(a, b, product(a, b, ctx)) for i, a in enumerate(basis) for b in basis[i:]]


def render(cfg: TableConfig) -> str:
    ctx, rows = build_rows(cfg)
    if cfg.format == "latex":
        return latex_table(ctx, rows)
    return "\n".join(f"{a!r} * {b!r} = {x}" for a, b, x in rows)


def parse_args(argv=None) -> TableConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = TableConfig()
    p.add_argument("--k", type=int, default=defaults.k)
    p.add_argument("--n", type=int, default=defaults.n)
    p.add_argument("--ring", default=defaults.ring, choices=sorted(PRODUCTS))
    p.add_argument("--format", default=defaults.format, choices=("text", "latex"))
    p.add_argument("--out")
    return TableConfig(**vars(p.parse_args(argv)))


if __name__ == "__main__":
    cfg = parse_args()
    doc = render(cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
