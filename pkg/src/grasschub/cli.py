"""Command line interface: ``grasschub <command> --gr K N [options] ...``.

Exit status is 0 on success, 2 for malformed arguments and 1 when the
arguments parse but violate a precondition (for example a partition that
does not fit the rectangle).
"""

from __future__ import annotations

import argparse
import json
import sys

from .classexpr import CLASSICAL, EQ_QUANTUM, EQUIVARIANT, QUANTUM, RINGS, ClassExpr, RingDisciplineError
from .eq_quantum import eq_quantum_pieri, f_tilde_map, product_eq_quantum
from .equivariant import equivariant_pieri, product_equivariant, reduce_shape
from .localization import LocalizationError, gkm_check, restrict_expr, verify_product_by_localization
from .lr import lr_coefficient
from .partitions import GrContext, Partition, PartitionError, add_strip, parse_partition
from .polyring import ONE
from .quantum import (
    DegreeMismatch,
    product_classical,
    product_quantum,
    product_quantum_rimhook,
    quantum_lr_detail,
    quantum_pieri_column,
    quantum_pieri_row,
    rim_hook_reduce,
)

PRODUCTS = {
    CLASSICAL: product_classical,
    QUANTUM: product_quantum,
    EQUIVARIANT: product_equivariant,
    EQ_QUANTUM: product_eq_quantum,
}


class DomainError(ValueError):
    pass


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gr", nargs=2, type=int, metavar=("K", "N"), required=True,
                        help="the Grassmannian Gr(K, N)")
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")
    common.add_argument("-q", "--quiet", action="store_true", help="suppress diagnostics on stderr")

    def ring_opt(p, default=CLASSICAL):
        p.add_argument("--ring", choices=RINGS, default=default)

    parser = argparse.ArgumentParser(prog="grasschub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="product of two basis classes")
    ring_opt(p)
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)

    p = sub.add_parser("pieri", parents=[common], help="closed-form Pieri rule")
    ring_opt(p)
    p.add_argument("lam", type=_partition)
    p.add_argument("r", type=int, nargs="?", default=1)
    p.add_argument("--column", action="store_true", help="multiply by sigma_{1^r} instead of sigma_r")

    p = sub.add_parser("lr", parents=[common], help="classical Littlewood-Richardson coefficient")
    for name in ("lam", "mu", "nu"):
        p.add_argument(name, type=_partition)

    p = sub.add_parser("qlr", parents=[common], help="quantum LR coefficient via rim hooks")
    for name in ("lam", "mu", "nu"):
        p.add_argument(name, type=_partition)

    p = sub.add_parser("reduce", parents=[common], help="rewrite an arbitrary shape in the basis")
    ring_opt(p, default=QUANTUM)
    p.add_argument("lam", type=_partition)

    p = sub.add_parser("table", parents=[common], help="full multiplication table")
    ring_opt(p)

    p = sub.add_parser("restrict", parents=[common], help="fixed-point restrictions of hat-sigma_lam")
    p.add_argument("lam", type=_partition)

    p = sub.add_parser("verify", parents=[common], help="cross-check every basis product")
    ring_opt(p, default=EQUIVARIANT)
    return parser


# -- commands ---------------------------------------------------------------

def _emit_expr(expr: ClassExpr, fmt: str, explicit_unit: bool = False) -> str:
    if fmt == "json":
        return json.dumps(expr.to_json(), sort_keys=True)
    if fmt == "latex":
        return expr.to_latex()
    return expr.to_text(explicit_unit=explicit_unit)


def cmd_product(args, ctx):
    return _emit_expr(PRODUCTS[args.ring](args.lam, args.mu, ctx), args.format)


def cmd_pieri(args, ctx):
    lam = ctx.check(args.lam)
    if args.ring == EQUIVARIANT or args.ring == EQ_QUANTUM:
        if args.r != 1 or args.column:
            raise DomainError("the equivariant Pieri closed forms multiply by hat-sigma_1 only (r = 1)")
        expr = equivariant_pieri(lam, ctx) if args.ring == EQUIVARIANT else eq_quantum_pieri(lam, ctx)
    elif args.ring == QUANTUM:
        expr = (quantum_pieri_column if args.column else quantum_pieri_row)(lam, args.r, ctx)
    else:
        limit = ctx.k if args.column else ctx.n - ctx.k
        if not 1 <= args.r <= limit:
            raise DomainError(f"r must satisfy 1 <= r <= {limit}")
        shapes = add_strip(lam, args.r, "vertical" if args.column else "horizontal", ctx)
        expr = ClassExpr(ctx, CLASSICAL, {s: ONE for s in shapes})
    return _emit_expr(expr, args.format)


def cmd_lr(args, ctx):
    c = lr_coefficient(args.lam, args.mu, args.nu)
    if args.format == "json":
        return json.dumps({"lam": list(args.lam), "mu": list(args.mu), "nu": list(args.nu), "value": c})
    return str(c)


def cmd_qlr(args, ctx):
    try:
        res = quantum_lr_detail(args.lam, args.mu, args.nu, ctx)
    except DegreeMismatch as exc:
        raise DomainError(str(exc)) from None
    if args.format == "json":
        return json.dumps({
            "d": res.d,
            "value": res.value.to_json(ctx.n),
            "pi": [{"shape": list(p), "widths": list(w), "lr": c, "sign": s} for p, w, c, s in res.pi],
        }, sort_keys=True)
    if args.format == "latex":
        return res.value.to_latex(ctx.n)
    lines = [res.value.to_text(ctx.n)]
    for p, w, c, s in res.pi:
        lines.append(f"  pi={p!r} widths={list(w)} c={c} sign={s:+d}")
    return "\n".join(lines)


def cmd_reduce(args, ctx):
    lam = args.lam
    if args.ring == QUANTUM:
        expr = rim_hook_reduce(lam, ctx)
    elif args.ring == CLASSICAL:
        expr = ClassExpr(ctx, CLASSICAL, {lam: ONE} if ctx.fits(lam) else {})
    else:
        expr = ClassExpr(ctx, EQUIVARIANT, reduce_shape(lam, ctx))
        if args.ring == EQ_QUANTUM:
            expr = f_tilde_map(expr)
    return _emit_expr(expr, args.format, explicit_unit=True)


def _pairs(ctx):
    basis = ctx.basis()
    for i, a in enumerate(basis):
        for b in basis[i:]:
            yield a, b


def cmd_table(args, ctx):
    product = PRODUCTS[args.ring]
    rows = [(a, b, product(a, b, ctx)) for a, b in _pairs(ctx) if a and b]
    if args.format == "json":
        return json.dumps([{"lam": list(a), "mu": list(b), "product": x.to_json()} for a, b, x in rows],
                          sort_keys=True)
    if args.format == "latex":
        return latex_table(ctx, rows)
    return "\n".join(f"{a!r} * {b!r} = {x.to_text()}" for a, b, x in rows)


def latex_table(ctx: GrContext, rows) -> str:
    """Upper-triangular multiplication table as a LaTeX tabular."""
    basis = [p for p in ctx.basis() if p]
    sym = r"\widehat{\sigma}" if rows and rows[0][2].ring in (EQUIVARIANT, EQ_QUANTUM) else r"\sigma"
    lookup = {(a, b): x for a, b, x in rows}

    def head(p):
        return f"${sym}_{{{''.join(map(str, p))}}}$"

    lines = [r"\begin{tabular}{|" + "c|" * (len(basis) + 1) + "}", r"\hline",
             r"$\times$ & " + " & ".join(head(p) for p in basis) + r"\\", r"\hline"]
    for i, a in enumerate(basis):
        cells = [head(a)]
        for j, b in enumerate(basis):
            cells.append(f"${lookup[(a, b)].to_latex()}$" if j >= i else "")
        lines.append(" & ".join(cells) + r"\\")
        lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def cmd_restrict(args, ctx):
    lam = ctx.check(args.lam)
    table = restrict_expr(ClassExpr.basis(ctx, EQUIVARIANT, lam))
    if args.format == "json":
        return json.dumps(table.to_json(), sort_keys=True)
    if args.format == "latex":
        return "\n".join(f"{p.bits} & ${table[p].to_latex(ctx.n)}$\\\\" for p in table.points())
    return "\n".join(f"{p.bits}  {table[p].to_text(ctx.n)}" for p in table.points())


def _verify_pair(ring, a, b, ctx) -> bool:
    if ring == EQUIVARIANT:
        return verify_product_by_localization(a, b, product_equivariant(a, b, ctx))
    if ring == QUANTUM:
        return product_quantum(a, b, ctx) == product_quantum_rimhook(a, b, ctx)
    if ring == EQ_QUANTUM:
        x = product_eq_quantum(a, b, ctx)
        at_q0 = x.map_coeffs(lambda c: c.coefficient_of_q(0), ring=EQUIVARIANT)
        return (at_q0 == product_equivariant(a, b, ctx)
                and verify_product_by_localization(a, b, at_q0))
    x = product_classical(a, b, ctx)
    y = product_quantum(a, b, ctx).map_coeffs(lambda c: c.coefficient_of_q(0), ring=CLASSICAL)
    return x == y


def cmd_verify(args, ctx):
    results = [(a, b, _verify_pair(args.ring, a, b, ctx)) for a, b in _pairs(ctx)]
    if args.ring == EQUIVARIANT:
        gkm = [(p, gkm_check(restrict_expr(ClassExpr.basis(ctx, EQUIVARIANT, p)))) for p in ctx.basis()]
    else:
        gkm = []
    failed = sum(not ok for _, _, ok in results) + sum(not ok for _, ok in gkm)
    args._failed = failed
    if args.format == "json":
        return json.dumps({
            "products": [{"lam": list(a), "mu": list(b), "ok": ok} for a, b, ok in results],
            "gkm": [{"lam": list(p), "ok": ok} for p, ok in gkm],
            "failed": failed,
        }, sort_keys=True)
    lines = [f"{'PASS' if ok else 'FAIL'} {a!r} * {b!r}" for a, b, ok in results]
    lines += [f"{'PASS' if ok else 'FAIL'} gkm {p!r}" for p, ok in gkm]
    lines.append(f"{len(results) + len(gkm) - failed} passed, {failed} failed")
    return "\n".join(lines)


COMMANDS = {
    "product": cmd_product, "pieri": cmd_pieri, "lr": cmd_lr, "qlr": cmd_qlr, "reduce": cmd_reduce,
    "table": cmd_table, "restrict": cmd_restrict, "verify": cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctx = GrContext(*args.gr)
    except ValueError as exc:
        if not args.quiet:
            print(f"grasschub: error: {exc}", file=sys.stderr)
        return 2
    try:
        doc = COMMANDS[args.command](args, ctx)
    except (DomainError, PartitionError, RingDisciplineError, LocalizationError, ValueError) as exc:
        if not args.quiet:
            print(f"grasschub: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        sys.stdout.write(doc + "\n")
    return 1 if getattr(args, "_failed", 0) else 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
