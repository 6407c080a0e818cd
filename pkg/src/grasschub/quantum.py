"""Small quantum cohomology of Gr(k, n) reached through the forgetful map
f: e_i -> 0 (i < n), e_n -> (-1)^k q, hat-sigma_lam -> sigma_lam."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ._det import determinant
from .classexpr import CLASSICAL, EQUIVARIANT, QUANTUM, ClassExpr
from .equivariant import _product, _reduce, forgetful_substitution, hat_sigma_r_reduced
from .lr import expand_product_infinite, lr_coefficient
from .partitions import (
    EMPTY,
    GrContext,
    Partition,
    add_rim_hooks,
    add_strip,
    conjugate,
    find_rim_hooks,
    remove_horizontal_strip,
    remove_vertical_strip,
)
from .polyring import ONE, ZERO, Poly, q, substitute


class DegreeMismatch(ValueError):
    pass


def f_map(expr: ClassExpr) -> ClassExpr:
    """Forgetful ring map from the equivariant ring to quantum cohomology."""
    if expr.ring != EQUIVARIANT:
        raise ValueError(f"f_map expects an equivariant expression, got {expr.ring}")
    sub = forgetful_substitution(expr.ctx)
    return expr.map_coeffs(lambda c: substitute(c, sub), ring=QUANTUM)


def basis_product_quantum(lam, mu, ctx: GrContext) -> dict[Partition, Poly]:
    return dict(_product(Partition(lam), Partition(mu), ctx.k, ctx.n, "quantum"))


def product_quantum(lam: Iterable[int], mu: Iterable[int], ctx: GrContext) -> ClassExpr:
    """sigma_lam * sigma_mu.  The reduction runs with f already applied to
    the coefficient ring, which equals f_map(product_equivariant(...))
    because f is a ring map."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    return ClassExpr(ctx, QUANTUM, basis_product_quantum(lam, mu, ctx))


def product_classical(lam: Iterable[int], mu: Iterable[int], ctx: GrContext) -> ClassExpr:
    """Ordinary cup product: LR expansion restricted to the rectangle."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    return ClassExpr(ctx, CLASSICAL, {nu: c for nu, c in expand_product_infinite(lam, mu, ctx.k).items()
                                      if ctx.fits(nu)})


def basis_product_classical(lam, mu, ctx: GrContext) -> dict[Partition, Poly]:
    return {p: c for p, c in product_classical(lam, mu, ctx).items()}


def gw_invariant(lam, mu, nu, d: int, ctx: GrContext) -> int:
    """Coefficient of q^d sigma_nu in sigma_lam * sigma_mu."""
    lam, mu, nu = ctx.check(lam), ctx.check(mu), ctx.check(nu)
    if d < 0 or sum(lam) + sum(mu) != sum(nu) + d * ctx.n:
        return 0
    c = product_quantum(lam, mu, ctx).coeff(nu)
    return c.coefficient_of_q(d).constant()


def quantum_pieri_column(lam: Iterable[int], r: int, ctx: GrContext) -> ClassExpr:
    """sigma_lam * sigma_{1^r} by the column quantum Pieri rule."""
    lam = ctx.check(lam)
    if not 1 <= r <= ctx.k:
        raise ValueError(f"column Pieri needs 1 <= r <= k={ctx.k}, got r={r}")
    terms = {p: ONE for p in add_strip(lam, r, "vertical", ctx)}
    if lam and lam[0] == ctx.n - ctx.k:
        for p in remove_vertical_strip(lam.tail(), ctx.k - r):
            terms[p] = terms.get(p, ZERO) + q
    return ClassExpr(ctx, QUANTUM, terms)


def quantum_pieri_row(lam: Iterable[int], r: int, ctx: GrContext) -> ClassExpr:
    """sigma_lam * sigma_r by the row quantum Pieri rule."""
    lam = ctx.check(lam)
    if not 1 <= r <= ctx.n - ctx.k:
        raise ValueError(f"row Pieri needs 1 <= r <= n-k={ctx.n - ctx.k}, got r={r}")
    terms = {p: ONE for p in add_strip(lam, r, "horizontal", ctx)}
    if len(lam) == ctx.k:
        shrunk = Partition(x - 1 for x in lam)
        for p in remove_horizontal_strip(shrunk, ctx.n - ctx.k - r):
            terms[p] = terms.get(p, ZERO) + q
    return ClassExpr(ctx, QUANTUM, terms)


# -- rim hooks ----------------------------------------------------------------

def _hook_step(lam: Partition, ctx: GrContext, choice: int = 0):
    """One rim-hook removal; returns (sign, remainder) or None when sigma_lam = 0."""
    hooks = find_rim_hooks(lam, ctx.n)
    if not hooks:
        return None
    h = hooks[choice]
    return (-1) ** (ctx.k - h.width_rows), h.remainder


def rim_hook_reduce(lam: Iterable[int], ctx: GrContext) -> ClassExpr:
    """sigma_lam for any shape, brought into the rectangle by removing
    n-rim hooks (topmost hook first)."""
    lam = Partition(lam)
    if len(lam) > ctx.k:
        return ClassExpr.zero(ctx, QUANTUM)
    coeff = ONE
    while lam and lam[0] > ctx.n - ctx.k:
        step = _hook_step(lam, ctx)
        if step is None:
            return ClassExpr.zero(ctx, QUANTUM)
        sign, lam = step
        coeff = coeff * q * sign
    return ClassExpr(ctx, QUANTUM, {lam: coeff})


def rim_hook_reduce_all_orders(lam: Iterable[int], ctx: GrContext) -> set:
    """Results of rim-hook reduction over every sequence of hook choices."""
    lam = Partition(lam)
    if len(lam) > ctx.k:
        return {ClassExpr.zero(ctx, QUANTUM)}
    return set(_all_orders(lam, ctx.k, ctx.n))


@lru_cache(maxsize=None)
def _all_orders(lam: Partition, k: int, n: int) -> frozenset:
    ctx = GrContext(k, n)
    if not lam or lam[0] <= n - k:
        return frozenset({ClassExpr(ctx, QUANTUM, {lam: ONE})})
    hooks = find_rim_hooks(lam, n)
    if not hooks:
        return frozenset({ClassExpr.zero(ctx, QUANTUM)})
    out = set()
    for h in hooks:
        sign = (-1) ** (k - h.width_rows)
        for sub in _all_orders(h.remainder, k, n):
            out.add(sub.scale(q * sign))
    return frozenset(out)


def product_quantum_rimhook(lam, mu, ctx: GrContext) -> ClassExpr:
    """Classical product in Gr(k, infinity) followed by rim-hook reduction."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    out = ClassExpr.zero(ctx, QUANTUM)
    for nu, c in expand_product_infinite(lam, mu, ctx.k).items():
        out = out + rim_hook_reduce(nu, ctx).scale(c)
    return out


def quantum_sigma_r(r: int, ctx: GrContext) -> ClassExpr:
    """sigma_r = (-1)^{l(k+1)} q^l sigma_p for r = l n + p, sigma_p = 0 when n-k < p < n."""
    if r < 0:
        return ClassExpr.zero(ctx, QUANTUM)
    ell, p = divmod(r, ctx.n)
    if p > ctx.n - ctx.k:
        return ClassExpr.zero(ctx, QUANTUM)
    return ClassExpr(ctx, QUANTUM, {Partition([p] if p else []): q ** ell * (-1) ** (ell * (ctx.k + 1))})


def quantum_giambelli(lam: Iterable[int], ctx: GrContext) -> ClassExpr:
    """sigma_lam := det(sigma_{lam_i + j - i}) with the out-of-range sigma_r
    given by :func:`quantum_sigma_r`, multiplied in quantum cohomology."""
    lam = Partition(lam)
    m = len(lam)
    if m == 0:
        return ClassExpr.scalar(ctx, QUANTUM, ONE)
    mat = [[quantum_sigma_r(lam[i] + j - i, ctx) for j in range(m)] for i in range(m)]
    return determinant(mat, ClassExpr.zero(ctx, QUANTUM))


def reduce_via_forgetful(lam: Iterable[int], ctx: GrContext) -> ClassExpr:
    """f applied to the equivariant normal form of hat-sigma_lam."""
    lam = Partition(lam)
    eq = ClassExpr(ctx, EQUIVARIANT, dict(_reduce(lam, ctx.k, ctx.n, "equivariant")))
    return f_map(eq)


# -- quantum Littlewood-Richardson via rim hooks ------------------------------

@dataclass(frozen=True)
class QuantumLR:
    value: Poly
    d: int
    pi: tuple  # ((shape, widths, c_{lam mu}^shape, sign), ...)


def _hook_towers(nu: Partition, d: int, ctx: GrContext) -> dict[Partition, tuple]:
    """Shapes obtained from nu by adjoining d n-rim hooks, with the row
    counts of one adjoining sequence."""
    level = {nu: ()}
    for _ in range(d):
        nxt: dict = {}
        for shape, widths in level.items():
            for bigger, w in add_rim_hooks(shape, ctx.n, ctx.k):
                nxt.setdefault(bigger, widths + (w,))
        level = nxt
    return level


def quantum_lr_detail(lam, mu, nu, ctx: GrContext) -> QuantumLR:
    lam, mu, nu = ctx.check(lam), ctx.check(mu), ctx.check(nu)
    diff = sum(lam) + sum(mu) - sum(nu)
    if diff < 0 or diff % ctx.n:
        raise DegreeMismatch(
            f"|lam|+|mu|-|nu| = {diff} is not a nonnegative multiple of n={ctx.n}")
    d = diff // ctx.n
    entries = []
    total = 0
    for pi, widths in sorted(_hook_towers(nu, d, ctx).items()):
        if len(pi) > ctx.k:
            continue
        if pi.part(0) - lam.part(0) > mu.part(0):
            continue
        if not pi.contains(lam):
            continue
        c = lr_coefficient(lam, mu, pi)
        sign = (-1) ** (ctx.k * d - sum(widths))
        entries.append((pi, widths, c, sign))
        total += sign * c
    return QuantumLR(value=q ** d * total, d=d, pi=tuple(entries))


def quantum_lr(lam, mu, nu, ctx: GrContext) -> Poly:
    """c_{lam mu}^nu as q^d times the signed LR sum over the hook set Pi."""
    return quantum_lr_detail(lam, mu, nu, ctx).value


def qinv(expr: ClassExpr) -> ClassExpr:
    """Duality QH(Gr(k,n)) -> QH(Gr(n-k,n)): sigma_lam -> sigma_{lam^T}, q -> q."""
    if expr.ring not in (QUANTUM, CLASSICAL):
        raise ValueError("qinv acts on quantum expressions")
    return ClassExpr(expr.ctx.dual(), expr.ring, {conjugate(p): c for p, c in expr.items()})


__all__ = [
    "EMPTY", "f_map", "gw_invariant", "hat_sigma_r_reduced", "product_classical", "product_quantum",
    "product_quantum_rimhook", "qinv", "quantum_giambelli", "quantum_lr", "quantum_lr_detail",
    "quantum_pieri_column", "quantum_pieri_row", "quantum_sigma_r", "reduce_via_forgetful",
    "rim_hook_reduce", "rim_hook_reduce_all_orders",
]
