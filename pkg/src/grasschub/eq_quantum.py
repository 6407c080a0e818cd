"""Equivariant quantum cohomology of Gr(k, n) in the hat-sigma basis.

Structure constants are the equivariant ones with e_n replaced by
e_n + (-1)^k q; the basis classes themselves need no deformation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ._det import determinant
from .classexpr import EQ_QUANTUM, EQUIVARIANT, ClassExpr
from .equivariant import _product, _row, equivariant_pieri
from .partitions import GrContext, Partition, conjugate
from .polyring import E, ONE, VarSubstitution, e, q, substitute


def f_tilde_substitution(ctx: GrContext) -> VarSubstitution:
    """e_n -> e_n + (-1)^k q, all other variables fixed."""
    return VarSubstitution({(E, ctx.n): e(ctx.n) + q * (-1) ** ctx.k})


def f_tilde_map(expr: ClassExpr) -> ClassExpr:
    """Equivariant expression -> equivariant quantum expression."""
    if expr.ring != EQUIVARIANT:
        raise ValueError(f"f_tilde_map expects an equivariant expression, got {expr.ring}")
    sub = f_tilde_substitution(expr.ctx)
    return expr.map_coeffs(lambda c: substitute(c, sub), ring=EQ_QUANTUM)


@lru_cache(maxsize=None)
def _eq_product(lam: Partition, mu: Partition, k: int, n: int) -> tuple:
    sub = f_tilde_substitution(GrContext(k, n))
    out = []
    for nu, c in _product(lam, mu, k, n, "equivariant"):
        c2 = substitute(c, sub)
        if c2:
            out.append((nu, c2))
    return tuple(out)


def basis_product_eq_quantum(lam, mu, ctx: GrContext) -> dict:
    return dict(_eq_product(Partition(lam), Partition(mu), ctx.k, ctx.n))


def product_eq_quantum(lam: Iterable[int], mu: Iterable[int], ctx: GrContext) -> ClassExpr:
    """hat-sigma_lam * hat-sigma_mu in the equivariant quantum ring."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    return ClassExpr(ctx, EQ_QUANTUM, basis_product_eq_quantum(lam, mu, ctx))


def eq_quantum_pieri(lam: Iterable[int], ctx: GrContext) -> ClassExpr:
    """Closed form for hat-sigma_lam * hat-sigma_1: the equivariant Pieri
    sum plus q * hat-sigma_{lam_2 - 1, ..., lam_k - 1} when lam is a full
    k-row shape with lam_1 = n - k."""
    lam = ctx.check(lam)
    base = equivariant_pieri(lam, ctx)
    out = ClassExpr(ctx, EQ_QUANTUM, base.as_dict())
    if len(lam) == ctx.k and lam[0] == ctx.n - ctx.k:
        shrunk = Partition(x - 1 for x in lam[1:])
        out = out + ClassExpr(ctx, EQ_QUANTUM, {shrunk: q})
    return out


# -- Giambelli in the deformed ring -------------------------------------------

def _row_class(r: int, ctx: GrContext) -> ClassExpr:
    """hat-sigma_r in the equivariant quantum ring, any r."""
    if r < 0:
        return ClassExpr.zero(ctx, EQ_QUANTUM)
    sub = f_tilde_substitution(ctx)
    return ClassExpr(ctx, EQ_QUANTUM, {Partition([s] if s else []): substitute(c, sub)
                                       for s, c in _row(r, ctx.k, ctx.n, "equivariant")})


def _column_class(r: int, ctx: GrContext) -> ClassExpr:
    if r < 0 or r > ctx.k:
        return ClassExpr.zero(ctx, EQ_QUANTUM)
    return ClassExpr(ctx, EQ_QUANTUM, {Partition([1] * r): ONE})


@dataclass(frozen=True)
class GiambelliCheck:
    shape: Partition
    rows: ClassExpr
    columns: ClassExpr

    @property
    def ok(self) -> bool:
        target = ClassExpr(self.rows.ctx, EQ_QUANTUM, {self.shape: ONE})
        return self.rows == target and self.columns == target

    def __bool__(self):
        return self.ok


def giambelli_check(lam: Iterable[int], ctx: GrContext) -> GiambelliCheck:
    """Evaluate det(hat-sigma_{lam_i+j-i}) and det(hat-sigma_{1^{lam^T_i+j-i}})
    with products taken in the equivariant quantum ring."""
    lam = ctx.check(lam)
    zero = ClassExpr.zero(ctx, EQ_QUANTUM)
    m = len(lam)
    rows = determinant([[_row_class(lam[i] + j - i, ctx) for j in range(m)] for i in range(m)], zero)
    lt = conjugate(lam)
    mt = len(lt)
    cols = determinant([[_column_class(lt[i] + j - i, ctx) for j in range(mt)] for i in range(mt)], zero)
    return GiambelliCheck(lam, rows, cols)


__all__ = [
    "GiambelliCheck", "eq_quantum_pieri", "f_tilde_map", "f_tilde_substitution",
    "giambelli_check", "product_eq_quantum",
]
