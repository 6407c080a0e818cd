"""Characteristic-class basis of the U(n)-equivariant cohomology of Gr(k, n).

The classes hat-sigma_lambda multiply like Schur functions in k variables
(s_lambda with lambda_{k+1} > 0 vanishes).  Shapes sticking out of the
rectangle are brought back by the relation

    sum_{i=0}^{r} e_i * hat-sigma_{r-i} = 0        for r > n - k,

applied through the first-row expansion of the Jacobi-Trudi determinant.
Everything here is exact and memoised per (k, n).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from ._det import determinant
from .classexpr import EQUIVARIANT, ClassExpr
from .lr import expand_product_infinite
from .partitions import (
    EMPTY,
    GrContext,
    Partition,
    add_strip,
    conjugate,
    horizontal_strips,
    remove_vertical_strip,
)
from .polyring import E, ONE, ZERO, Poly, VarSubstitution, e, q, substitute

# Specialisations of the coefficient ring that commute with the reduction.
# "equivariant" keeps e_1..e_n free; "quantum" applies e_i -> 0 (i < n),
# e_n -> (-1)^k q, which is the forgetful map to quantum cohomology.
MODES = ("equivariant", "quantum")


def forgetful_substitution(ctx: GrContext) -> VarSubstitution:
    """e_1..e_{n-1} -> 0 and e_n -> (-1)^k q."""
    images = {(E, i): ZERO for i in range(1, ctx.n)}
    images[(E, ctx.n)] = q * (-1) ** ctx.k
    return VarSubstitution(images)


def _add_into(acc: dict, other: dict, factor: Poly):
    for p, c in other.items():
        v = acc.get(p, ZERO) + factor * c
        if v:
            acc[p] = v
        else:
            acc.pop(p, None)


@lru_cache(maxsize=None)
def _row(r: int, k: int, n: int, mode: str) -> tuple:
    """hat-sigma_r as ((s, coeff), ...) with 0 <= s <= n-k."""
    if r < 0:
        return ()
    if r <= n - k:
        return ((r, ONE),)
    if mode == "quantum":
        sub = forgetful_substitution(GrContext(k, n))
        return tuple((s, c2) for s, c in _row(r, k, n, "equivariant")
                     if (c2 := substitute(c, sub)))
    acc: dict = {}
    for i in range(1, min(r, n) + 1):
        for s, c in _row(r - i, k, n, mode):
            acc[s] = acc.get(s, ZERO) - e(i) * c
    return tuple(sorted((s, c) for s, c in acc.items() if c))


def hat_sigma_r_reduced(r: int, ctx: GrContext) -> ClassExpr:
    """hat-sigma_r in the basis; for r > n-k this iterates
    hat-sigma_r = -sum_{i>=1} e_i hat-sigma_{r-i}."""
    if r < 0:
        return ClassExpr.zero(ctx, EQUIVARIANT)
    return ClassExpr(ctx, EQUIVARIANT, {Partition([s] if s else []): c
                                        for s, c in _row(r, ctx.k, ctx.n, "equivariant")})


@lru_cache(maxsize=None)
def _reduce(nu: Partition, k: int, n: int, mode: str) -> tuple:
    """hat-sigma_nu (len(nu) <= k, any nu_1) as ((rect partition, coeff), ...).

    First-row expansion of det(h_{nu_i + j - i}): the (1, j) minor is the
    skew Schur function s_{nu^- / 1^{j-1}}, i.e. the sum over removals of a
    vertical (j-1)-strip from nu^-.
    """
    if len(nu) > k:
        return ()
    if not nu or nu[0] <= n - k:
        return ((nu, ONE),)
    acc: dict = {}
    rest = nu.tail()
    for j in range(1, len(nu) + 1):
        sign = 1 if j % 2 else -1
        row = _row(nu[0] + j - 1, k, n, mode)
        if not row:
            continue
        for gamma in remove_vertical_strip(rest, j - 1):
            for s, c in row:
                for rho in horizontal_strips(gamma, s, max_rows=k):
                    _add_into(acc, dict(_reduce(rho, k, n, mode)), c * sign)
    return tuple(acc.items())


def reduce_shape(nu: Iterable[int], ctx: GrContext, mode: str = "equivariant") -> dict[Partition, Poly]:
    """hat-sigma_nu for an arbitrary shape, rewritten in the rectangle basis."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    return dict(_reduce(Partition(nu), ctx.k, ctx.n, mode))


@lru_cache(maxsize=None)
def _product(lam: Partition, mu: Partition, k: int, n: int, mode: str) -> tuple:
    if sum(mu) > sum(lam) or (sum(mu) == sum(lam) and mu > lam):
        lam, mu = mu, lam
    acc: dict = {}
    for nu, c in expand_product_infinite(lam, mu, k).items():
        _add_into(acc, dict(_reduce(nu, k, n, mode)), Poly.const(c))
    return tuple(acc.items())


def basis_product_equivariant(lam, mu, ctx: GrContext) -> dict[Partition, Poly]:
    return dict(_product(Partition(lam), Partition(mu), ctx.k, ctx.n, "equivariant"))


def product_equivariant(lam: Iterable[int], mu: Iterable[int], ctx: GrContext) -> ClassExpr:
    """hat-sigma_lam * hat-sigma_mu in the rectangle basis."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    return ClassExpr(ctx, EQUIVARIANT, basis_product_equivariant(lam, mu, ctx))


def equivariant_pieri(lam: Iterable[int], ctx: GrContext) -> ClassExpr:
    """Closed form for hat-sigma_lam * hat-sigma_1."""
    lam = ctx.check(lam)
    m = ctx.n - ctx.k
    terms: dict = {}

    def add(shape, c):
        shape = Partition(shape)
        terms[shape] = terms.get(shape, ZERO) + c

    for p in add_strip(lam, 1, "horizontal", ctx):
        add(p, ONE)
    ell = len(lam)
    if ell and lam[0] == m:
        part = lam.part
        for j in range(0, ell - 1):
            top = ell - j  # 1-based row index lam_{ell-j}
            sign = (-1) ** (ell - j)
            for mm in range(part(top), part(top - 1)):
                shape = [part(i) - 1 for i in range(1, top - 1 + 1)] + [mm] + [part(i) for i in range(top, ell)]
                add(shape, e(m + ell - mm - j) * sign)
        for mm in range(part(1), m + 1):
            add([mm] + list(lam[1:]), -e(m - mm + 1))
    return ClassExpr(ctx, EQUIVARIANT, terms)


# -- tilde classes, primed classes and duality ------------------------------

def tilde_sigma_r(r: int, ctx: GrContext) -> ClassExpr:
    """c_r(Q) = sum_i e_i hat-sigma_{r-i}; zero for r > n-k or r < 0."""
    if r < 0 or r > ctx.n - ctx.k:
        return ClassExpr.zero(ctx, EQUIVARIANT)
    out = ClassExpr.zero(ctx, EQUIVARIANT)
    for i in range(0, r + 1):
        s = r - i
        out = out + ClassExpr(ctx, EQUIVARIANT, {Partition([s] if s else []): e(i)})
    return out


def det_expr(matrix, ctx: GrContext, ring: str = EQUIVARIANT) -> ClassExpr:
    return determinant(matrix, ClassExpr.zero(ctx, ring))


@lru_cache(maxsize=None)
def _prime_column(r: int, k: int, n: int) -> ClassExpr:
    ctx = GrContext(k, n)
    if r < 0:
        return ClassExpr.zero(ctx, EQUIVARIANT)
    if r == 0:
        return ClassExpr.scalar(ctx, EQUIVARIANT, ONE)
    mat = [[tilde_sigma_r(1 + j - i, ctx) if 1 + j - i >= 0 else ClassExpr.zero(ctx, EQUIVARIANT)
            for j in range(r)] for i in range(r)]
    return det_expr(mat, ctx)


def prime_class(lam: Iterable[int], ctx: GrContext, shortcut: bool = True) -> ClassExpr:
    """sigma'_lam = det(sigma'_{1^{lam^T_i + j - i}}) with
    sigma'_{1^r} = det(tilde-sigma_{1+j-i}).  Vanishes when lam_1 > n-k."""
    lam = Partition(lam)
    if shortcut and lam and lam[0] > ctx.n - ctx.k:
        return ClassExpr.zero(ctx, EQUIVARIANT)
    lt = conjugate(lam)
    m = len(lt)
    if m == 0:
        return ClassExpr.scalar(ctx, EQUIVARIANT, ONE)
    mat = [[_prime_column(lt[i] + j - i, ctx.k, ctx.n) for j in range(m)] for i in range(m)]
    return det_expr(mat, ctx)


def weight_flip(ctx: GrContext) -> VarSubstitution:
    """t_i -> -t_i, seen on the e-variables as e_i -> (-1)^i e_i."""
    return VarSubstitution({(E, i): e(i) * (-1) ** i for i in range(1, ctx.n + 1)})


def inv_star(expr: ClassExpr) -> ClassExpr:
    """Duality Gr(k,n) -> Gr(n-k,n) induced by V -> V^perp.

    Basis classes go to hat-sigma_lam -> sigma'_{lam^T}.  The orthogonal
    complement of a weight-t_i line carries weight -t_i, so coefficients
    pass through t_i -> -t_i; without that flip the map is not
    multiplicative once e-terms appear.
    """
    if expr.ring != EQUIVARIANT:
        raise ValueError("inv_star acts on equivariant expressions")
    target = expr.ctx.dual()
    flip = weight_flip(expr.ctx)
    out = ClassExpr.zero(target, EQUIVARIANT)
    for p, c in expr.items():
        out = out + prime_class(conjugate(p), target).scale(substitute(c, flip))
    return out


def giambelli_rows(lam: Iterable[int], ctx: GrContext) -> ClassExpr:
    """det(hat-sigma_{lam_i + j - i}) evaluated with ring products."""
    lam = Partition(lam)
    m = len(lam)
    if m == 0:
        return ClassExpr.scalar(ctx, EQUIVARIANT, ONE)
    mat = [[hat_sigma_r_reduced(lam[i] + j - i, ctx) for j in range(m)] for i in range(m)]
    return det_expr(mat, ctx)


def hat_column(r: int, ctx: GrContext) -> ClassExpr:
    """hat-sigma_{1^r}: basis class for r <= k, zero above, 1 at r = 0."""
    if r < 0 or r > ctx.k:
        return ClassExpr.zero(ctx, EQUIVARIANT)
    return ClassExpr(ctx, EQUIVARIANT, {Partition([1] * r): ONE})


def giambelli_columns(lam: Iterable[int], ctx: GrContext) -> ClassExpr:
    """det(hat-sigma_{1^{lam^T_i + j - i}}) evaluated with ring products."""
    lt = conjugate(Partition(lam))
    m = len(lt)
    if m == 0:
        return ClassExpr.scalar(ctx, EQUIVARIANT, ONE)
    mat = [[hat_column(lt[i] + j - i, ctx) for j in range(m)] for i in range(m)]
    return det_expr(mat, ctx)


__all__ = [
    "EMPTY", "equivariant_pieri", "forgetful_substitution", "giambelli_columns", "giambelli_rows",
    "hat_sigma_r_reduced", "inv_star", "prime_class", "product_equivariant", "reduce_shape",
    "tilde_sigma_r",
]
