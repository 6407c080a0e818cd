"""Restriction of equivariant classes to the torus-fixed points of Gr(k, n).

Fixed points are coordinate subspaces, labelled by 01-strings with k zeros.
At the point b the Chern roots of S* become -t_i for the zero positions i
of b, so hat-sigma_lam restricts to s_lam(-t_{i_1}, ..., -t_{i_k}).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from ._det import determinant
from .classexpr import EQUIVARIANT, ClassExpr
from .partitions import (
    GrContext,
    Partition,
    check_01_string,
    conjugate,
    from_01_string,
    to_01_string,
)
from .polyring import ONE, T, ZERO, Poly, VarSubstitution, divmod_difference, elementary_symmetric, expand_e_in_t, substitute, t


class LocalizationError(ValueError):
    pass


@dataclass(frozen=True)
class FixedPoint:
    bits: str

    @property
    def zero_positions(self) -> tuple:
        return tuple(i + 1 for i, ch in enumerate(self.bits) if ch == "0")

    @property
    def partition(self) -> Partition:
        return from_01_string(self.bits)

    def __str__(self):
        return self.bits


def fixed_points(ctx: GrContext) -> list[FixedPoint]:
    """All C(n, k) fixed points, ordered by diagram size then string."""
    pts = []
    for zeros in combinations(range(ctx.n), ctx.k):
        bits = "".join("0" if i in zeros else "1" for i in range(ctx.n))
        pts.append(FixedPoint(bits))
    return sorted(pts, key=lambda b: (sum(b.partition), b.bits))


def point_of(lam: Iterable[int], ctx: GrContext) -> FixedPoint:
    return FixedPoint(to_01_string(lam, ctx))


def bruhat_leq(b: FixedPoint, c: FixedPoint) -> bool:
    """Bruhat order on fixed points: the j-th zero of b never sits to the
    right of the j-th zero of c."""
    return all(x <= y for x, y in zip(b.zero_positions, c.zero_positions))


def _as_point(b, ctx: GrContext) -> FixedPoint:
    if isinstance(b, FixedPoint):
        return b
    return FixedPoint(check_01_string(str(b), ctx))


@lru_cache(maxsize=None)
def _restrict(lam: Partition, zeros: tuple) -> Poly:
    if not lam:
        return ONE
    lt = conjugate(lam)
    m = len(lt)

    def entry(r):
        if r < 0:
            return ZERO
        return elementary_symmetric(zeros, r) * (-1) ** r

    return determinant([[entry(lt[i] + j - i) for j in range(m)] for i in range(m)], ZERO)


def restrict_hat_class(lam: Iterable[int], b, ctx: GrContext) -> Poly:
    """hat-sigma_lam at the fixed point b, a polynomial in t."""
    lam = ctx.check(lam)
    return _restrict(lam, _as_point(b, ctx).zero_positions)


@dataclass
class RestrictionTable:
    ctx: GrContext
    values: dict = field(default_factory=dict)  # bits -> Poly

    def __getitem__(self, b) -> Poly:
        return self.values.get(str(b), ZERO)

    def __eq__(self, other):
        if not isinstance(other, RestrictionTable):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return self.ctx == other.ctx and all(self[b] == other[b] for b in keys)

    def __add__(self, other: "RestrictionTable") -> "RestrictionTable":
        keys = set(self.values) | set(other.values)
        return RestrictionTable(self.ctx, {b: self[b] + other[b] for b in keys})

    def __sub__(self, other: "RestrictionTable") -> "RestrictionTable":
        keys = set(self.values) | set(other.values)
        return RestrictionTable(self.ctx, {b: self[b] - other[b] for b in keys})

    def __mul__(self, other) -> "RestrictionTable":
        if isinstance(other, RestrictionTable):
            return RestrictionTable(self.ctx, {b: self[b] * other[b] for b in self.values})
        return RestrictionTable(self.ctx, {b: v * other for b, v in self.values.items()})

    __rmul__ = __mul__

    def points(self) -> list[FixedPoint]:
        return [p for p in fixed_points(self.ctx) if p.bits in self.values]

    def to_json(self) -> list:
        return [{"point": p.bits, "value": self[p].to_json(self.ctx.n)} for p in fixed_points(self.ctx)]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data, ctx: GrContext) -> "RestrictionTable":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(ctx, {d["point"]: Poly.from_json(d["value"]) for d in data})


def table_of(values: Mapping, ctx: GrContext) -> RestrictionTable:
    """Build a table from {01-string: Poly}; missing points read as 0."""
    out = {p.bits: ZERO for p in fixed_points(ctx)}
    for b, v in values.items():
        out[check_01_string(str(b), ctx)] = v if isinstance(v, Poly) else Poly.const(v)
    return RestrictionTable(ctx, out)


def restrict_expr(x: ClassExpr) -> RestrictionTable:
    """Pointwise restriction of an equivariant expression."""
    if x.has_q():
        raise LocalizationError("localization applies to the equivariant ring only; expression contains q")
    if x.ring != EQUIVARIANT and any(c.variables() for _, c in x.items()):
        raise LocalizationError(f"cannot restrict a {x.ring} expression")
    ctx = x.ctx
    coeffs = [(p, expand_e_in_t(c, ctx)) for p, c in x.items()]
    vals = {}
    for pt in fixed_points(ctx):
        acc = ZERO
        for p, c in coeffs:
            acc = acc + c * _restrict(p, pt.zero_positions)
        vals[pt.bits] = acc
    return RestrictionTable(ctx, vals)


def _differing(b: str, c: str):
    diff = [i + 1 for i in range(len(b)) if b[i] != c[i]]
    return diff if len(diff) == 2 else None


def gkm_edges(ctx: GrContext):
    pts = fixed_points(ctx)
    for a, b in combinations(pts, 2):
        d = _differing(a.bits, b.bits)
        if d:
            yield a, b, d[0], d[1]


def gkm_check(table: RestrictionTable) -> bool:
    """Every edge difference is divisible by the matching t_i - t_j."""
    for a, b, i, j in gkm_edges(table.ctx):
        _, rem = divmod_difference(table[a] - table[b], i, j)
        if rem:
            return False
    return True


# -- canonical column classes -----------------------------------------------

def _e_first(r: int, m: int) -> Poly:
    """e_r(t_1, ..., t_m)."""
    return elementary_symmetric(range(1, m + 1), r) if m >= 0 else ZERO


@lru_cache(maxsize=None)
def _canonical_column(r: int, k: int, n: int) -> RestrictionTable:
    ctx = GrContext(k, n)
    table = restrict_expr(ClassExpr(ctx, EQUIVARIANT, {Partition([1] * r): ONE}))
    for i in range(r):
        c = _e_first(r - i, k - i) * (-1) ** (r - i)
        table = table - _canonical_column(i, k, n) * c
    return table


def canonical_column_class(r: int, ctx: GrContext) -> RestrictionTable:
    """Restriction table of the canonical Schubert class of the column 1^r,
    solved from hat-sigma_{1^r} = sum_i (-1)^{r-i} e_{r-i}(t_1..t_{k-i}) sigma^can_{1^i}."""
    if not 0 <= r <= ctx.k:
        raise ValueError(f"column length must satisfy 0 <= r <= k={ctx.k}, got {r}")
    return _canonical_column(r, ctx.k, ctx.n)


@dataclass(frozen=True)
class CanonicalReport:
    supported_above: bool
    diagonal_value: bool
    homogeneous: bool
    gkm: bool

    @property
    def ok(self) -> bool:
        return self.supported_above and self.diagonal_value and self.homogeneous and self.gkm


def canonical_diagonal(r: int, ctx: GrContext) -> Poly:
    """prod_{p=1}^r (t_{k-r+1} - t_{k-r+1+p})."""
    out = ONE
    a = ctx.k - r + 1
    for p in range(1, r + 1):
        out = out * (t(a) - t(a + p))
    return out


def check_canonical_column(r: int, ctx: GrContext) -> CanonicalReport:
    """The four conditions characterising a canonical Schubert class."""
    table = canonical_column_class(r, ctx)
    col = Partition([1] * r)
    supported = all(not table[p] for p in fixed_points(ctx) if not p.partition.contains(col))
    diagonal = table[point_of(col, ctx)] == canonical_diagonal(r, ctx)
    homogeneous = all(not v or v.weighted_degrees(ctx.n) == {r} for v in table.values.values())
    return CanonicalReport(supported, diagonal, homogeneous, gkm_check(table))


# -- oracle for products ----------------------------------------------------

def verify_product_by_localization(lam, mu, result: ClassExpr) -> bool:
    """Pointwise product of the factors' restrictions equals the restriction
    of ``result`` at every fixed point."""
    ctx = result.ctx
    left = restrict_expr(ClassExpr.basis(ctx, EQUIVARIANT, lam)) * restrict_expr(ClassExpr.basis(ctx, EQUIVARIANT, mu))
    return left == restrict_expr(result)


def swap_t(p: Poly, i: int, j: int) -> Poly:
    return substitute(p, VarSubstitution({(T, i): t(j), (T, j): t(i)}))


def transpose_point(b: FixedPoint, i: int, j: int) -> FixedPoint:
    bits = list(b.bits)
    bits[i - 1], bits[j - 1] = bits[j - 1], bits[i - 1]
    return FixedPoint("".join(bits))


__all__ = [
    "CanonicalReport", "FixedPoint", "LocalizationError", "RestrictionTable", "bruhat_leq",
    "canonical_column_class", "canonical_diagonal", "check_canonical_column", "fixed_points",
    "gkm_check", "point_of", "restrict_expr", "restrict_hat_class", "table_of",
    "verify_product_by_localization",
]
