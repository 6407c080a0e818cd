"""Dispatch of basis-class products by ring."""

from __future__ import annotations

from .classexpr import CLASSICAL, EQ_QUANTUM, EQUIVARIANT, QUANTUM
from .partitions import GrContext, Partition
from .polyring import Poly


def basis_product(ring: str, p1, p2, ctx: GrContext) -> dict[Partition, Poly]:
    """Product of two basis classes of ``ring`` as {partition: coefficient}."""
    if ring == CLASSICAL:
        from .quantum import basis_product_classical
        return basis_product_classical(p1, p2, ctx)
    if ring == QUANTUM:
        from .quantum import basis_product_quantum
        return basis_product_quantum(p1, p2, ctx)
    if ring == EQUIVARIANT:
        from .equivariant import basis_product_equivariant
        return basis_product_equivariant(p1, p2, ctx)
    if ring == EQ_QUANTUM:
        from .eq_quantum import basis_product_eq_quantum
        return basis_product_eq_quantum(p1, p2, ctx)
    raise ValueError(f"unknown ring {ring!r}")
