"""Schubert calculus on Grassmannians in classical, quantum, equivariant and
equivariant quantum cohomology."""

from .classexpr import CLASSICAL, EQ_QUANTUM, EQUIVARIANT, QUANTUM, ClassExpr, RingDisciplineError
from .eq_quantum import eq_quantum_pieri, f_tilde_map, giambelli_check, product_eq_quantum
from .equivariant import (
    equivariant_pieri,
    hat_sigma_r_reduced,
    inv_star,
    prime_class,
    product_equivariant,
    tilde_sigma_r,
)
from .lr import expand_product_infinite, lr_coefficient
from .partitions import GrContext, Partition, PartitionError, parse_partition
from .polyring import Poly, e, q, t
from .quantum import (
    f_map,
    gw_invariant,
    product_classical,
    product_quantum,
    product_quantum_rimhook,
    qinv,
    quantum_lr,
    quantum_pieri_column,
    quantum_pieri_row,
    rim_hook_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL",
    "ClassExpr",
    "EQUIVARIANT",
    "EQ_QUANTUM",
    "GrContext",
    "Partition",
    "PartitionError",
    "Poly",
    "QUANTUM",
    "RingDisciplineError",
    "e",
    "eq_quantum_pieri",
    "equivariant_pieri",
    "expand_product_infinite",
    "f_map",
    "f_tilde_map",
    "giambelli_check",
    "gw_invariant",
    "hat_sigma_r_reduced",
    "inv_star",
    "lr_coefficient",
    "parse_partition",
    "prime_class",
    "product_classical",
    "product_eq_quantum",
    "product_equivariant",
    "product_quantum",
    "product_quantum_rimhook",
    "q",
    "qinv",
    "quantum_lr",
    "quantum_pieri_column",
    "quantum_pieri_row",
    "rim_hook_reduce",
    "t",
    "tilde_sigma_r",
]
