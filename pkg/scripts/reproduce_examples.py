"""Recompute the worked examples and print each with the expected value.

    python3 scripts/reproduce_examples.py
"""

from dataclasses import dataclass

from grasschub import GrContext
from grasschub.eq_quantum import product_eq_quantum
from grasschub.equivariant import hat_sigma_r_reduced, product_equivariant
from grasschub.quantum import quantum_lr_detail, quantum_pieri_column, product_quantum, rim_hook_reduce


@dataclass
class Example:
    label: str
    compute: object  # zero-argument callable returning something printable
    expected: str


def examples():
    g25, g24, g510 = GrContext(2, 5), GrContext(2, 4), GrContext(5, 10)
    return [
        Example("hat-sigma_4 reduced, Gr(2,5)", lambda: hat_sigma_r_reduced(4, g25),
                "-e1 · σ̂[3] - e2 · σ̂[2] - e3 · σ̂[1] - e4"),
        Example("hat-sigma_21 * hat-sigma_2, Gr(2,5)", lambda: product_equivariant([2, 1], [2], g25),
                "σ̂[3,2] - e1 · σ̂[3,1] - e2 · σ̂[2,1] - e3 · σ̂[1,1] + e5"),
        Example("sigma_21 * sigma_2, Gr(2,5)", lambda: product_quantum([2, 1], [2], g25), "σ[3,2] + q"),
        Example("sigma_41 by rim hooks, Gr(2,5)", lambda: rim_hook_reduce([4, 1], g25), "q"),
        Example("sigma_55433 * sigma_11, Gr(5,10)", lambda: quantum_pieri_column([5, 5, 4, 3, 3], 2, g510),
                "σ[5,5,5,4,3] + σ[5,5,4,4,4] + q · σ[5,3,2,2] + q · σ[4,4,2,2] + q · σ[4,3,3,2]"),
        Example("c^{21}_{55422,321}, Gr(5,10)",
                lambda: quantum_lr_detail([5, 4, 4, 2, 2], [3, 2, 1], [2, 1], g510).value, "q^2"),
        Example("c^{4221}_{3321,4321}, Gr(4,10)",
                lambda: quantum_lr_detail([3, 3, 2, 1], [4, 3, 2, 1], [4, 2, 2, 1], GrContext(4, 10)).value, "0"),
        Example("c^{4221}_{3321,4321}, Gr(5,10)",
                lambda: quantum_lr_detail([3, 3, 2, 1], [4, 3, 2, 1], [4, 2, 2, 1], g510).value, "6*q"),
        Example("hat-sigma_22 * hat-sigma_21, equivariant quantum Gr(2,4)",
                lambda: product_eq_quantum([2, 2], [2, 1], g24),
                "(-e1*e2 + e3) · σ̂[2,2] + (-e1*e3 + e4 + q) · σ̂[2,1] + (-e1*e4 - e1*q) · σ̂[2]"),
    ]


def main():
    failed = 0
    for ex in examples():
        got = str(ex.compute())
        ok = got == ex.expected
        failed += not ok
        print(f"{'ok ' if ok else 'BAD'} {ex.label}\n    {got}")
        if not ok:
            print(f"    expected {ex.expected}")
    return failed


if __name__ == "__main__":
    raise SystemExit(1 if main() else 0)
