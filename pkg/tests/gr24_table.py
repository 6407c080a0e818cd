"""Multiplication table of QH*_{U(4)}(Gr(2,4)) in the hat-sigma basis,
transcribed cell by cell.  Coefficients are polynomials in e1..e4 and q.

Two cells are kept exactly as printed even though they are not products:
(1)*(1) reads hat-sigma_1 + hat-sigma_11 (wrong degree) and (2)*(21)
stops after three terms.  ENGINE_VALUES holds what the products are.
"""

from grasschub.partitions import Partition
from grasschub.polyring import ONE, e, q

E1, E2, E3, E4 = e(1), e(2), e(3), e(4)
Q4 = E4 + q


def _cell(**terms):
    out = {}
    for key, c in terms.items():
        shape = Partition(int(ch) for ch in key[1:]) if key != "unit" else Partition()
        out[shape] = c
    return out


S1, S2, S11, S21, S22 = (Partition(p) for p in ([1], [2], [1, 1], [2, 1], [2, 2]))

PRINTED = {
    (S1, S1): _cell(s1=ONE, s11=ONE),
    (S1, S2): _cell(s21=ONE, s2=-E1, s1=-E2, unit=-E3),
    (S1, S11): _cell(s21=ONE),
    (S1, S21): _cell(s22=ONE, s21=-E1, s11=-E2, unit=Q4),
    (S1, S22): _cell(s22=-E1, s11=E3, s1=Q4),
    (S2, S2): _cell(s22=ONE, s21=-E1, s11=-E2, s2=E1 ** 2 - E2, s1=E1 * E2 - E3, unit=E1 * E3),
    (S2, S11): _cell(s21=-E1, s11=-E2, unit=Q4),
    (S2, S21): _cell(s22=-E1, s21=E1 ** 2 - E2, s11=E1 * E2),
    (S2, S22): _cell(s22=E1 ** 2 - E2, s11=-E1 * E3 + Q4, s1=-E1 * Q4),
    (S11, S11): _cell(s22=ONE),
    (S11, S21): _cell(s22=-E1, s11=E3, s1=Q4),
    (S11, S22): _cell(s22=E2, s21=E3, s2=Q4),
    (S21, S21): _cell(s22=E1 ** 2, s21=E3, s11=Q4 - E1 * E3, s2=Q4, s1=-E1 * Q4),
    (S21, S22): _cell(s22=E3 - E1 * E2, s21=Q4 - E1 * E3, s2=-E1 * Q4),
    (S22, S22): _cell(s22=E2 ** 2 - E1 * E3, s21=E2 * E3 - E1 * Q4, s11=E3 ** 2 - E2 * Q4,
                      s2=E2 * Q4, s1=E3 * Q4, unit=Q4 ** 2),
}

# the printed (1)*(1) cell is a typo for the classical Pieri value
SUSPECTED_TYPO = {(S1, S1): _cell(s2=ONE, s11=ONE)}

# the printed (2)*(21) cell is truncated; the full product also has
# (e4+q) hat-sigma_1 - e1 (e4+q)
TRUNCATED = {(S2, S21): _cell(s22=-E1, s21=E1 ** 2 - E2, s11=E1 * E2, s1=Q4, unit=-E1 * Q4)}

ENGINE_VALUES = {**PRINTED, **SUSPECTED_TYPO, **TRUNCATED}
