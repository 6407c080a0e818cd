"""Determinants over commutative rings without division."""

from __future__ import annotations

from typing import Callable, Sequence


def determinant(matrix: Sequence[Sequence], zero, mul: Callable = None):
    """Laplace expansion along the first row, memoised on column subsets.

    Works for any ring elements supporting ``+``, ``-`` and ``*`` (or a
    custom ``mul``); costs O(2^m * m) products for an m x m matrix.
    """
    m = len(matrix)
    if m == 0:
        return zero + 1
    if mul is None:
        mul = lambda a, b: a * b  # noqa: E731
    memo: dict = {}

    def minor(row: int, cols: tuple):
        if row == m:
            return None  # empty product marker
        if cols in memo:
            return memo[cols]
        total = zero
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if _is_zero(entry):
                continue
            rest = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if rest is None:
                term = entry
            elif _is_zero(rest):
                continue
            else:
                term = mul(entry, rest)
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(m)))


def _is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    return not x


def int_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination over the integers."""
    a = [list(row) for row in matrix]
    m = len(a)
    if m == 0:
        return 1
    sign, prev = 1, 1
    for k in range(m - 1):
        if a[k][k] == 0:
            for r in range(k + 1, m):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[m - 1][m - 1]
