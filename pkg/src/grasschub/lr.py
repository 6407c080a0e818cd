"""Classical Littlewood-Richardson coefficients by counting LR tableaux."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from ._det import int_determinant
from .partitions import Partition, basis_key


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Number of skew tableaux of shape nu/lam and content mu whose
    reverse reading word (right to left along rows, top to bottom) is a
    lattice word."""
    return _lr(Partition(lam), Partition(mu), Partition(nu))


@lru_cache(maxsize=200_000)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(lam) + sum(mu) != sum(nu) or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if not mu:
        return 1
    # skew boxes in reading order: rows top to bottom, columns right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam.part(r) - 1, -1)]
    filling: dict = {}
    counts = [0] * (len(mu) + 1)  # counts[v] for letters 1..len(mu)
    target = list(mu)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(mu)
        # rows weakly increase to the right: entry <= its right neighbour
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        # columns strictly increase downward
        above = filling.get((r - 1, c))
        lo = above + 1 if above is not None else 1
        # in an LR tableau, entries in row r are at most r+1
        hi = min(hi, r + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= target[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def _candidates(lam: Partition, mu: Partition, max_rows: int):
    size = sum(lam) + sum(mu)
    rows = min(max_rows, len(lam) + len(mu))
    cap = mu.part(0)

    def rec(i, left, prev, acc):
        if i == rows:
            if left == 0:
                yield Partition(acc)
            return
        lo = lam.part(i)
        hi = min(prev, lo + cap, lo + left)
        for x in range(hi, lo - 1, -1):
            yield from rec(i + 1, left - (x - lo), x, acc + [x])

    yield from rec(0, size - sum(lam), size, [])


def expand_product_infinite(lam: Iterable[int], mu: Iterable[int], max_rows: int) -> dict[Partition, int]:
    """s_lam * s_mu in symmetric functions of ``max_rows`` variables."""
    lam, mu = Partition(lam), Partition(mu)
    return dict(_expand(lam, mu, max_rows))


@lru_cache(maxsize=50_000)
def _expand(lam: Partition, mu: Partition, max_rows: int) -> tuple:
    if max_rows < 1:
        raise ValueError("max_rows must be positive")
    if len(lam) > max_rows or len(mu) > max_rows:
        return ()
    # the LR count is symmetric; put the bigger shape outside
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    out = {}
    for nu in _candidates(lam, mu, max_rows):
        c = _lr(lam, mu, nu)
        if c:
            out[nu] = c
    return tuple(sorted(out.items(), key=lambda kv: basis_key(kv[0])))


def complete_homogeneous_values(values: Sequence[int], top: int) -> list[int]:
    """[h_0, ..., h_top] evaluated at ``values``."""
    h = [1] + [0] * top
    for x in values:
        for r in range(1, top + 1):
            h[r] += x * h[r - 1]
    return h


def schur_evaluate(lam: Iterable[int], values: Sequence[int]) -> int:
    """s_lam(values) via the Jacobi-Trudi determinant det(h_{lam_i + j - i})."""
    lam = Partition(lam)
    if len(lam) > len(values):
        return 0
    if not lam:
        return 1
    m = len(lam)
    h = complete_homogeneous_values(values, lam[0] + m)
    mat = [[(h[lam[i] + j - i] if lam[i] + j - i >= 0 else 0) for j in range(m)] for i in range(m)]
    return int_determinant(mat)
