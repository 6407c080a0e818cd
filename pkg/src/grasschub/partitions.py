"""Young-diagram combinatorics for Schubert calculus on Gr(k, n)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


class PartitionError(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction; ``p[i]`` past the end
    raises like any tuple, use :meth:`part` for the zero-padded read.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 0:
                raise PartitionError(f"negative part at position {i + 1}")
            if i and x > parts[i - 1]:
                raise PartitionError(f"not weakly decreasing at position {i + 1}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def part(self, i: int) -> int:
        """0-based part with the convention that missing parts are 0."""
        return self[i] if 0 <= i < len(self) else 0

    def length(self) -> int:
        return len(self)

    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: Iterable[int]) -> bool:
        other = Partition(other)
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def tail(self) -> "Partition":
        """The partition with its top row deleted."""
        return Partition(self[1:])


EMPTY = Partition()


@dataclass(frozen=True)
class GrContext:
    """The Grassmannian Gr(k, n) of k-planes in C^n."""

    k: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.n, int)) or not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def rect_rows(self) -> int:
        return self.k

    @property
    def rect_cols(self) -> int:
        return self.n - self.k

    def dual(self) -> "GrContext":
        return GrContext(self.n - self.k, self.n)

    def fits(self, p: Iterable[int]) -> bool:
        p = Partition(p)
        return len(p) <= self.k and (not p or p[0] <= self.n - self.k)

    def check(self, p: Iterable[int]) -> Partition:
        p = Partition(p)
        if not self.fits(p):
            raise PartitionError(
                f"partition {p!r} does not fit the {self.k}x{self.n - self.k} rectangle of {self}"
            )
        return p

    def basis(self) -> list[Partition]:
        """All partitions in the rectangle, by size then reverse-lex."""
        return rectangle_partitions(self.k, self.n - self.k)

    def __str__(self):
        return f"Gr({self.k},{self.n})"


def basis_key(p: Partition):
    return (sum(p), [-x for x in p])


@lru_cache(maxsize=None)
def _rect(rows: int, cols: int) -> tuple:
    out = []

    def rec(prefix, cap, left):
        out.append(Partition(prefix))
        if left == 0:
            return
        for x in range(1, cap + 1):
            rec(prefix + [x], x, left - 1)

    rec([], cols, rows)
    return tuple(sorted(out, key=basis_key))


def rectangle_partitions(rows: int, cols: int) -> list[Partition]:
    return list(_rect(rows, cols))


def partitions_of(size: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` with optional bounds on parts and length."""
    if max_part is None:
        max_part = size
    if max_len is None:
        max_len = size

    def rec(left, cap, slots):
        if left == 0:
            yield ()
            return
        if slots == 0:
            return
        for x in range(min(left, cap), 0, -1):
            for rest in rec(left - x, x, slots - 1):
                yield (x,) + rest

    for parts in rec(size, max_part, max_len):
        yield Partition(parts)


def conjugate(p: Iterable[int]) -> Partition:
    p = Partition(p)
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x > i) for i in range(p[0]))


def _vertical_additions(p: Partition, r: int, max_rows: int | None, max_cols: int | None) -> list[Partition]:
    rows = len(p) + r if max_rows is None else max_rows
    padded = list(p) + [0] * max(0, rows - len(p))
    if len(padded) > rows:
        return []
    out = []
    for chosen in combinations(range(rows), r):
        new = padded[:]
        for i in chosen:
            new[i] += 1
        if max_cols is not None and new and new[0] > max_cols:
            continue
        if all(new[i] >= new[i + 1] for i in range(rows - 1)):
            out.append(Partition(new))
    return out


def horizontal_strips(p: Iterable[int], r: int, max_rows: int | None = None,
                      max_cols: int | None = None) -> list[Partition]:
    """All partitions obtained from p by adding a horizontal r-strip, subject
    to optional row/column bounds (no bound means Gr(k, infinity) style)."""
    p = Partition(p)
    if r < 0:
        return []
    rows = len(p) + 1
    if max_rows is not None:
        rows = min(rows, max_rows)
        if len(p) > max_rows:
            return []
    out = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(Partition(acc))
            return
        cur = p.part(i)
        cap = left if i == 0 else min(left, p.part(i - 1) - cur)
        if max_cols is not None:
            cap = min(cap, max_cols - cur)
        for a in range(cap, -1, -1):
            rec(i + 1, left - a, acc + [cur + a])

    rec(0, r, [])
    return out


def add_strip(p: Iterable[int], r: int, orientation: str, ctx: GrContext) -> list[Partition]:
    """p ⊕ 1^r (vertical) or p ⊕ r (horizontal) inside the rectangle of ctx."""
    p = Partition(p)
    if r < 0:
        return []
    if orientation == "vertical":
        if not ctx.fits(p):
            return []
        return sorted(set(_vertical_additions(p, r, ctx.k, ctx.n - ctx.k)), key=basis_key)
    if orientation == "horizontal":
        return sorted(set(horizontal_strips(p, r, ctx.k, ctx.n - ctx.k)), key=basis_key)
    raise ValueError(f"orientation must be 'vertical' or 'horizontal', got {orientation!r}")


def remove_vertical_strip(p: Iterable[int], s: int) -> list[Partition]:
    """All mu inside p with p/mu a vertical strip of size s."""
    p = Partition(p)
    if s < 0 or s > len(p):
        return []
    found = set()
    for rows in combinations(range(len(p)), s):
        new = list(p)
        for i in rows:
            new[i] -= 1
        if all(new[i] >= new[i + 1] for i in range(len(new) - 1)):
            found.add(Partition(new))
    return sorted(found, key=basis_key)


def remove_horizontal_strip(p: Iterable[int], s: int) -> list[Partition]:
    """All mu inside p with p/mu a horizontal strip of size s."""
    p = Partition(p)
    return sorted((conjugate(m) for m in remove_vertical_strip(conjugate(p), s)), key=basis_key)


@dataclass(frozen=True)
class RimHookResult:
    remainder: Partition
    width_rows: int
    start_row: int


def find_rim_hooks(p: Iterable[int], n: int) -> list[RimHookResult]:
    """Every n-rim hook of p, one per admissible starting row (0-based).

    The hook starts at the rightmost box of its first row and walks the
    southeast rim leftward and downward.
    """
    p = Partition(p)
    if n < 1:
        raise ValueError("rim hook size must be positive")
    hooks = []
    for r in range(len(p)):
        used, s = 0, r
        while True:
            below = p.part(s + 1)
            need = n - used
            if need <= p[s] - below:
                rem = list(p[:r]) + [p[i + 1] - 1 for i in range(r, s)] + [p[s] - need] + list(p[s + 1:])
                hooks.append(RimHookResult(Partition(rem), s - r + 1, r))
                break
            # passing through row s takes p[s]-below+1 boxes; stopping exactly
            # there leaves a non-partition, and below == 0 means no next row
            if below == 0 or need == p[s] - below + 1:
                break
            used += p[s] - below + 1
            s += 1
    return hooks


def add_rim_hooks(p: Iterable[int], n: int, rows: int) -> list[tuple[Partition, int]]:
    """All (rho, w) with rho having at most ``rows`` rows and an n-rim hook
    of w rows whose removal gives p.  Uses beta-numbers, independent of
    :func:`find_rim_hooks`."""
    p = Partition(p)
    if len(p) > rows:
        return []
    beta = [p.part(i) + rows - 1 - i for i in range(rows)]
    present = set(beta)
    out = []
    for b in beta:
        if b + n in present:
            continue
        w = 1 + sum(1 for c in beta if b < c < b + n)
        new = sorted((c + n if c == b else c for c in beta), reverse=True)
        out.append((Partition(x - (rows - 1 - i) for i, x in enumerate(new)), w))
    return out


def to_01_string(p: Iterable[int], ctx: GrContext) -> str:
    """Boundary word of p in the k x (n-k) rectangle, read from the SW to
    the NE corner: 0 for a vertical step, 1 for a horizontal step."""
    p = ctx.check(p)
    out, col = [], 0
    for i in range(ctx.k - 1, -1, -1):
        out.append("1" * (p.part(i) - col))
        col = p.part(i)
        out.append("0")
    out.append("1" * (ctx.n - ctx.k - col))
    return "".join(out)


def from_01_string(b: str) -> Partition:
    if set(b) - {"0", "1"}:
        raise PartitionError(f"not a 01-string: {b!r}")
    parts, col = [], 0
    for ch in b:
        if ch == "1":
            col += 1
        else:
            parts.append(col)
    return Partition(reversed(parts))


def check_01_string(b: str, ctx: GrContext) -> str:
    if set(b) - {"0", "1"} or b.count("0") != ctx.k or len(b) != ctx.n:
        raise PartitionError(f"{b!r} is not a 01-string of type ({ctx.k},{ctx.n - ctx.k})")
    return b


def complement(p: Iterable[int], ctx: GrContext) -> Partition:
    p = ctx.check(p)
    return Partition(ctx.n - ctx.k - p.part(ctx.k - 1 - i) for i in range(ctx.k))


_PART_RE = re.compile(r"^\s*\[?\s*(.*?)\s*\]?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse "[5,4,4,2,2]", "5,4,4,2,2" or "[]"."""
    m = _PART_RE.match(text)
    body = m.group(1) if m else text
    if body == "":
        return EMPTY
    fields = [f.strip() for f in body.split(",")]
    parts = []
    for i, f in enumerate(fields, start=1):
        if not re.fullmatch(r"\d+", f):
            raise PartitionError(f"bad part {f!r} at position {i}")
        parts.append(int(f))
    return Partition(parts)
