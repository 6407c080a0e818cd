"""Sparse multivariate polynomials over the integers.

Variables are the universal Chern classes ``e1..en``, the torus weights
``t1..tn`` and the quantum parameter ``q``.  A variable is a pair
``(kind, index)`` with kind 0 for e, 1 for t and 2 for q (index 0).
Coefficients are Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

E, T, Q = 0, 1, 2
_KIND_NAMES = {E: "e", T: "t", Q: "q"}

Var = tuple  # (kind, index)
Monomial = tuple  # sorted tuple of (Var, exponent) pairs


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, x in b:
        exps[v] = exps.get(v, 0) + x
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable polynomial; ``terms`` maps monomials to nonzero ints."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, kind: int, index: int = 0, power: int = 1) -> "Poly":
        if power == 0:
            return cls.const(1)
        return cls({(((kind, index), power),): 1})

    # -- basic protocol -------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def constant(self) -> int:
        return self._terms.get((), 0)

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def kinds(self) -> set:
        return {v[0] for v in self.variables()}

    def max_index(self) -> int:
        return max((v[1] for v in self.variables() if v[0] != Q), default=0)

    def weighted_degrees(self, n: int) -> set:
        """Degrees of the monomials, with deg e_i = i, deg t_i = 1, deg q = n."""
        return {_mono_degree(m, n) for m in self._terms}

    def is_homogeneous(self, n: int) -> bool:
        return len(self.weighted_degrees(n)) <= 1

    def degree(self, n: int) -> int:
        """Maximal weighted degree; -1 for the zero polynomial."""
        return max(self.weighted_degrees(n), default=-1)

    def q_degree(self) -> int:
        return max((dict(m).get((Q, 0), 0) for m in self._terms), default=0)

    def coefficient_of_q(self, d: int) -> "Poly":
        """The part of self multiplying exactly q^d, with q^d stripped."""
        out = {}
        for m, c in self._terms.items():
            exps = dict(m)
            if exps.pop((Q, 0), 0) == d:
                out[tuple(sorted(exps.items()))] = c
        return Poly(out)

    def evaluate(self, values: Mapping) -> int:
        """Evaluate at integer values given per variable (missing -> error)."""
        total = 0
        for m, c in self._terms.items():
            term = c
            for v, x in m:
                term *= values[v] ** x
            total += term
        return total

    # -- ordering and rendering -----------------------------------------
    def sorted_terms(self, n: int | None = None) -> list:
        """Terms in the canonical order: higher weighted degree first, then
        fewer powers of q, then lexicographic with e1 < ... < en < t1 < ... < q
        (earlier variables dominate)."""
        if n is None:
            n = max(self.max_index(), 1)
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0], n))

    def to_text(self, n: int | None = None) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms(n)):
            body = _mono_text(m)
            mag = abs(c)
            if body:
                s = body if mag == 1 else f"{mag}*{body}"
            else:
                s = str(mag)
            if i == 0:
                pieces.append(s if c > 0 else f"-{s}")
            else:
                pieces.append(f" + {s}" if c > 0 else f" - {s}")
        return "".join(pieces)

    def to_latex(self, n: int | None = None) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms(n)):
            body = "".join(
                f"{_KIND_NAMES[v[0]]}" + (f"_{{{v[1]}}}" if v[0] != Q else "")
                + (f"^{{{x}}}" if x > 1 else "")
                for v, x in m
            )
            mag = abs(c)
            s = body if (body and mag == 1) else f"{mag}{body}"
            if i == 0:
                pieces.append(s if c > 0 else f"-{s}")
            else:
                pieces.append(f"+{s}" if c > 0 else f"-{s}")
        return "".join(pieces)

    # -- serialization ----------------------------------------------------
    def to_json(self, n: int | None = None) -> list:
        """JSON-ready list of terms ``{"c": str, "e": [...], "t": [...], "q": int}``.

        Exponent arrays have length ``n`` when given, otherwise the largest
        index present; arrays and q are omitted when all-zero.
        """
        width = n if n is not None else self.max_index()
        out = []
        for m, c in self.sorted_terms(n):
            exps = dict(m)
            term: dict = {"c": str(c)}
            for kind, key in ((E, "e"), (T, "t")):
                arr = [exps.get((kind, i), 0) for i in range(1, width + 1)]
                if any(arr):
                    term[key] = arr
            if exps.get((Q, 0)):
                term["q"] = exps[(Q, 0)]
            out.append(term)
        return out

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "Poly":
        out: dict = {}
        for term in data:
            exps = {}
            for kind, key in ((E, "e"), (T, "t")):
                for i, x in enumerate(term.get(key, ()), start=1):
                    if x < 0:
                        raise ValueError(f"negative exponent in {term!r}")
                    if x:
                        exps[(kind, i)] = x
            if term.get("q", 0):
                exps[(Q, 0)] = term["q"]
            m = tuple(sorted(exps.items()))
            out[m] = out.get(m, 0) + int(term["c"])
        return cls(out)


def _mono_degree(m: Monomial, n: int) -> int:
    deg = 0
    for (kind, idx), x in m:
        deg += x * (idx if kind == E else 1 if kind == T else n)
    return deg


def _mono_key(m: Monomial, n: int):
    exps = dict(m)
    qexp = exps.get((Q, 0), 0)
    width = max([n] + [v[1] for v in exps if v[0] != Q])
    vec = [exps.get((E, i), 0) for i in range(1, width + 1)]
    vec += [exps.get((T, i), 0) for i in range(1, width + 1)]
    return (-_mono_degree(m, n), qexp, [-x for x in vec])


def _mono_text(m: Monomial) -> str:
    parts = []
    for (kind, idx), x in m:
        name = _KIND_NAMES[kind] + (str(idx) if kind != Q else "")
        parts.append(name if x == 1 else f"{name}^{x}")
    return "*".join(parts)


ZERO = Poly()
ONE = Poly.const(1)
q = Poly.var(Q)


def e(i: int) -> Poly:
    """The universal elementary symmetric class e_i (e_0 = 1, e_i = 0 for i < 0)."""
    if i == 0:
        return ONE
    if i < 0:
        return ZERO
    return Poly.var(E, i)


def t(i: int) -> Poly:
    return Poly.var(T, i)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_neg(a: Poly) -> Poly:
    return -a


@dataclass(frozen=True)
class VarSubstitution:
    """A ring endomorphism given by images of finitely many variables;
    variables not listed are fixed."""

    images: Mapping = field(default_factory=dict)

    def __call__(self, p: Poly) -> Poly:
        return substitute(p, self)

    def compose(self, first: "VarSubstitution") -> "VarSubstitution":
        """``self ∘ first``: apply ``first`` then ``self``."""
        images = {v: substitute(img, self) for v, img in first.images.items()}
        for v, img in self.images.items():
            images.setdefault(v, img)
        return VarSubstitution(images)


IDENTITY = VarSubstitution({})


def substitute(p: Poly, s: VarSubstitution) -> Poly:
    images = s.images
    if not images:
        return p
    powers: dict = {}

    def power(v, x):
        key = (v, x)
        if key not in powers:
            powers[key] = images[v] ** x
        return powers[key]

    out = ZERO
    for m, c in p.items():
        fixed = []
        moved = Poly.const(c)
        for v, x in m:
            if v in images:
                moved = moved * power(v, x)
            else:
                fixed.append((v, x))
        if moved:
            out = out + moved * Poly({tuple(fixed): 1})
    return out


def elementary_symmetric(indices: Iterable[int], r: int) -> Poly:
    """e_r(t_i : i in indices)."""
    idx = sorted(set(indices))
    if r < 0 or r > len(idx):
        return ZERO
    if r == 0:
        return ONE
    return Poly({tuple(((T, i), 1) for i in combo): 1 for combo in combinations(idx, r)})


def e_to_t_substitution(n: int) -> VarSubstitution:
    return VarSubstitution({(E, i): elementary_symmetric(range(1, n + 1), i) for i in range(1, n + 1)})


def expand_e_in_t(p: Poly, ctx) -> Poly:
    """Replace every e_i by e_i(t_1..t_n); e_i with i > n vanish."""
    n = ctx.n
    images = {v: ZERO for v in p.variables() if v[0] == E and v[1] > n}
    images.update(e_to_t_substitution(n).images)
    return substitute(p, VarSubstitution(images))


def truncate_e(p: Poly, n: int) -> Poly:
    """Kill every e_i with i > n (they vanish once a Grassmannian is fixed)."""
    dead = {v: ZERO for v in p.variables() if v[0] == E and v[1] > n}
    return substitute(p, VarSubstitution(dead)) if dead else p


def divmod_difference(p: Poly, i: int, j: int) -> tuple[Poly, Poly]:
    """Divide p by (t_i - t_j), treating p as a polynomial in t_i.

    Returns ``(quotient, remainder)`` with p = quotient*(t_i - t_j) + remainder
    and the remainder free of t_i.
    """
    if i == j:
        raise ValueError("t_i - t_i is zero")
    ti = (T, i)
    # group by power of t_i: p = sum_a c_a t_i^a, c_a free of t_i
    by_power: dict[int, dict] = {}
    for m, c in p.items():
        exps = dict(m)
        a = exps.pop(ti, 0)
        rest = tuple(sorted(exps.items()))
        by_power.setdefault(a, {})
        by_power[a][rest] = by_power[a].get(rest, 0) + c
    if not by_power:
        return ZERO, ZERO
    top = max(by_power)
    coeffs = [Poly(by_power.get(a, {})) for a in range(top + 1)]
    # synthetic division by (t_i - t_j)
    tjp = Poly.var(T, j)
    quot = [ZERO] * top
    carry = ZERO
    for a in range(top, 0, -1):
        carry = coeffs[a] + carry * tjp if a != top else coeffs[a]
        quot[a - 1] = carry
    rem = coeffs[0] + (carry * tjp if top > 0 else ZERO)
    q_poly = ZERO
    for a, c in enumerate(quot):
        if c:
            q_poly = q_poly + c * Poly.var(T, i, a)
    return q_poly, rem
