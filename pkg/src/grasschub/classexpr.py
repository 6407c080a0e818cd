"""Elements of the four Schubert rings of Gr(k, n).

A :class:`ClassExpr` is a finite combination of basis classes indexed by
partitions in the k x (n-k) rectangle, with coefficients in ``Poly``.
The ring tag fixes which variables a coefficient may contain.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping

from .partitions import GrContext, Partition, basis_key
from .polyring import E, ONE, Q, T, ZERO, Poly

CLASSICAL = "classical"
QUANTUM = "quantum"
EQUIVARIANT = "equivariant"
EQ_QUANTUM = "equivariant-quantum"
RINGS = (CLASSICAL, QUANTUM, EQUIVARIANT, EQ_QUANTUM)

ALLOWED_KINDS = {
    CLASSICAL: frozenset(),
    QUANTUM: frozenset({Q}),
    EQUIVARIANT: frozenset({E}),
    EQ_QUANTUM: frozenset({E, Q}),
}

_SYMBOL = {CLASSICAL: "σ", QUANTUM: "σ", EQUIVARIANT: "σ̂", EQ_QUANTUM: "σ̂"}
_LATEX_SYMBOL = {CLASSICAL: r"\sigma", QUANTUM: r"\sigma",
                 EQUIVARIANT: r"\widehat{\sigma}", EQ_QUANTUM: r"\widehat{\sigma}"}


class RingDisciplineError(ValueError):
    pass


def render_key(p: Partition):
    return (-sum(p), [-x for x in p])


class ClassExpr:
    """Immutable element sum_nu coeffs[nu] * class_nu of a Schubert ring."""

    __slots__ = ("ctx", "ring", "_coeffs")

    def __init__(self, ctx: GrContext, ring: str, coeffs: Mapping | None = None, *, check: bool = True):
        if ring not in RINGS:
            raise ValueError(f"unknown ring {ring!r}")
        self.ctx = ctx
        self.ring = ring
        out = {}
        for p, c in (coeffs or {}).items():
            if isinstance(c, int):
                c = Poly.const(c)
            if c:
                out[Partition(p)] = c
        self._coeffs = out
        if check:
            self._check()

    def _check(self):
        allowed = ALLOWED_KINDS[self.ring]
        for p, c in self._coeffs.items():
            if not self.ctx.fits(p):
                raise RingDisciplineError(f"{p!r} lies outside the rectangle of {self.ctx}")
            for kind, idx in c.variables():
                if kind not in allowed:
                    raise RingDisciplineError(
                        f"coefficient {c} of {p!r} uses a variable not allowed in the {self.ring} ring")
                if kind == E and idx > self.ctx.n:
                    raise RingDisciplineError(f"e{idx} exceeds n={self.ctx.n}")

    # -- constructors -----------------------------------------------------
    @classmethod
    def basis(cls, ctx: GrContext, ring: str, p: Iterable[int]) -> "ClassExpr":
        return cls(ctx, ring, {ctx.check(p): ONE})

    @classmethod
    def scalar(cls, ctx: GrContext, ring: str, c) -> "ClassExpr":
        return cls(ctx, ring, {Partition(): c})

    @classmethod
    def zero(cls, ctx: GrContext, ring: str) -> "ClassExpr":
        return cls(ctx, ring, {})

    # -- access -----------------------------------------------------------
    def coeff(self, p: Iterable[int]) -> Poly:
        return self._coeffs.get(Partition(p), ZERO)

    def items(self):
        return self._coeffs.items()

    def as_dict(self) -> dict:
        return dict(self._coeffs)

    def support(self) -> list[Partition]:
        return sorted(self._coeffs, key=render_key)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, ClassExpr):
            return NotImplemented
        return self.ctx == other.ctx and self.ring == other.ring and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.ctx, self.ring, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f"ClassExpr({self.ctx}, {self.ring!r}, {self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # -- module operations ------------------------------------------------
    def _same(self, other: "ClassExpr"):
        if self.ctx != other.ctx or self.ring != other.ring:
            raise RingDisciplineError(
                f"cannot combine {self.ring} over {self.ctx} with {other.ring} over {other.ctx}")

    def __add__(self, other):
        if isinstance(other, (int, Poly)):
            other = ClassExpr.scalar(self.ctx, self.ring, other)
        self._same(other)
        out = dict(self._coeffs)
        for p, c in other._coeffs.items():
            out[p] = out.get(p, ZERO) + c
        return ClassExpr(self.ctx, self.ring, out, check=False)

    __radd__ = __add__

    def __neg__(self):
        return ClassExpr(self.ctx, self.ring, {p: -c for p, c in self._coeffs.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "ClassExpr":
        if isinstance(c, int):
            c = Poly.const(c)
        out = ClassExpr(self.ctx, self.ring, {p: c * v for p, v in self._coeffs.items()}, check=False)
        out._check()
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        self._same(other)
        from .rings import basis_product

        out: dict = {}
        for p1, c1 in self._coeffs.items():
            for p2, c2 in other._coeffs.items():
                c = c1 * c2
                for p, c3 in basis_product(self.ring, p1, p2, self.ctx).items():
                    out[p] = out.get(p, ZERO) + c * c3
        return ClassExpr(self.ctx, self.ring, out, check=False)

    def __rmul__(self, other):
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        return NotImplemented

    def map_coeffs(self, fn: Callable[[Poly], Poly], ring: str | None = None,
                   ctx: GrContext | None = None) -> "ClassExpr":
        return ClassExpr(ctx or self.ctx, ring or self.ring,
                         {p: fn(c) for p, c in self._coeffs.items()})

    def max_q_degree(self) -> int:
        return max((c.q_degree() for c in self._coeffs.values()), default=0)

    def has_q(self) -> bool:
        return any(Q in c.kinds() for c in self._coeffs.values())

    # -- rendering --------------------------------------------------------
    def to_text(self, explicit_unit: bool = False) -> str:
        if not self._coeffs:
            return "0"
        sym = _SYMBOL[self.ring]
        n = self.ctx.n
        pieces = []
        for i, p in enumerate(self.support()):
            c = self._coeffs[p]
            basis = f"{sym}[{','.join(map(str, p))}]"
            unit = not p and not explicit_unit
            negative = False
            if len(c) == 1:
                ((m, v),) = c.items()
                negative = v < 0
                mag = -c if negative else c
                if mag == ONE:
                    body = "1" if unit else basis
                elif unit:
                    body = mag.to_text(n)
                else:
                    body = f"{mag.to_text(n)} · {basis}"
            elif unit:
                # a bare polynomial: fold its own leading sign into the separator
                body = c.to_text(n)
                if i > 0 and body.startswith("-"):
                    negative, body = True, body[1:]
            else:
                body = f"({c.to_text(n)}) · {basis}"
            if i == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def to_latex(self) -> str:
        if not self._coeffs:
            return "0"
        sym = _LATEX_SYMBOL[self.ring]
        n = self.ctx.n
        pieces = []
        for i, p in enumerate(self.support()):
            c = self._coeffs[p]
            basis = f"{sym}_{{{','.join(map(str, p))}}}" if p else ""
            if len(c) == 1:
                ((m, v),) = c.items()
                negative = v < 0
                mag = -c if negative else c
                body = basis if (mag == ONE and basis) else mag.to_latex(n) + basis
                sign = "-" if negative else ("+" if i else "")
            else:
                body = (f"({c.to_latex(n)})" if basis else c.to_latex(n)) + basis
                sign = "+" if i else ""
                if not basis and c.sorted_terms(n)[0][1] < 0 and i:
                    sign = ""
            pieces.append(sign + body)
        return "".join(pieces)

    def to_json(self) -> dict:
        n = self.ctx.n
        return {
            "ctx": {"k": self.ctx.k, "n": n},
            "ring": self.ring,
            "terms": [{"partition": list(p), "coeff": self._coeffs[p].to_json(n)}
                      for p in sorted(self._coeffs, key=basis_key)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "ClassExpr":
        if isinstance(data, str):
            data = json.loads(data)
        ctx = GrContext(int(data["ctx"]["k"]), int(data["ctx"]["n"]))
        coeffs: dict = {}
        for term in data["terms"]:
            p = Partition(term["partition"])
            coeffs[p] = coeffs.get(p, ZERO) + Poly.from_json(term["coeff"])
        return cls(ctx, data["ring"], coeffs)


def uses_t(expr: ClassExpr) -> bool:
    return any(T in c.kinds() for _, c in expr.items())
