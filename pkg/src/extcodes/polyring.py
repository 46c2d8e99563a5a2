"""Dense polynomials over GF(q), cyclotomic cosets, minimal polynomials,
and the splitting of x^n - lambda into minimal polynomials."""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import DivisionByZero, NotCoprime
from .gf import Embedding, Field, FieldElement, element_order, extension_field, make_embedding

# Degree of the zero polynomial.
NEG_INF = -math.inf


class Poly:
    """Polynomial with coefficients stored low-degree-first as field encodings."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int | FieldElement]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x_power(cls, field: Field, n: int, const: int = 0) -> "Poly":
        """x^n + const."""
        c = [0] * (n + 1)
        c[n] = 1
        c[0] = field.add(c[0], const)
        return cls(field, c)

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable[int]) -> "Poly":
        out = cls(field, [1])
        for r in roots:
            out = out * cls(field, [field.neg(r), 1])
        return out

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + ("*" if coef and mono else "") + mono)
        return "Poly(" + " + ".join(reversed(terms)) + ")"

    def to_json(self) -> dict:
        return {"field": self.field.descriptor(), "coeffs": list(self.coeffs)}

    # ring operations

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [f.add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        if not self.coeffs or not other.coeffs:
            return Poly(f, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        return Poly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        return Poly(self.field, [0] * k + list(self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        if len(rem) - 1 < dd:
            return Poly(f, []), Poly(f, rem)
        inv_lead = f.inv(other.lead())
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            t = f.mul(c, inv_lead)
            quot[k - dd] = t
            for i, b in enumerate(other.coeffs):
                if b:
                    rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(t, b))
        return Poly(f, quot), Poly(f, rem[:dd])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead()))

    def __call__(self, x: int | FieldElement) -> int:
        """Horner evaluation at a point of the same field (encoding in, encoding out)."""
        f = self.field
        x = int(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    eval = __call__

    def reciprocal(self) -> "Poly":
        """Monic x^deg * f(1/x)."""
        return Poly(self.field, reversed(self.coeffs)).monic()

    def lift(self, emb: Embedding) -> "Poly":
        """Same polynomial with coefficients pushed into the bigger field."""
        return Poly(emb.big, [emb(c) for c in self.coeffs])

    def descend(self, emb: Embedding) -> "Poly":
        """Inverse of ``lift``; raises NotASubfield if a coefficient is outside the subfield."""
        return Poly(emb.small, [emb.inverse(c) for c in self.coeffs])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(polys: Sequence[Poly]) -> Poly:
    out = Poly(polys[0].field, [1])
    for p in polys:
        out = (out * p) // poly_gcd(out, p)
    return out.monic()


def poly_arith(a: Poly, b: Poly | int | None, op: str):
    """Single entry point over the ring operations; ``eval`` takes a point as ``b``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divmod":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    if op == "eval":
        return a(b)
    if op == "reciprocal":
        return a.reciprocal()
    raise ValueError(f"unknown polynomial operation {op!r}")


@dataclass(frozen=True)
class CosetTable:
    q: int
    rn: int
    r: int
    cosets: tuple[tuple[int, ...], ...]
    leaders: tuple[int, ...]
    gamma1: tuple[int, ...]

    def coset_of(self, i: int) -> tuple[int, ...]:
        i %= self.rn
        for c in self.cosets:
            if i in c:
                return c
        raise KeyError(i)  # pragma: no cover - cosets partition Z_rn


def multiplicative_order(a: int, n: int) -> int:
    """ord_n(a); requires gcd(a, n) = 1."""
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def cyclotomic_cosets(q: int, rn: int, r: int = 1) -> CosetTable:
    if gcd(q, rn) != 1:
        raise NotCoprime(f"gcd({q}, {rn}) != 1")
    if (q - 1) % r != 0 or rn % r != 0:
        raise ValueError(f"r={r} must divide both q-1={q - 1} and rn={rn}")
    seen = [False] * rn
    cosets = []
    for i in range(rn):
        if seen[i]:
            continue
        c, j = [], i
        while not seen[j]:
            seen[j] = True
            c.append(j)
            j = j * q % rn
        cosets.append(tuple(sorted(c)))
    leaders = tuple(c[0] for c in cosets)
    gamma1 = tuple(i for i in leaders if i % r == 1 % r)
    return CosetTable(q, rn, r, tuple(cosets), leaders, gamma1)


def minimal_poly(element: FieldElement, over: Field) -> Poly:
    """Minimal polynomial over ``over`` of an element of an extension field."""
    big = element.field
    emb = make_embedding(over, big)
    conj, y = [], element.value
    while y not in conj:
        conj.append(y)
        y = big.pow(y, over.q)
    return Poly.from_roots(big, conj).descend(emb)


@dataclass(frozen=True)
class RootContext:
    """Where the roots of x^n - lambda live.

    ``beta`` is a primitive rn-th root of unity in ``big`` with beta^n = lambda,
    taken as alpha^(j (q^m - 1)/rn) for the least admissible j (j = 1 whenever
    lambda is the matching power of alpha).
    """

    field: Field
    big: Field
    emb: Embedding
    n: int
    lam: int
    r: int
    m: int
    beta: int

    @property
    def rn(self) -> int:
        return self.r * self.n

    def beta_power(self, i: int) -> int:
        return self.big.pow(self.beta, i)


def root_context(
    field: Field,
    n: int,
    lam: int,
    splitting_poly: Sequence[int] | None = None,
    beta: int | None = None,
) -> RootContext:
    if gcd(n, field.q) != 1:
        raise NotCoprime(f"gcd(n={n}, q={field.q}) != 1")
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    r = element_order(field(lam))
    rn = r * n
    m = multiplicative_order(field.q, rn)
    big = extension_field(field, m, splitting_poly)
    if splitting_poly is not None and beta is not None and big.s // field.s != m:
        raise ValueError("pinned splitting field has the wrong degree")
    emb = make_embedding(field, big)
    big_n1 = big.q - 1
    step = big_n1 // rn
    if beta is None:
        target = emb(lam)
        for j in range(1, rn + 1):
            if gcd(j, rn) != 1:
                continue
            b = big.exp_of(step * j)
            if big.pow(b, n) == target:
                beta = b
                break
        else:  # pragma: no cover - j = L / ((q^m-1)/r) mod r always qualifies
            raise ValueError("no primitive rn-th root of unity maps to lambda")
    else:
        if element_order(big(beta)) != rn or big.pow(beta, n) != emb(lam):
            raise ValueError("beta must be a primitive rn-th root of unity with beta^n = lambda")
    return RootContext(field, big, emb, n, lam, r, m, beta)


def factor_xn_minus_lambda(
    field: Field,
    n: int,
    lam: int,
    splitting_poly: Sequence[int] | None = None,
    ctx: RootContext | None = None,
) -> list[tuple[Poly, int]]:
    """Irreducible factors of x^n - lambda, each tagged with its coset leader in Gamma^(1)."""
    ctx = ctx or root_context(field, n, lam, splitting_poly)
    table = cyclotomic_cosets(field.q, ctx.rn, ctx.r)
    out = []
    for i in table.gamma1:
        roots = [ctx.beta_power(j) for j in table.coset_of(i)]
        out.append((Poly.from_roots(ctx.big, roots).descend(ctx.emb), i))
    return out
