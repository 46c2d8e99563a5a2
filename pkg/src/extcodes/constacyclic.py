"""lambda-constacyclic codes: generator/check polynomials, duals, the BCH
bound over runs of zeros, and codewords from the trace representation."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .code_core import LinearCode, from_generator
from .errors import FieldMismatch, NotADivisor
from .gf import Field
from .polyring import Poly, RootContext, cyclotomic_cosets, root_context


@dataclass(frozen=True, eq=False)
class ConstacyclicCode:
    field: Field
    n: int
    lam: int
    g: Poly
    h: Poly
    ctx: RootContext
    linear: LinearCode = dc_field(repr=False)

    @property
    def k(self) -> int:
        return self.linear.k

    @property
    def beta(self) -> int:
        return self.ctx.beta

    def descriptor(self) -> dict:
        return {
            "field": self.field.descriptor(),
            "n": self.n,
            "lambda": self.lam,
            "g": list(self.g.coeffs),
            "splitting_poly": list(self.ctx.big.poly),
            "beta": self.ctx.beta,
        }

    def zeros(self) -> list[int]:
        """Exponents j (j = 1 mod r) with g(beta^j) = 0."""
        big_g = self.g.lift(self.ctx.emb)
        r = self.ctx.r
        return [j for j in range(self.ctx.rn) if j % r == 1 % r and big_g(self.ctx.beta_power(j)) == 0]

    def shift(self, c: np.ndarray) -> np.ndarray:
        """(c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2})."""
        c = np.asarray(c, dtype=np.int64)
        return np.concatenate([[self.field.mul(self.lam, int(c[-1]))], c[:-1]])


def x_n_minus(field: Field, n: int, lam: int) -> Poly:
    return Poly.x_power(field, n, field.neg(lam))


def _realize(field: Field, n: int, g: Poly) -> LinearCode:
    k = n - int(g.degree)
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i : i + len(g.coeffs)] = g.coeffs
    return from_generator(field, rows, n=n)


def make_constacyclic(
    field: Field,
    n: int,
    lam: int,
    g: Poly,
    splitting_poly: Sequence[int] | None = None,
    ctx: RootContext | None = None,
) -> ConstacyclicCode:
    if g.is_zero() or g.lead() != 1:
        raise ValueError("generator polynomial must be monic")
    ctx = ctx or root_context(field, n, lam, splitting_poly)
    h, rem = divmod(x_n_minus(field, n, lam), g)
    if not rem.is_zero():
        raise NotADivisor(f"{g} does not divide x^{n} - {lam}")
    return ConstacyclicCode(field, n, lam, g, h, ctx, _realize(field, n, g))


def coset_poly(ctx: RootContext, i: int) -> Poly:
    """Minimal polynomial over GF(q) of beta^i, as the product over its q-cyclotomic coset."""
    table = cyclotomic_cosets(ctx.field.q, ctx.rn, 1)
    roots = [ctx.beta_power(j) for j in table.coset_of(i)]
    return Poly.from_roots(ctx.big, roots).descend(ctx.emb)


def from_zeros(
    field: Field,
    n: int,
    lam: int,
    exponents: Sequence[int],
    splitting_poly: Sequence[int] | None = None,
    ctx: RootContext | None = None,
) -> ConstacyclicCode:
    """Generator = lcm of the minimal polynomials of beta^i, i in ``exponents``."""
    ctx = ctx or root_context(field, n, lam, splitting_poly)
    g = _lcm_of_cosets(ctx, exponents)
    return make_constacyclic(field, n, lam, g, ctx=ctx)


def from_check(
    field: Field,
    n: int,
    lam: int,
    exponents: Sequence[int],
    splitting_poly: Sequence[int] | None = None,
    ctx: RootContext | None = None,
) -> ConstacyclicCode:
    """Check polynomial = lcm of the minimal polynomials of beta^i."""
    ctx = ctx or root_context(field, n, lam, splitting_poly)
    h = _lcm_of_cosets(ctx, exponents)
    g, rem = divmod(x_n_minus(field, n, lam), h)
    assert rem.is_zero()
    return make_constacyclic(field, n, lam, g, ctx=ctx)


def _lcm_of_cosets(ctx: RootContext, exponents: Sequence[int]) -> Poly:
    table = cyclotomic_cosets(ctx.field.q, ctx.rn, 1)
    seen: set[int] = set()
    g = Poly(ctx.field, [1])
    for i in exponents:
        if i % ctx.r != 1 % ctx.r:
            raise ValueError(f"beta^{i} is not a root of x^n - lambda")
        c = table.coset_of(i)
        if c[0] not in seen:
            seen.add(c[0])
            g = g * coset_poly(ctx, c[0])
    return g


def dual_constacyclic(code: ConstacyclicCode) -> ConstacyclicCode:
    f = code.field
    lam_inv = f.inv(code.lam)
    ctx = code.ctx
    big = ctx.big
    dctx = root_context(f, code.n, lam_inv, splitting_poly=big.poly, beta=big.inv(ctx.beta))
    return make_constacyclic(f, code.n, lam_inv, code.h.reciprocal(), ctx=dctx)


def bch_lower_bound(code: ConstacyclicCode) -> int:
    """1 + the longest run of zeros beta^(1+rb), ..., beta^(1+r(b+delta-2)) of g."""
    ctx = code.ctx
    r, n = ctx.r, code.n
    big_g = code.g.lift(ctx.emb)
    # Position b holds exponent 1 + r b; positions wrap modulo n.
    is_zero = [big_g(ctx.beta_power(1 + r * b)) == 0 for b in range(n)]
    if all(is_zero):
        return n + 1
    best = run = 0
    for z in is_zero + is_zero:
        run = run + 1 if z else 0
        best = max(best, run)
    return min(best, n - 1) + 1


def trace_codeword(ctx: RootContext, terms: Sequence[tuple[int, int]]) -> np.ndarray:
    """(sum_j Tr_{q^{m_j}/q}(a_j beta^(-t i_j)))_{t<n} for terms (i_j, a_j).

    ``a_j`` is an element of the splitting field that must lie in GF(q^{m_j}),
    m_j being the size of the coset of i_j.
    """
    big, q, n = ctx.big, ctx.field.q, ctx.n
    table = cyclotomic_cosets(q, ctx.rn, 1)
    leaders = [table.coset_of(i)[0] for i, _ in terms]
    if len(set(leaders)) != len(leaders):
        raise ValueError("coset leaders must be distinct")
    n1 = big.q - 1
    acc = np.zeros(n, dtype=np.int64)
    t = np.arange(n, dtype=np.int64)
    for i, a in terms:
        mj = len(table.coset_of(i))
        if big.pow(a, q**mj) != a:
            raise FieldMismatch(f"coefficient {a} is not in GF(q^{mj})")
        if a == 0:
            continue
        lb = big.log_of(ctx.beta)
        logs = (big.log_of(a) - t * i * lb) % n1
        for e in range(mj):
            acc = big.vadd(acc, big.exp[(logs * (q**e % n1)) % n1])
    if np.any([not ctx.emb.contains(int(v)) for v in acc]):  # pragma: no cover - traces land in GF(q)
        raise FieldMismatch("trace left the base field")
    return np.array([ctx.emb.inverse(int(v)) for v in acc], dtype=np.int64)
