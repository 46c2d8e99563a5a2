"""Named code families: Reed-Solomon, conic chains, Hamming/Simplex,
constacyclic two-weight codes, ovoids, Denniston maximal arcs and several
BCH-type cyclic families."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

from .code_core import LinearCode, dual, dual_distance_upto, from_generator, nullspace
from .constacyclic import ConstacyclicCode, from_check, from_zeros, make_constacyclic
from .errors import (
    BadCharacteristic,
    DivisibilityViolated,
    FieldTooSmall,
    MissingAnchorPoints,
    NotAdditiveSubgroup,
    NotCharTwo,
    RangeError,
    ReduciblePolynomial,
    ReducibleBeta,
    SpecViolated,
    ZeroScale,
)
from .extension import extend, standard_extend
from .gf import Field, extension_field, make_embedding
from .polyring import Poly, root_context


# point sets


@dataclass(frozen=True, eq=False)
class PointSet:
    """Projective points stored as rows; the code generated has these as columns."""

    field: Field
    points: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def index_of(self, point: Sequence[int]) -> int | None:
        hits = np.nonzero(np.all(self.points == np.asarray(point), axis=1))[0]
        return int(hits[0]) if hits.size else None

    def code(self) -> LinearCode:
        return from_generator(self.field, self.points.T.copy(), n=len(self))

    def is_projective(self) -> bool:
        return dual_distance_upto(self.code(), 2) is None


def projective_points(field: Field, dim: int) -> np.ndarray:
    """All points of PG(dim-1, q), each normalised so its first nonzero entry is 1."""
    out = []
    for lead in range(dim):
        for tail in itertools.product(range(field.q), repeat=dim - lead - 1):
            out.append([0] * lead + [1] + list(tail))
    return np.array(out, dtype=np.int64)


def line_intersections(points: PointSet) -> np.ndarray:
    """For every line of PG(2, q), the number of points of the set on it."""
    f = points.field
    lines = projective_points(f, 3)
    on = f.matmul(points.points, lines.T) == 0
    return on.sum(axis=0)


# Reed-Solomon and conic chain


def cyclic_rs(field: Field, d: int) -> tuple[ConstacyclicCode, np.ndarray]:
    """Cyclic RS code of length q-1 with zeros alpha^0..alpha^(d-2), and the u making it MDS-extendable."""
    q = field.q
    if q <= 2 or not 2 <= d <= q - 2:
        raise RangeError(f"need q > 2 and 2 <= d <= q - 2 (q={q}, d={d})")
    ctx = root_context(field, q - 1, 1)
    g = Poly.from_roots(field, [field.exp_of(i) for i in range(d - 1)])
    code = make_constacyclic(field, q - 1, 1, g, ctx=ctx)
    u = np.array([field.exp_of(i * (d - 1)) for i in range(q - 1)], dtype=np.int64)
    return code, u


@dataclass(frozen=True, eq=False)
class ConicChain:
    c_alpha: LinearCode
    u1: np.ndarray
    u2: np.ndarray
    c1: LinearCode
    c2: LinearCode
    c3: LinearCode


def conic_generator(field: Field) -> np.ndarray:
    q = field.q
    cols = [[0, 0, 1]] + [[field.exp_of(2 * i), field.exp_of(i), 1] for i in range(q - 1)]
    return np.array(cols, dtype=np.int64).T


def conic_chain(field: Field) -> ConicChain:
    q = field.q
    if q <= 3:
        raise FieldTooSmall("the conic chain needs q > 3")
    neg = field.neg
    c_alpha = from_generator(field, conic_generator(field))
    u1 = np.array([0] + [neg(field.exp_of(-2 * i)) for i in range(q - 1)], dtype=np.int64)
    u2 = np.array([0] + [neg(field.exp_of(-i)) for i in range(q - 1)] + [0], dtype=np.int64)
    c1 = extend(c_alpha, u1)
    c2 = extend(c1, u2)
    return ConicChain(c_alpha, u1, u2, c1, c2, standard_extend(c2))


# Hamming and Simplex


@dataclass(frozen=True, eq=False)
class HammingSetup:
    field: Field
    big: Field
    m: int
    a: np.ndarray
    points: np.ndarray  # alpha_i = a_i alpha^i as elements of the big field

    @property
    def n(self) -> int:
        return int(self.a.size)


def hamming_setup(field: Field, m: int, a: Sequence[int] | None = None, big_poly=None) -> HammingSetup:
    q = field.q
    n = (q**m - 1) // (q - 1)
    big = extension_field(field, m, big_poly)
    emb = make_embedding(field, big)
    a_arr = np.ones(n, dtype=np.int64) if a is None else np.asarray([int(x) for x in a], dtype=np.int64)
    if a_arr.size != n:
        raise ValueError(f"a must have length {n}")
    if np.any(a_arr == 0):
        raise ZeroScale("every a_i must be nonzero")
    pts = np.array([big.mul(emb(int(a_arr[i])), big.exp_of(i)) for i in range(n)], dtype=np.int64)
    return HammingSetup(field, big, m, a_arr, pts)


def _trace_check_matrix(hs: HammingSetup) -> np.ndarray:
    """H[j][i] = Tr(alpha^j alpha_i); its kernel is {c : sum c_i alpha_i = 0}."""
    big, f = hs.big, hs.field
    emb = make_embedding(f, big)
    q = f.q
    H = np.zeros((hs.m, hs.n), dtype=np.int64)
    for j in range(hs.m):
        for i in range(hs.n):
            y = big.mul(big.exp_of(j), int(hs.points[i]))
            acc = 0
            for _ in range(hs.m):
                acc = big.add(acc, y)
                y = big.pow(y, q)
            H[j, i] = emb.inverse(acc)
    return H


def hamming(field: Field, m: int, a: Sequence[int] | None = None, big_poly=None) -> LinearCode:
    hs = hamming_setup(field, m, a, big_poly)
    H = _trace_check_matrix(hs)
    return from_generator(field, nullspace(field, H, hs.n), n=hs.n)


def simplex(field: Field, m: int, a: Sequence[int] | None = None, big_poly=None) -> LinearCode:
    hs = hamming_setup(field, m, a, big_poly)
    return from_generator(field, _trace_check_matrix(hs), n=hs.n)


def hamming_constacyclic(field: Field, m: int, big_poly=None) -> ConstacyclicCode:
    """The lambda-constacyclic code with generator M_alpha, lambda = alpha^n."""
    q = field.q
    n = (q**m - 1) // (q - 1)
    big = extension_field(field, m, big_poly)
    emb = make_embedding(field, big)
    lam = emb.inverse(big.exp_of(n))
    ctx = root_context(field, n, lam, splitting_poly=big.poly, beta=big.exp_of(1))
    return from_zeros(field, n, lam, [1], ctx=ctx)


def hamming_mds_a(field: Field, big_poly=None) -> np.ndarray:
    """The scaling vector a for which the standard extension of Ham(q, 2, a) is MDS (q = 2^s, s >= 2)."""
    if field.p != 2 or field.s < 2:
        raise NotCharTwo("needs q = 2^s with s >= 2")
    q = field.q
    big = extension_field(field, 2, big_poly)
    emb = make_embedding(field, big)
    lam = big.exp_of(q + 1)
    e = 2 ** (field.s - 1) - 1
    return np.array([emb.inverse(big.pow(lam, i * e)) for i in range(q + 1)], dtype=np.int64)


def s_set(field: Field, m: int, a: Sequence[int], big_poly=None) -> set[int]:
    """Distinct ratio values (r3 - 1)/(r2 - 1), r_k = (a_{i_k}/a_{i_1}) alpha^(i_k - i_1), over triples."""
    hs = hamming_setup(field, m, a, big_poly)
    big = hs.big
    pts = [int(x) for x in hs.points]
    out: set[int] = set()
    one = 1
    for i1 in range(hs.n):
        inv1 = big.inv(pts[i1])
        ratios = [big.mul(pts[i], inv1) for i in range(hs.n)]
        dens = [big.sub(r, one) for r in ratios]
        for i2 in range(i1 + 1, hs.n):
            den_inv = big.inv(dens[i2])
            for i3 in range(i2 + 1, hs.n):
                out.add(big.mul(dens[i3], den_inv))
    return out


def s_set_size(field: Field, m: int, a: Sequence[int], big_poly=None) -> int:
    """|S(q, m, a) intersected with GF(q)*|."""
    big = extension_field(field, m, big_poly)
    emb = make_embedding(field, big)
    return sum(1 for v in s_set(field, m, a, big_poly) if v != 0 and emb.contains(v))


# constacyclic two-weight codes


def two_weight_parameters(q: int, l: int, s: int, h: int) -> tuple[int, int, int, int]:
    """(m, n, w1, w2) for the constacyclic two-weight family; raises on invalid input."""
    m = 2 * l * s
    if q <= 2:
        raise DivisibilityViolated("needs q > 2")
    if m < 4:
        raise DivisibilityViolated("needs m = 2ls >= 4")
    if (q**s + 1) % h or not 2 <= h < q ** (l * s) + 1:
        raise DivisibilityViolated(f"h={h} must divide q^s+1={q**s + 1} with 2 <= h < q^(ls)+1")
    n = (q**m - 1) // (h * (q - 1))
    half = q ** (m // 2)
    w1 = (q**m + (-1) ** l * (h - 1) * half) // (q * h)
    w2 = (q**m + (-1) ** (l - 1) * half) // (q * h)
    return m, n, w1, w2


def two_weight_constacyclic(
    field: Field,
    l: int,
    s: int,
    h: int,
    splitting_poly: Sequence[int] | None = None,
    beta_multiplier: int = 1,
) -> ConstacyclicCode:
    """lambda-constacyclic code with check polynomial M_beta, beta = alpha^(v h), lambda = beta^n."""
    q = field.q
    m, n, _, _ = two_weight_parameters(q, l, s, h)
    big = extension_field(field, m, splitting_poly)
    emb = make_embedding(field, big)
    beta = big.exp_of(beta_multiplier * h)
    lam = emb.inverse(big.pow(beta, n))
    ctx = root_context(field, n, lam, splitting_poly=big.poly, beta=beta)
    return from_check(field, n, lam, [1], ctx=ctx)


def theta_condition(code: ConstacyclicCode) -> bool:
    """Whether theta - 1 lies in <theta> for theta = beta^-1."""
    ctx = code.ctx
    big = ctx.big
    theta = big.inv(ctx.beta)
    t = big.sub(theta, 1)
    if t == 0:
        return False
    order = ctx.rn
    return big.pow(t, order) == 1


def constacyclic_ovoid(field: Field, splitting_poly: Sequence[int] | None = None) -> ConstacyclicCode:
    return two_weight_constacyclic(field, 2, 1, field.q + 1, splitting_poly)


# ovoids


def _has_root(field: Field, coeffs: Sequence[int]) -> bool:
    p = Poly(field, coeffs)
    return any(p(x) == 0 for x in range(field.q))


def default_quadric_a(field: Field) -> int:
    for a in range(field.q):
        if not _has_root(field, [a, 1, 1]):
            return a
    raise ReduciblePolynomial("no irreducible x^2 + x + a")  # pragma: no cover


def elliptic_quadric(field: Field, a: int | None = None) -> PointSet:
    """(0,0,1,0) followed by (x, y, x^2 + xy + a y^2, 1), x-major."""
    if a is None:
        a = default_quadric_a(field)
    elif _has_root(field, [a, 1, 1]):
        raise ReduciblePolynomial(f"x^2 + x + {a} has a root in GF({field.q})")
    f = field
    pts = [[0, 0, 1, 0]]
    for x in range(f.q):
        for y in range(f.q):
            z = f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(a, f.mul(y, y)))
            pts.append([x, y, z, 1])
    return PointSet(field, np.array(pts, dtype=np.int64))


def tits_ovoid(field: Field) -> PointSet:
    """(0,0,1,0) followed by (x, y, x^sigma + xy + y^(sigma+2), 1), q = 2^(2e+1), sigma = 2^(e+1)."""
    if field.p != 2 or field.s < 3 or field.s % 2 == 0:
        raise BadCharacteristic("the Tits ovoid needs q = 2^(2e+1) with e >= 1")
    e = (field.s - 1) // 2
    sigma = 2 ** (e + 1)
    f = field
    pts = [[0, 0, 1, 0]]
    for x in range(f.q):
        for y in range(f.q):
            z = f.add(f.add(f.pow(x, sigma), f.mul(x, y)), f.pow(y, sigma + 2))
            pts.append([x, y, z, 1])
    return PointSet(field, np.array(pts, dtype=np.int64))


def ovoid_code(points: PointSet, check: bool = True) -> LinearCode:
    code = points.code()
    if check:
        q = points.field.q
        assert len(points) == q * q + 1, "an ovoid has q^2 + 1 points"
        assert dual_distance_upto(code, 3) is None, "three points of the set are collinear"
    return code


def ovoid_extension_u(points: PointSet, u1: int, u2: int) -> np.ndarray:
    """All-one vector with u1 at the point (0,0,1,0) and u2 at (0,0,0,1)."""
    f = points.field
    if u1 in (0, f.neg(1)):
        raise ValueError("u1 must avoid 0 and -1")
    if u2 == 1:
        raise ValueError("u2 must differ from 1")
    i = points.index_of([0, 0, 1, 0])
    j = points.index_of([0, 0, 0, 1])
    if i is None or j is None:
        raise MissingAnchorPoints("the point set must contain (0,0,1,0) and (0,0,0,1)")
    u = np.ones(len(points), dtype=np.int64)
    u[i] = u1
    u[j] = u2
    return u


def cyclic_ovoid(field: Field, u: int, splitting_poly: Sequence[int] | None = None) -> tuple[ConstacyclicCode, np.ndarray]:
    """Cyclic ovoid code (check polynomial M_beta, beta of order q^2+1) and u = (1, u, ..., u^(n-1))."""
    if field.p != 2 or field.s < 2:
        raise BadCharacteristic("the cyclic ovoid code needs q = 2^s with s >= 2")
    if u in (0, 1):
        raise ValueError("u must avoid 0 and 1")
    q = field.q
    n = q * q + 1
    ctx = root_context(field, n, 1, splitting_poly)
    code = from_check(field, n, 1, [1], ctx=ctx)
    assert code.linear.in_dual(np.ones(n, dtype=np.int64)), "standard extension should be trivial"
    vec = np.array([field.pow(u, i) for i in range(n)], dtype=np.int64)
    return code, vec


# Denniston arcs


@dataclass(frozen=True, eq=False)
class Denniston:
    points: PointSet
    code: LinearCode
    subgroup: tuple[int, ...]
    beta: int
    u: np.ndarray | None

    @property
    def h(self) -> int:
        return len(self.subgroup)


def default_denniston_beta(field: Field) -> int:
    for b in range(1, field.q):
        if not _has_root(field, [1, b, 1]):
            return b
    raise ReducibleBeta("no irreducible X^2 + bX + 1")  # pragma: no cover


def _check_subgroup(field: Field, A: Sequence[int]) -> tuple[int, ...]:
    s = set(int(a) for a in A)
    if 0 not in s or len(s) < 2 or len(s) & (len(s) - 1):
        raise NotAdditiveSubgroup("need 0 in A and |A| a power of two >= 2")
    for a in s:
        for b in s:
            if field.add(a, b) not in s:
                raise NotAdditiveSubgroup(f"{a} + {b} leaves A")
    return tuple(sorted(s))


def subfield_elements(field: Field, i: int) -> tuple[int, ...]:
    """Elements of the subfield GF(p^i) of ``field``."""
    if field.s % i:
        raise ValueError(f"GF({field.p}^{i}) is not a subfield")
    return tuple(x for x in range(field.q) if field.pow(x, field.p**i) == x)


def denniston(field: Field, A: Sequence[int], beta: int | None = None, check: bool = True) -> Denniston:
    if field.p != 2 or field.s < 2:
        raise BadCharacteristic("Denniston arcs need q = 2^m with m >= 2")
    f = field
    q = f.q
    if beta is None:
        beta = default_denniston_beta(f)
    elif beta == 0 or _has_root(f, [1, beta, 1]):
        raise ReducibleBeta(f"X^2 + {beta}X + 1 is reducible")
    A_sorted = _check_subgroup(f, A)
    half = q // 2

    def fx(x: int) -> int:
        return f.add(f.add(x, f.pow(f.mul(beta, x), half)), 1)

    pts = [[1, 0, 0]]
    lams = [x for x in A_sorted if x]
    for lam in lams:
        c = f.pow(f.inv(lam), half)
        pts.append([c, 1, 0])
        for x in range(q):
            pts.append([f.mul(c, fx(x)), x, 1])
    ps = PointSet(f, np.array(pts, dtype=np.int64))
    h = len(A_sorted)
    if check:
        counts = set(int(c) for c in line_intersections(ps))
        assert counts <= {0, h}, f"not a maximal arc: line intersections {sorted(counts)}"
    code = ps.code()
    u = None
    if h >= 4:
        blocks = [np.zeros(1, dtype=np.int64)]
        for idx, lam in enumerate(lams):
            b = np.ones(q + 1, dtype=np.int64)
            b[0] = 0 if idx == 0 else f.pow(lam, half)
            blocks.append(b)
        u = np.concatenate(blocks)
    return Denniston(ps, code, A_sorted, beta, u)


def additive_subgroups(field: Field, order: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """GF(2)-subspaces of GF(2^m) with ``order`` elements, in order of first discovery."""
    if field.p != 2:
        raise BadCharacteristic("additive subgroups are enumerated over GF(2)")
    i = order.bit_length() - 1
    if order != 1 << i or i > field.s:
        raise ValueError("order must be 2^i with i <= m")
    found: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for basis in itertools.combinations(range(1, field.q), i):
        span = {0}
        for b in basis:
            span |= {x ^ b for x in span}
        if len(span) != order:
            continue
        key = tuple(sorted(span))
        if key in seen:
            continue
        seen.add(key)
        if i >= 2:
            total = 0
            for a in key:
                total ^= a
            assert total == 0, "elements of an additive subgroup of order >= 4 sum to zero"
        found.append(key)
        if limit is not None and len(found) >= limit:
            break
    return found


# BCH-type cyclic families


def single_root(field: Field, m: int, mult: int = 1) -> ConstacyclicCode:
    """Cyclic code of length mult (q^m-1)/(q-1) with generator M_alpha."""
    q = field.q
    if q <= 2 or m < 2 or (q - 1) % mult or gcd(m * mult, q - 1) <= 1:
        raise SpecViolated("needs q > 2, m >= 2, mult | q-1 and gcd(m mult, q-1) > 1")
    n = mult * (q**m - 1) // (q - 1)
    return from_zeros(field, n, 1, [1])


def double_root(field: Field, m: int, n: int) -> ConstacyclicCode:
    """Cyclic code with generator M_alpha M_{alpha^(q^(m/2)+1)}."""
    q = field.q
    if m < 2 or m % 2 or (q**m - 1) % n or n <= q ** (m // 2) + 1:
        raise SpecViolated("needs m even, n | q^m-1 and n > q^(m/2)+1")
    return from_zeros(field, n, 1, [1, q ** (m // 2) + 1])


def bch(field: Field, n: int, delta: int) -> ConstacyclicCode:
    """Narrow-sense BCH code: generator lcm(M_alpha, ..., M_{alpha^(delta-1)})."""
    if n <= 2 or gcd(n, field.q) != 1 or not 2 <= delta < n:
        raise SpecViolated("needs n > 2, gcd(n, q) = 1 and 2 <= delta < n")
    return from_zeros(field, n, 1, list(range(1, delta)))


def ternary_12(field: Field, n: int) -> ConstacyclicCode:
    """Ternary cyclic code with generator lcm(M_alpha, M_alpha^2)."""
    if field.q != 3 or n < 4 or n % 3 == 0:
        raise SpecViolated("needs q = 3, n >= 4 and gcd(3, n) = 1")
    return from_zeros(field, n, 1, [1, 2])


SECTION6_KINDS = ("single_root", "double_root", "bch", "ternary_12")


def section6_family(field: Field, kind: str, **params) -> ConstacyclicCode:
    builders = {"single_root": single_root, "double_root": double_root, "bch": bch, "ternary_12": ternary_12}
    if kind not in builders:
        raise SpecViolated(f"unknown family {kind!r}; choose from {SECTION6_KINDS}")
    return builders[kind](field, **params)
