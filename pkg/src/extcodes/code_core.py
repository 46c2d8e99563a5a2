"""Linear codes held as reduced row-echelon generator matrices, with exact
weight enumeration, duals, MacWilliams transform and power-moment checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    EmptyLength,
    InconsistentInput,
    MomentPreconditionViolated,
    RangeError,
    ZeroCode,
)
from .gf import Field, field_from_descriptor

DEFAULT_BUDGET = 1 << 26
# Codeword entries materialised per enumeration block.
BLOCK_ENTRIES = 1 << 22


def as_matrix(field: Field, rows) -> np.ndarray:
    a = np.array([[int(x) for x in r] for r in rows], dtype=np.int64)
    if a.size and (a.min() < 0 or a.max() >= field.q):
        raise ValueError("matrix entry outside the field")
    return a


def rref(field: Field, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form (zero rows dropped) and the pivot columns."""
    a = np.array(mat, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = field.vmul(a[r], field.inv(int(a[r, c])))
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            f = a[others, c][:, None]
            a[others] = field.vsub(a[others], field.vmul(f, a[r][None, :]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(field: Field, mat: np.ndarray, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : mat x^T = 0}."""
    mat = np.asarray(mat, dtype=np.int64)
    if n is None:
        n = mat.shape[1]
    if mat.size == 0:
        return np.eye(n, dtype=np.int64)
    red, piv = rref(field, mat.reshape(-1, n))
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, fc in enumerate(free):
        out[t, fc] = 1
        for i, pc in enumerate(piv):
            out[t, pc] = field.neg(int(red[i, fc]))
    return out


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: Field
    n: int
    gen: np.ndarray

    @property
    def k(self) -> int:
        return int(self.gen.shape[0])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.gen.shape == other.gen.shape
            and bool(np.array_equal(self.gen, other.gen))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.gen.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"

    def syndrome(self, u) -> np.ndarray:
        """gen @ u^T; zero exactly when u lies in the dual."""
        u = np.asarray(u, dtype=np.int64).reshape(-1, 1)
        if self.k == 0:
            return np.zeros(0, dtype=np.int64)
        return self.field.matmul(self.gen, u)[:, 0]

    def in_dual(self, u) -> bool:
        return not np.any(self.syndrome(u))

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64)
        if self.k == 0:
            return not np.any(v)
        red, _ = rref(self.field, np.vstack([self.gen, v[None, :]]))
        return red.shape[0] == self.k

    def to_json(self) -> dict:
        return {"field": self.field.descriptor(), "n": self.n, "k": self.k, "gen": self.gen.tolist()}

    @staticmethod
    def from_json(d: dict) -> "LinearCode":
        field = field_from_descriptor(d["field"])
        return from_generator(field, d["gen"], n=d["n"])


def from_generator(field: Field, rows, n: int | None = None) -> LinearCode:
    rows = list(rows) if not isinstance(rows, np.ndarray) else rows
    if n is None:
        if len(rows) == 0:
            raise EmptyLength("cannot infer the length of a code with no rows")
        n = len(rows[0])
    if n <= 0:
        raise EmptyLength("code length must be positive")
    if len(rows) == 0:
        return LinearCode(field, n, np.zeros((0, n), dtype=np.int64))
    a = as_matrix(field, rows)
    if a.shape[1] != n:
        raise ValueError("rows have inconsistent length")
    red, _ = rref(field, a)
    red.setflags(write=False)
    return LinearCode(field, n, red)


def dual(code: LinearCode) -> LinearCode:
    return from_generator(code.field, nullspace(code.field, code.gen, code.n), n=code.n)


def puncture(code: LinearCode, position: int) -> LinearCode:
    if not 0 <= position < code.n:
        raise RangeError(f"position {position} outside 0..{code.n - 1}")
    if code.n == 1:
        raise EmptyLength("puncturing a length-1 code")
    g = np.delete(code.gen, position, axis=1)
    return from_generator(code.field, g, n=code.n - 1)


def permute(code: LinearCode, perm: Sequence[int]) -> LinearCode:
    """Coordinate permutation: new coordinate j is old coordinate perm[j]."""
    return from_generator(code.field, code.gen[:, list(perm)], n=code.n)


def full_space(field: Field, n: int) -> LinearCode:
    return from_generator(field, np.eye(n, dtype=np.int64), n=n)


def zero_code(field: Field, n: int) -> LinearCode:
    return from_generator(field, [], n=n)


# enumeration


def all_messages(q: int, k: int) -> np.ndarray:
    """Every vector of GF(q)^k as rows, in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int64)


def span_rows(field: Field, rows: np.ndarray) -> np.ndarray:
    """All linear combinations of ``rows`` in message-lexicographic order."""
    k, n = rows.shape
    if k == 0:
        return np.zeros((1, n), dtype=np.int64)
    return field.matmul(all_messages(field.q, k), rows) if field.s == 1 else _span_ext(field, rows)


def _span_ext(field: Field, rows: np.ndarray) -> np.ndarray:
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    scal = np.arange(field.q, dtype=np.int64)
    for r in rows:
        multiples = field.vmul(scal[:, None], r[None, :])
        out = field.vadd(out[:, None, :], multiples[None, :, :]).reshape(-1, rows.shape[1])
    return out


def iter_codewords(code: LinearCode, budget: int = DEFAULT_BUDGET) -> Iterator[np.ndarray]:
    """Yield blocks of codewords covering all q^k messages in lexicographic order.

    The message is split into a high part and a low part; the low-part span is
    tabulated once and every block is a single broadcast addition.
    """
    f, k, n = code.field, code.k, code.n
    total = f.q**k
    if total > budget:
        raise BudgetExceeded(f"q^k = {f.q}^{k} exceeds budget {budget}")
    k_lo = 0
    while k_lo < k and f.q ** (k_lo + 1) * n <= BLOCK_ENTRIES:
        k_lo += 1
    low = span_rows(f, code.gen[k - k_lo :])
    k_hi = k - k_lo
    if k_hi == 0:
        yield low
        return
    per_block = max(1, BLOCK_ENTRIES // (low.shape[0] * n))
    hi_rows = code.gen[:k_hi]
    n_hi = f.q**k_hi
    for start in range(0, n_hi, per_block):
        stop = min(n_hi, start + per_block)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = (idx[:, None] // (f.q ** np.arange(k_hi - 1, -1, -1, dtype=np.int64))) % f.q
        heads = f.matmul(digits, hi_rows) if k_hi else np.zeros((len(idx), n), dtype=np.int64)
        yield f.vadd(heads[:, None, :], low[None, :, :]).reshape(-1, n)


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("counts must have length n + 1")

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i <= self.n else 0

    @property
    def total(self) -> int:
        return sum(self.counts)

    def min_distance(self) -> int | None:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None

    def support(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}

    def enumerator(self) -> str:
        parts = []
        for i, c in self.support().items():
            parts.append(str(c) if i == 0 else f"{c}z^{i}")
        return " + ".join(parts)

    def to_csv(self) -> str:
        lines = ["weight,count"]
        lines += [f"{i},{c}" for i, c in enumerate(self.counts)]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_csv(text: str) -> "WeightDistribution":
        rows = [ln.split(",") for ln in text.strip().splitlines()[1:]]
        counts = [int(c) for _, c in sorted((int(w), c) for w, c in rows)]
        return WeightDistribution(len(counts) - 1, tuple(counts))

    @staticmethod
    def from_dict(n: int, d: dict[int, int]) -> "WeightDistribution":
        return WeightDistribution(n, tuple(d.get(i, 0) for i in range(n + 1)))


def weight_distribution(code: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in iter_codewords(code, budget):
        w = np.count_nonzero(block, axis=1)
        counts += np.bincount(w, minlength=code.n + 1)
    return WeightDistribution(code.n, tuple(int(c) for c in counts))


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    if code.k == 0:
        raise ZeroCode("minimum distance of the zero code")
    best = code.n
    for block in iter_codewords(code, budget):
        w = np.count_nonzero(block, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def krawtchouk(n: int, q: int, j: int, x: int) -> int:
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(x, s) * comb(n - x, j - s) for s in range(j + 1))


def _krawtchouk_column(n: int, q: int, x: int) -> list[int]:
    """K_0(x), ..., K_n(x) via the three-term recurrence in j."""
    col = [1]
    if n == 0:
        return col
    col.append((q - 1) * n - q * x)
    for j in range(1, n):
        num = ((n - j) * (q - 1) + j - q * x) * col[j] - (q - 1) * (n - j + 1) * col[j - 1]
        col.append(num // (j + 1))
    return col


def macwilliams(a: WeightDistribution, n: int, k: int, q: int) -> WeightDistribution:
    if a.n != n:
        raise InconsistentInput("distribution length does not match n")
    if a.total != q**k:
        raise InconsistentInput(f"counts sum to {a.total}, expected q^k = {q**k}")
    out = [0] * (n + 1)
    for x, ax in a.support().items():
        col = _krawtchouk_column(n, q, x)
        for j in range(n + 1):
            out[j] += ax * col[j]
    size = q**k
    res = []
    for v in out:
        if v % size:
            raise InconsistentInput("MacWilliams transform is not integral")
        res.append(v // size)
    if any(v < 0 for v in res):
        raise InconsistentInput("MacWilliams transform has a negative count")
    return WeightDistribution(n, tuple(res))


def exact_distribution(code: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Weight distribution, enumerating whichever of the code and its dual is smaller."""
    q, n, k = code.field.q, code.n, code.k
    if k <= n - k:
        return weight_distribution(code, budget)
    d = dual(code)
    return macwilliams(weight_distribution(d, budget), n, n - k, q)


def exact_min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    if code.k == 0:
        raise ZeroCode("minimum distance of the zero code")
    md = exact_distribution(code, budget).min_distance()
    assert md is not None
    return md


def pless_residuals(
    a: WeightDistribution,
    a_dual: WeightDistribution,
    n: int,
    k: int,
    q: int,
    orders: Sequence[int] = (1, 2, 3, 4),
) -> list[Fraction]:
    """LHS - RHS of the power-moment identities sum_i i^(t-1) A_i, t in ``orders``."""
    b1, b2, b3, b4 = a_dual[1], a_dual[2], a_dual[3], a_dual[4]
    out = []
    for t in orders:
        lhs = sum(i ** (t - 1) * c for i, c in enumerate(a.counts))
        out.append(Fraction(lhs) - _pless_rhs(t, n, k, q, b1, b2, b3, b4))
    return out


def _pless_rhs(t: int, n: int, k: int, q: int, b1, b2, b3, b4) -> Fraction:
    qk = lambda e: Fraction(q) ** (k - e)  # noqa: E731
    if t == 1:
        return qk(0)
    if t == 2:
        return qk(1) * ((q - 1) * n - b1)
    if t == 3:
        return qk(2) * ((q - 1) ** 2 * n**2 + (q - 1) * n - (2 * (q - 1) * n - q + 2) * b1 + 2 * b2)
    if t == 4:
        return qk(3) * (
            (q - 1) * n * ((q - 1) ** 2 * n**2 + 3 * (q - 1) * n - q + 2)
            - (3 * (q - 1) ** 2 * n**2 - 3 * (q - 3) * (q - 1) * n + q**2 - 6 * q + 6) * b1
            + 6 * ((q - 1) * n - q + 2) * b2
            - 6 * b3
        )
    if t == 5:
        if b1 or b2 or b3:
            raise MomentPreconditionViolated("fifth moment needs A1' = A2' = A3' = 0")
        poly = (
            q**3 * n**3 - 3 * q**2 * n**3 + 6 * q**2 * n**2 - 4 * q**2 * n + q**2 + 3 * q * n**3
            - 12 * q * n**2 + 15 * q * n - 6 * q - n**3 + 6 * n**2 - 11 * n + 6
        )
        return qk(4) * ((q - 1) * n * poly + 24 * b4)
    raise ValueError(f"moment order {t} not in 1..5")


def solve_pless(
    a: WeightDistribution,
    a_dual: WeightDistribution,
    n: int,
    k: int,
    q: int,
    order: int,
    unknown: tuple[str, int],
) -> Fraction:
    """Value of one unknown entry making the given moment identity hold.

    ``unknown`` is ("A", i) or ("B", i) for A_i or A_i of the dual. The identity
    is affine in every single entry, so two evaluations pin the solution.
    """
    side, idx = unknown

    def residual(val: int) -> Fraction:
        aa = list(a.counts)
        bb = list(a_dual.counts)
        (aa if side == "A" else bb)[idx] = val
        return pless_residuals(
            WeightDistribution(n, tuple(aa)), WeightDistribution(n, tuple(bb)), n, k, q, (order,)
        )[0]

    r0, r1 = residual(0), residual(1)
    slope = r1 - r0
    if slope == 0:
        raise InconsistentInput("the moment identity does not involve that entry")
    return -r0 / slope


def dual_distance_upto(code: LinearCode, w_max: int = 6) -> int | None:
    """Least number of linearly dependent columns of gen (= d of the dual), if <= w_max."""
    f, g, n = code.field, code.gen, code.n
    if code.k == 0:
        return 1
    cols = g.T.copy()
    if np.any(~cols.any(axis=1)):
        return 1
    # Normalise each column so its first nonzero entry is 1.
    first = np.argmax(cols != 0, axis=1)
    lead = cols[np.arange(n), first]
    normed = f.vmul(cols, f.vinv(lead)[:, None])
    keys: dict[bytes, list[int]] = {}
    for j in range(n):
        keys.setdefault(normed[j].tobytes(), []).append(j)
    if w_max >= 2 and any(len(v) > 1 for v in keys.values()):
        return 2
    nonzero = np.arange(1, f.q, dtype=np.int64)
    for w in range(3, min(w_max, n) + 1):
        # Columns i_1 < ... < i_{w-1} < j with c_j proportional to
        # c_{i_1} + a_2 c_{i_2} + ... + a_{w-1} c_{i_{w-1}}.
        coeffs = np.array(list(itertools.product(nonzero, repeat=w - 2)), dtype=np.int64).reshape(-1, w - 2)
        for subset in itertools.combinations(range(n - 1), w - 1):
            base = cols[subset[0]]
            rest = cols[list(subset[1:])]
            combo = f.vadd(base[None, :], _lin_comb(f, coeffs, rest))
            nz = combo.any(axis=1)
            if not nz.any():
                continue
            combo = combo[nz]
            fi = np.argmax(combo != 0, axis=1)
            combo = f.vmul(combo, f.vinv(combo[np.arange(len(combo)), fi])[:, None])
            top = subset[-1]
            for row in combo:
                hit = keys.get(row.tobytes())
                if hit and hit[-1] > top:
                    return w
    return None


def _lin_comb(f: Field, coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
    out = np.zeros((coeffs.shape[0], rows.shape[1]), dtype=np.int64)
    for t in range(rows.shape[0]):
        out = f.vadd(out, f.vmul(coeffs[:, t : t + 1], rows[t][None, :]))
    return out
