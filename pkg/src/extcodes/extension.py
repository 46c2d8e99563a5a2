"""Extending a linear code by one parity coordinate c_{n+1} = sum u_i c_i,
and the surrounding toolkit: classification, the dual built directly,
augmented codes, de-extension and searching for good u."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .code_core import (
    DEFAULT_BUDGET,
    LinearCode,
    _krawtchouk_column,
    all_messages,
    dual,
    dual_distance_upto,
    from_generator,
    iter_codewords,
    permute,
    puncture,
)
from .errors import LengthMismatch, MinDistanceOne, PreconditionViolated

DEFAULT_SEED = 0xC0DEC0DE


def _vec(code: LinearCode, u) -> np.ndarray:
    u = np.asarray([int(x) for x in u], dtype=np.int64)
    if u.shape != (code.n,):
        raise LengthMismatch(f"u has length {u.size}, code has length {code.n}")
    if u.size and (u.min() < 0 or u.max() >= code.field.q):
        raise ValueError("u has an entry outside the field")
    return u


def minus_one(code: LinearCode) -> np.ndarray:
    return np.full(code.n, code.field.neg(1), dtype=np.int64)


def extend(code: LinearCode, u) -> LinearCode:
    u = _vec(code, u)
    last = code.syndrome(u)
    g = np.hstack([code.gen, last.reshape(-1, 1)])
    return from_generator(code.field, g, n=code.n + 1)


def standard_extend(code: LinearCode) -> LinearCode:
    return extend(code, minus_one(code))


@dataclass(frozen=True)
class ExtensionSpec:
    u: tuple[int, ...]
    trivial: bool
    standard: bool
    complete: bool

    def to_json(self) -> dict:
        return {"u": list(self.u), "trivial": self.trivial, "standard": self.standard, "complete": self.complete}


def classify(code: LinearCode, u) -> ExtensionSpec:
    u = _vec(code, u)
    trivial = code.in_dual(u)
    ext_dual = dual(extend(code, u))
    e_last = np.zeros(code.n + 1, dtype=np.int64)
    e_last[-1] = 1
    # Triviality, u in the dual, and e_{n+1} in the extension's dual coincide.
    assert trivial == ext_dual.contains(e_last)
    standard = bool(u[0] != 0 and np.all(u == u[0]))
    return ExtensionSpec(tuple(int(x) for x in u), bool(trivial), standard, bool(np.all(u != 0)))


def dual_of_extended(code: LinearCode, u) -> LinearCode:
    """{(c - a u, a) : c in the dual, a in GF(q)} from a dual basis and (-u, 1)."""
    f = code.field
    u = _vec(code, u)
    d = dual(code)
    rows = [np.append(r, 0) for r in d.gen]
    rows.append(np.append(f.vneg(u), 1))
    return from_generator(f, np.array(rows, dtype=np.int64), n=code.n + 1)


def augmented(code: LinearCode, u) -> LinearCode:
    u = _vec(code, u)
    return from_generator(code.field, np.vstack([code.gen, u[None, :]]), n=code.n)


def a2perp(code: LinearCode, u) -> int:
    """Number of weight-2 words in the dual of extend(code, u); either 0 or q - 1.

    Weight-2 dual words of the extension are (a e_j - a u, a)-type vectors, so
    the count is (q - 1) times the number of pairs (a, j) with u + a e_j in the
    dual of ``code``; that pair is unique when it exists.
    """
    f = code.field
    u = _vec(code, u)
    if dual_distance_upto(code, 2) is not None:
        raise PreconditionViolated("needs dual distance >= 3")
    s = code.syndrome(u)
    if not np.any(s):
        raise PreconditionViolated("u lies in the dual; the extension is trivial")
    target = f.vneg(s)
    hits = []
    for j in range(code.n):
        col = code.gen[:, j]
        piv = int(np.argmax(col != 0))
        a = f.div(int(target[piv]), int(col[piv]))
        if a and np.array_equal(f.vmul(col, a), target):
            hits.append((a, j))
    assert len(hits) <= 1, "two columns proportional to the syndrome contradict dual distance >= 3"
    return f.q - 1 if hits else 0


@dataclass(frozen=True)
class Deextension:
    """``code`` equals permute(extend(inner, u), transposition)."""

    transposition: tuple[int, int] | None
    u: tuple[int, ...]
    inner: LinearCode

    def reassemble(self) -> LinearCode:
        ext = extend(self.inner, self.u)
        if self.transposition is None:
            return ext
        i, j = self.transposition
        perm = list(range(ext.n))
        perm[i], perm[j] = perm[j], perm[i]
        return permute(ext, perm)


def has_weight_one(code: LinearCode) -> bool:
    if code.k == 0:
        return False
    return dual_distance_upto(dual(code), 1) == 1


def deextend(code: LinearCode) -> Deextension:
    """Write a code with d > 1 as an extension of a shorter code.

    Uses the first row v of the dual's echelon basis and its last nonzero
    coordinate i; i is swapped to the end, and scaling v to end in -1 gives u.
    """
    if code.k == 0 or has_weight_one(code):
        raise MinDistanceOne("a code with d = 1 is not an extended code")
    f, n = code.field, code.n
    v = dual(code).gen[0]
    i = int(np.nonzero(v)[0][-1])
    perm = list(range(n))
    perm[i], perm[n - 1] = perm[n - 1], perm[i]
    v = v[perm]
    u = f.vmul(v[:-1], f.neg(f.inv(int(v[-1]))))
    moved = permute(code, perm)
    inner = puncture(moved, n - 1)
    return Deextension(None if i == n - 1 else (i, n - 1), tuple(int(x) for x in u), inner)


def deextend_chain(code: LinearCode) -> list[Deextension]:
    """Peel extensions until reaching a code of minimum distance 1."""
    out = []
    while code.n > 1 and code.k > 0 and not has_weight_one(code):
        step = deextend(code)
        out.append(step)
        code = step.inner
    return out


# searching for u


def extension_distributions(code: LinearCode, us: np.ndarray, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Weight distributions of extend(code, u) for each row u, shape (len(us), n + 2).

    The code is enumerated once; the new coordinate of codeword c is c . u.
    """
    f, n = code.field, code.n
    us = np.asarray(us, dtype=np.int64).reshape(-1, n)
    out = np.zeros((us.shape[0], n + 2), dtype=np.int64)
    for block in iter_codewords(code, budget):
        base = np.count_nonzero(block, axis=1)
        step = max(1, (1 << 22) // max(1, block.shape[0]))
        for s in range(0, us.shape[0], step):
            dots = f.matmul(block, us[s : s + step].T)
            w = base[:, None] + (dots != 0)
            cols = w.shape[1]
            flat = w + (n + 2) * np.arange(cols)[None, :]
            out[s : s + cols] += np.bincount(flat.ravel(), minlength=(n + 2) * cols).reshape(cols, n + 2)
    return out


def _dual_min_distances(dists: np.ndarray, n: int, k: int, q: int) -> np.ndarray:
    """Minimum distance of the dual for each weight distribution row (length n)."""
    kraw = [_krawtchouk_column(n, q, x) for x in range(n + 1)]
    exact = q ** (n + k + 1) >= 1 << 62
    K = np.array(kraw, dtype=object if exact else np.int64)
    D = dists.astype(object) if exact else dists
    trans = D @ K  # q^k * A_j of the dual
    res = np.full(dists.shape[0], n + 1, dtype=np.int64)
    for r in range(dists.shape[0]):
        nz = [j for j in range(1, n + 1) if trans[r, j] != 0]
        if nz:
            res[r] = nz[0]
    return res


def _scores(code: LinearCode, us: np.ndarray, objective: str, budget: int) -> np.ndarray:
    dists = extension_distributions(code, us, budget)
    if objective == "max_d":
        nz = dists[:, 1:] != 0
        return np.where(nz.any(axis=1), nz.argmax(axis=1) + 1, code.n + 2)
    return _dual_min_distances(dists, code.n + 1, code.k, code.field.q)


def _not_in_dual(code: LinearCode, us: np.ndarray) -> np.ndarray:
    if code.k == 0:
        return np.zeros(us.shape[0], dtype=bool)
    return code.field.matmul(us, code.gen.T).any(axis=1)


def search_u(
    code: LinearCode,
    objective: Literal["max_d", "max_dual_d"] = "max_d",
    budget: int = 1 << 16,
    seed: int = DEFAULT_SEED,
    code_budget: int = DEFAULT_BUDGET,
) -> tuple[tuple[int, ...] | None, int | None]:
    """Best u outside the dual, scored by d of the extension or of its dual.

    Exhaustive in lexicographic order when q^n <= budget, otherwise ``budget``
    seeded random draws. Ties go to the lexicographically smallest u.
    """
    if objective not in ("max_d", "max_dual_d"):
        raise ValueError(f"unknown objective {objective!r}")
    if budget <= 0:
        return None, None
    f, n = code.field, code.n
    best_u: tuple[int, ...] | None = None
    best = -1
    batch = 4096
    if f.q**n <= budget:
        chunks = (_lex_block(f.q, n, s, min(f.q**n, s + batch)) for s in range(0, f.q**n, batch))
    else:
        rng = np.random.default_rng(seed)
        chunks = (rng.integers(0, f.q, size=(min(batch, budget - s), n)) for s in range(0, budget, batch))
    for us in chunks:
        us = us[_not_in_dual(code, us)]
        if us.shape[0] == 0:
            continue
        sc = _scores(code, us, objective, code_budget)
        top = int(sc.max())
        cands = [tuple(int(x) for x in row) for row in us[sc == top]]
        cand = min(cands)
        if top > best or (top == best and best_u is not None and cand < best_u):
            best, best_u = top, cand
    return (best_u, best) if best_u is not None else (None, None)


def _lex_block(q: int, n: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    return (idx[:, None] // (q ** np.arange(n - 1, -1, -1, dtype=np.int64))) % q


def random_u_outside_dual(code: LinearCode, count: int, seed: int = DEFAULT_SEED) -> list[np.ndarray]:
    """``count`` seeded draws of u not in the dual of ``code``."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        u = rng.integers(0, code.field.q, size=code.n)
        if not code.in_dual(u):
            out.append(u)
    return out

