"""Finite fields GF(p^s) backed by exp/log/Zech tables.

Elements are plain integers: the polynomial-basis coefficients c_i of an
element are packed as sum(c_i * p**i).  That integer is also the on-disk
format, so a field descriptor plus a list of ints fully pins a vector.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    FieldMismatch,
    NonPrimitivePoly,
    NotASubfield,
    ZeroElement,
)

MAX_ORDER = 1 << 20
# Full q x q addition/multiplication tables are kept below this order.
TABLE_LIMIT = 256


def prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    s = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # f is monic, so reduce from the top down
    for d in range(len(prod) - 1, s - 1, -1):
        c = prod[d]
        if c:
            for i in range(s + 1):
                prod[d - s + i] = (prod[d - s + i] - c * f[i]) % p
    return prod[:s] + [0] * (s - len(prod[:s]))


def _x_power(e: int, f: Sequence[int], p: int) -> list[int]:
    s = len(f) - 1
    result = [1] + [0] * (s - 1)
    base = _polymulmod([0, 1], [1], f, p) if s > 1 else [(-f[0]) % p]
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive_poly(p: int, poly: Sequence[int]) -> bool:
    """Order test: x has multiplicative order p^s - 1 modulo ``poly``."""
    s = len(poly) - 1
    # The constant term is (-1)^s times the norm of x, which must generate GF(p)*.
    norm = ((-1) ** s * poly[0]) % p
    if norm == 0 or any(pow(norm, (p - 1) // r, p) == 1 for r in prime_factors(p - 1)):
        return False
    if s > 1 and any(sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0 for x in range(p)):
        return False
    n1 = p**s - 1
    one = [1] + [0] * (s - 1)
    if _x_power(n1, poly, p) != one:
        return False
    return all(_x_power(n1 // r, poly, p) != one for r in prime_factors(n1))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, s) with q = p**s, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            s = 0
            while q % p == 0:
                q //= p
                s += 1
            return (p, s) if q == 1 and is_prime(p) else None
    return None


class Field:
    """GF(p^s) with a fixed primitive defining polynomial.

    ``exp[i]`` is alpha**i and ``log[x]`` its inverse (``log[0] == -1``).
    Scalar helpers take and return Python ints; the ``v*`` helpers accept
    numpy integer arrays of any shape and broadcast.
    """

    def __init__(self, p: int, s: int, poly: Sequence[int]):
        self.p = p
        self.s = s
        self.q = p**s
        self.poly = tuple(int(c) for c in poly)
        n1 = self.q - 1
        exp = self._power_table()
        if exp is None:
            raise NonPrimitivePoly(f"{list(self.poly)} is not primitive over GF({p})")
        log = [-1] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
        self.exp = np.array(exp + exp, dtype=np.int64)
        self.log = np.array(log, dtype=np.int64)
        # zech[i] = log(1 + alpha^i); adding 1 only touches the lowest digit.
        e = self.exp[:n1]
        low = e % p
        one_plus = e - low + (low + 1) % p
        self._zech = self.log[one_plus]
        self._zech_list = self._zech.tolist()
        self._add_t: np.ndarray | None = None
        self._mul_t: np.ndarray | None = None
        if self.q <= TABLE_LIMIT:
            a = np.arange(self.q, dtype=np.int64)
            A, B = np.meshgrid(a, a, indexing="ij")
            self._add_t = self._vadd_zech(A, B)
            self._mul_t = self._vmul_log(A, B)
        vals = np.arange(self.q, dtype=np.int64)
        weights = p ** np.arange(s, dtype=np.int64)
        self.neg_table = (((-(vals[:, None] // weights % p)) % p) @ weights).astype(np.int64)
        inv = np.zeros(self.q, dtype=np.int64)
        inv[1:] = self.exp[(n1 - self.log[1:]) % n1]
        self.inv_table = inv

    # construction helpers

    def _power_table(self) -> list[int] | None:
        """alpha**i for i < q - 1, or None if the polynomial is not primitive."""
        p, s, n1 = self.p, self.s, self.q - 1
        if not is_primitive_poly(p, self.poly):
            return None
        # Companion matrix of multiplication by x; fill the table by doubling.
        comp = np.zeros((s, s), dtype=np.int64)
        for i in range(1, s):
            comp[i, i - 1] = 1
        comp[:, s - 1] = [(-c) % p for c in self.poly[:s]]
        digits = np.zeros((n1, s), dtype=np.int64)
        digits[0, 0] = 1
        k, step = 1, comp
        while k < n1:
            m = min(k, n1 - k)
            digits[k : k + m] = (digits[:m] @ step.T) % p
            step = (step @ step) % p
            k += m
        return (digits @ (p ** np.arange(s, dtype=np.int64))).tolist()

    def _vadd_zech(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.p == 2:
            return a ^ b
        n1 = self.q - 1
        la, lb = self.log[a], self.log[b]
        z = self._zech[(lb - la) % n1]
        out = np.where(z < 0, 0, self.exp[(la + np.maximum(z, 0)) % n1])
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def _vmul_log(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        prod = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    # identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.p, self.s, self.poly) == (other.p, other.s, other.poly)

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.poly))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s}, poly={list(self.poly)})"

    def descriptor(self) -> dict:
        return {"p": self.p, "s": self.s, "poly": list(self.poly)}

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, self._exp[1 % (self.q - 1)] if self.q > 2 else 1)

    def __call__(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding of {self!r}")
        return FieldElement(self, int(value))

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.q):
            yield FieldElement(self, v)

    # scalar arithmetic on encodings

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        n1 = self.q - 1
        la = self._log[a]
        z = self._zech_list[(self._log[b] - la) % n1]
        return 0 if z < 0 else self._exp[(la + z) % n1]

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, int(self.neg_table[b]))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def exp_of(self, i: int) -> int:
        """alpha**i for any integer i."""
        return self._exp[i % (self.q - 1)]

    def log_of(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("log of zero")
        return self._log[a]

    # vectorised arithmetic

    def vadd(self, a, b) -> np.ndarray:
        if self._add_t is not None:
            return self._add_t[a, b]
        return self._vadd_zech(a, b)

    def vneg(self, a) -> np.ndarray:
        return self.neg_table[a]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.neg_table[b])

    def vmul(self, a, b) -> np.ndarray:
        if self._mul_t is not None:
            return self._mul_t[a, b]
        return self._vmul_log(a, b)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.inv_table[a]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix product over the field; shapes (r, k) @ (k, c)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.s == 1:
            # Prime field: integer matmul stays exact for these sizes.
            return (a @ b) % self.p
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for i in range(a.shape[1]):
            out = self.vadd(out, self.vmul(a[:, i : i + 1], b[i : i + 1, :]))
        return out


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    def _coerce(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("operands live in different fields")
            return other.value
        # bare ints are read as prime-field elements
        return int(other) % self.field.p

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def order(self) -> int:
        return element_order(self)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}@GF({self.field.q})"


def _check_poly(p: int, s: int, poly: Sequence[int]) -> tuple[int, ...]:
    poly = tuple(int(c) for c in poly)
    if len(poly) != s + 1 or poly[-1] != 1 or any(not 0 <= c < p for c in poly):
        raise NonPrimitivePoly(f"{list(poly)} is not a monic degree-{s} polynomial over GF({p})")
    return poly


@lru_cache(maxsize=None)
def _make_field(p: int, s: int, poly: tuple[int, ...] | None) -> Field:
    if poly is not None:
        if not is_primitive_poly(p, poly):
            raise NonPrimitivePoly(f"{list(poly)} is not primitive over GF({p})")
        return Field(p, s, poly)
    # itertools.product walks (c0, ..., c_{s-1}) with c0 most significant,
    # which is exactly the low-degree-first lexicographic order.
    for low in itertools.product(range(p), repeat=s):
        if is_primitive_poly(p, low + (1,)):
            return Field(p, s, low + (1,))
    raise NonPrimitivePoly(f"no primitive polynomial of degree {s} over GF({p})")  # unreachable


def make_field(p: int, s: int = 1, defining_poly: Sequence[int] | None = None) -> Field:
    """Build (or fetch the cached) GF(p^s).

    Without ``defining_poly`` the smallest primitive polynomial is used,
    comparing coefficient tuples low-degree-first.
    """
    if not is_prime(p) or s < 1:
        raise ValueError(f"GF({p}^{s}) is not a valid field order")
    if p**s > MAX_ORDER:
        raise BudgetExceeded(f"field order {p}^{s} exceeds {MAX_ORDER}")
    poly = None if defining_poly is None else _check_poly(p, s, defining_poly)
    return _make_field(p, s, poly)


def field_from_descriptor(desc: dict) -> Field:
    return make_field(desc["p"], desc["s"], desc.get("poly"))


def arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch one of add/sub/mul/div/pow/inv/neg.  ``pow`` takes an int exponent as ``b``."""
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** int(b)  # type: ignore[arg-type]
    table = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in table:
        raise ValueError(f"unknown operation {op!r}")
    return table[op](b)


def element_order(x: FieldElement) -> int:
    if x.value == 0:
        raise ZeroElement("zero has no multiplicative order")
    n1 = x.field.q - 1
    return n1 // gcd(n1, x.field.log_of(x.value))


class Embedding:
    """Injective ring map GF(q) -> GF(q^m).

    The small primitive element goes to gamma**t where
    gamma = alpha_big**((q^m - 1)/(q - 1)) and t >= 1 is the least exponent
    making gamma**t a root of the small field's defining polynomial.  With
    matching polynomials t = 1.
    """

    def __init__(self, small: Field, big: Field):
        if small.p != big.p or big.s % small.s != 0:
            raise NotASubfield(f"{small!r} does not embed in {big!r}")
        self.small = small
        self.big = big
        self.degree = big.s // small.s
        n_small = small.q - 1
        step = (big.q - 1) // n_small
        for t in range(1, n_small + 1):
            if gcd(t, n_small) != 1:
                continue
            root = big.exp_of(step * t)
            acc = 0
            for c in reversed(small.poly):
                acc = big.add(big.mul(acc, root), c)
            if acc == 0:
                self.t = t
                break
        else:  # pragma: no cover - the subfield always contains a root
            raise NotASubfield("no root of the small defining polynomial in the subfield")
        image = np.zeros(small.q, dtype=np.int64)
        for i in range(n_small):
            image[small.exp_of(i)] = big.exp_of(step * self.t * i)
        self.image = image
        self._inverse = {int(v): i for i, v in enumerate(image)}

    def __call__(self, x: "int | FieldElement") -> int:
        if isinstance(x, FieldElement):
            if x.field != self.small:
                raise FieldMismatch("element is not from the embedded field")
            x = x.value
        return int(self.image[x])

    def lift(self, x: FieldElement) -> FieldElement:
        return FieldElement(self.big, self(x))

    def contains(self, y: int) -> bool:
        return int(y) in self._inverse

    def inverse(self, y: "int | FieldElement") -> int:
        if isinstance(y, FieldElement):
            y = y.value
        try:
            return self._inverse[int(y)]
        except KeyError:
            raise NotASubfield(f"{y} is not in the image of GF({self.small.q})") from None


@lru_cache(maxsize=None)
def make_embedding(small: Field, big: Field) -> Embedding:
    return Embedding(small, big)


def extension_field(small: Field, m: int, defining_poly: Sequence[int] | None = None) -> Field:
    """GF(q^m) for q = small.q, default polynomial unless one is pinned."""
    return make_field(small.p, small.s * m, defining_poly)


def trace(x: FieldElement, down_to: Field) -> FieldElement:
    """Tr_{q^m/q}(x) as an element of ``down_to``."""
    big = x.field
    emb = make_embedding(down_to, big)
    acc, y = 0, x.value
    for _ in range(emb.degree):
        acc = big.add(acc, y)
        y = big.pow(y, down_to.q)
    return FieldElement(down_to, emb.inverse(acc))


def trace_value(big: Field, y: int, q: int, degree: int) -> int:
    """Sum of y^(q^j), j < degree, computed inside ``big`` (no embedding lookup)."""
    acc = 0
    for _ in range(degree):
        acc = big.add(acc, y)
        y = big.pow(y, q)
    return acc
