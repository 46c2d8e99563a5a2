"""Bounds on linear codes, optimality verdicts and the closed-form weight
distribution of extended projective two-weight codes."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import ceil, comb, isqrt
from typing import Literal

from .code_core import LinearCode, dual, exact_min_distance
from .errors import NonIntegralCount, PreconditionViolated

Tri = Literal["yes", "no", "inconclusive"]
SingletonClass = Literal["MDS", "AMDS", "NMDS", "other"]


def sphere_packing_holds(n: int, k: int, d: int, q: int) -> bool:
    """Whether an [n, k, d] code is allowed by the sphere packing bound."""
    t = (d - 1) // 2
    return sum(comb(n, i) * (q - 1) ** i for i in range(t + 1)) <= q ** (n - k)


def griesmer_length(k: int, d: int, q: int) -> int:
    return sum(ceil(Fraction(d, q**i)) for i in range(k))


def _mds_length_excluded(n: int, k: int, q: int) -> bool:
    """[n, k] MDS with q odd and 2 <= k < (sqrt(q) + 13)/4 forces n <= q + 1 (also applied to the dual)."""
    if q % 2 == 0 or n <= q + 1:
        return False
    for kk in (k, n - k):
        # 4k < sqrt(q) + 13  <=>  4k - 13 < sqrt(q)
        lhs = 4 * kk - 13
        if kk >= 2 and (lhs < 0 or lhs * lhs < q):
            return True
    return False


def exclusion(n: int, k: int, d: int, q: int) -> str | None:
    """Name of a bound ruling out every [n, k, >= d] code over GF(q), or None."""
    if k < 1 or d < 1:
        return None
    if k > n or d > n - k + 1:
        return "singleton"
    if n < griesmer_length(k, d, q):
        return "griesmer"
    if not sphere_packing_holds(n, k, d, q):
        return "sphere_packing"
    # Puncturing j < d coordinates keeps the dimension.
    for j in range(1, d):
        if not sphere_packing_holds(n - j, k, d - j, q):
            return "puncture_packing"
    if d == n - k + 1 and _mds_length_excluded(n, k, q):
        return "mds_length"
    # An [n, n-4, >= 4] code yields an [n, n-4, 4] AMDS code.
    if q > 2 and k == n - 4 and d >= 4 and n > q * q + 1:
        return "amds_length"
    return None


def mds_exists(n: int, k: int, q: int) -> bool:
    """Generalised (doubly extended) Reed-Solomon codes realise every [n, k] MDS with n <= q + 1."""
    return 1 <= k <= n <= q + 1


def singleton_class(n: int, k: int, d: int, d_dual: int) -> SingletonClass:
    if d == n - k + 1:
        return "MDS"
    if d == n - k and d_dual == k:
        return "NMDS"
    if d == n - k:
        return "AMDS"
    return "other"


@dataclass(frozen=True)
class CodeVerdict:
    n: int
    k: int
    d: int
    d_dual: int
    q: int
    singleton_class: SingletonClass
    distance_optimal_by_packing: Tri
    dimension_optimal_by_packing: Tri
    almost_optimal: Tri
    griesmer_met: bool
    certified_by: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = asdict(self)
        out["params"] = [self.n, self.k, self.d]
        return out


def _tri(n: int, k: int, d: int, q: int, key: str, cert: dict[str, str]) -> Tri:
    why = exclusion(n, k, d, q)
    if why is not None:
        cert[key] = why
        return "yes"
    if d == n - k + 1 and mds_exists(n, k, q):
        cert[key] = "grs_exists"
        return "no"
    return "inconclusive"


def verdict_from_params(n: int, k: int, d: int, d_dual: int, q: int) -> CodeVerdict:
    cert: dict[str, str] = {}
    dist = _tri(n, k, d + 1, q, "distance", cert)
    dim = _tri(n, k + 1, d, q, "dimension", cert)
    almost = "yes" if dist == "yes" else _tri(n, k, d + 2, q, "almost", cert)
    return CodeVerdict(
        n, k, d, d_dual, q,
        singleton_class(n, k, d, d_dual),
        dist, dim, almost,
        n == griesmer_length(k, d, q) if k >= 1 else False,
        cert,
    )


def verdict(code: LinearCode, d: int | None = None, d_dual: int | None = None) -> CodeVerdict:
    q = code.field.q
    if d is None:
        d = exact_min_distance(code)
    if d_dual is None:
        d_dual = exact_min_distance(dual(code))
    return verdict_from_params(code.n, code.k, d, d_dual, q)


def extended_two_weight_distribution(q: int, n: int, m: int, w1: int, w2: int, a2perp: int) -> tuple[int, int, int, int]:
    """Counts of weights w1, w1+1, w2, w2+1 in an extension of a projective [n, m] two-weight code.

    ``a2perp`` is the number of weight-2 words in the dual of the extension.
    """
    if a2perp not in (0, q - 1):
        raise PreconditionViolated("a2perp must be 0 or q - 1")
    if not w1 < w2 or m < 3:
        raise PreconditionViolated("needs w1 < w2 and m >= 3")
    D = w2 - w1
    a, b = q ** (m - 1), q ** (m - 2)
    vals = (
        Fraction((a - 1) * w2 - b * (q - 1) * n + b * a2perp, D),
        Fraction(a * (q - 1) * w2 - b * (q - 1) ** 2 * n - b * a2perp, D),
        Fraction((a - 1) * w1 - b * (q - 1) * n + b * a2perp, -D),
        Fraction(a * (q - 1) * w1 - b * (q - 1) ** 2 * n - b * a2perp, -D),
    )
    if any(v.denominator != 1 or v < 0 for v in vals):
        raise NonIntegralCount(f"closed form gave {vals}; not a projective two-weight configuration")
    return tuple(int(v) for v in vals)  # type: ignore[return-value]


def optimality_report(code: LinearCode, label: str = "", extensions: dict[str, LinearCode] | None = None) -> dict:
    """Verdicts for a code, its dual and any named extensions (each with its dual)."""
    def entry(c: LinearCode) -> dict:
        d = exact_min_distance(c)
        dd = exact_min_distance(dual(c))
        v = verdict(c, d, dd).to_json()
        dv = verdict_from_params(c.n, c.n - c.k, dd, d, c.field.q).to_json() if c.k < c.n else None
        return {"code": v, "dual": dv}

    report = {"label": label, "base": entry(code)}
    for name, ext in (extensions or {}).items():
        report[name] = entry(ext)
    return report


def integer_sqrt_floor(x: int) -> int:
    return isqrt(x)
