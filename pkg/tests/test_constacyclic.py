import numpy as np
import pytest

from extcodes.code_core import dual, exact_min_distance, weight_distribution
from extcodes.constacyclic import (
    bch_lower_bound,
    dual_constacyclic,
    from_check,
    from_zeros,
    make_constacyclic,
    trace_codeword,
)
from extcodes.errors import FieldMismatch, NotADivisor
from extcodes.gf import make_field
from extcodes.polyring import Poly, factor_xn_minus_lambda

F4 = make_field(2, 2)


@pytest.mark.parametrize("n, lam", [(7, 2), (7, 1), (5, 3), (9, 1)])
def test_every_factor_gives_a_shift_closed_code_with_matching_dual(n, lam):
    f = F4 if n != 9 else make_field(2, 3)
    for g, _ in factor_xn_minus_lambda(f, n, lam):
        code = make_constacyclic(f, n, lam, g)
        for row in code.linear.gen:
            assert code.linear.contains(code.shift(row))
        assert dual_constacyclic(code).linear == dual(code.linear)
        assert bch_lower_bound(code) <= exact_min_distance(code.linear) if code.k else True


def test_cubic_factor_code_is_7_4_3():
    cubics = [g for g, _ in factor_xn_minus_lambda(F4, 7, 2) if g.degree == 3]
    for g in cubics:
        c = make_constacyclic(F4, 7, 2, g)
        assert (c.n, c.k, exact_min_distance(c.linear)) == (7, 4, 3)
        d = dual_constacyclic(c)
        assert (d.k, exact_min_distance(d.linear)) == (3, 4)
        assert bch_lower_bound(d) == 4


def test_cyclic_ovoid_code_over_gf4():
    c = from_check(F4, 17, 1, [1])
    assert c.k == 4
    assert weight_distribution(c.linear).support() == {0: 1, 12: 204, 16: 51}


def test_trace_representation_spans_the_code():
    c = from_check(F4, 17, 1, [1])
    big = c.ctx.big
    seen = set()
    for a in range(big.q):
        seen.add(tuple(trace_codeword(c.ctx, [(1, a)])))
    assert len(seen) == 4**4
    assert all(c.linear.contains(np.array(v)) for v in list(seen)[:40])


def test_trace_coefficient_must_lie_in_subfield():
    # beta^0 has a coset of size 1, so its coefficient must lie in GF(4).
    c = from_check(F4, 17, 1, [0])
    big = c.ctx.big
    bad = next(a for a in range(big.q) if big.pow(a, 4) != a)
    with pytest.raises(FieldMismatch):
        trace_codeword(c.ctx, [(0, bad)])


def test_generator_must_divide():
    with pytest.raises(NotADivisor):
        make_constacyclic(F4, 7, 1, Poly(F4, [1, 1, 1]))
    with pytest.raises(ValueError):
        make_constacyclic(F4, 7, 1, Poly(F4, [1, 2]))


def test_zeros_roundtrip():
    f3 = make_field(3)
    c = from_zeros(f3, 13, 1, [1, 2])
    assert (c.n, c.k) == (13, 7)
    zs = set(c.zeros())
    assert {1, 2} <= zs
    assert bch_lower_bound(c) >= 3
