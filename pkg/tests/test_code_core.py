from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extcodes.code_core import (
    WeightDistribution,
    dual,
    dual_distance_upto,
    exact_distribution,
    exact_min_distance,
    from_generator,
    full_space,
    iter_codewords,
    krawtchouk,
    macwilliams,
    min_distance,
    permute,
    pless_residuals,
    puncture,
    rref,
    solve_pless,
    weight_distribution,
    zero_code,
)
from extcodes.errors import BudgetExceeded, EmptyLength, InconsistentInput, MomentPreconditionViolated, RangeError, ZeroCode
from extcodes.gf import make_field

from oracle import NaiveField, dual_vectors, min_weight, span
from oracle import weight_distribution as naive_wd

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1)]


@st.composite
def small_codes(draw, max_n=7, max_k=4):
    p, s = draw(st.sampled_from(SMALL))
    f = make_field(p, s)
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, min(max_k, n)))
    rows = [[draw(st.integers(0, f.q - 1)) for _ in range(n)] for _ in range(k)]
    return f, rows, n


@settings(max_examples=40, deadline=None)
@given(small_codes())
def test_weight_distribution_matches_oracle(data):
    f, rows, n = data
    code = from_generator(f, rows, n=n)
    naive = NaiveField(f.p, f.s, f.poly)
    assert list(weight_distribution(code).counts) == naive_wd(naive, rows, n)
    assert f.q**code.k == len(set(span(naive, rows)))


@settings(max_examples=25, deadline=None)
@given(small_codes(max_n=6, max_k=3))
def test_dual_matches_oracle(data):
    f, rows, n = data
    if f.q ** n > 4096:
        return
    code = from_generator(f, rows, n=n)
    naive = NaiveField(f.p, f.s, f.poly)
    dv = dual_vectors(naive, rows, n)
    d = dual(code)
    assert f.q ** d.k == len(dv)
    assert all(d.contains(np.array(v)) for v in dv[:50])
    assert dual_distance_upto(code, 6) == min_weight(dv)


@settings(max_examples=40, deadline=None)
@given(small_codes(max_n=9, max_k=5))
def test_biduality_macwilliams_and_pless(data):
    f, rows, n = data
    code = from_generator(f, rows, n=n)
    assert dual(dual(code)) == code
    if code.k == n:
        return
    a = weight_distribution(code)
    b = weight_distribution(dual(code))
    assert macwilliams(a, n, code.k, f.q) == b
    assert macwilliams(b, n, n - code.k, f.q) == a
    assert all(r == 0 for r in pless_residuals(a, b, n, code.k, f.q, (1, 2, 3, 4)))
    if not (b[1] or b[2] or b[3]):
        assert pless_residuals(a, b, n, code.k, f.q, (5,)) == [0]


def test_canonical_equality_and_rref():
    f = make_field(3)
    c1 = from_generator(f, [[1, 2, 0, 1], [0, 1, 1, 1]])
    # r1 + r2 and 2 r1 + r2
    c2 = from_generator(f, [[1, 0, 1, 2], [2, 2, 1, 0]])
    assert c1 == c2 and hash(c1) == hash(c2)
    red, piv = rref(f, np.array([[2, 1, 0], [1, 2, 0]]))
    assert red.tolist() == [[1, 2, 0]] and piv == [0]
    assert from_generator(f, [[1, 1, 1], [1, 1, 1]]).k == 1


def test_generator_examples():
    f2 = make_field(2)
    rep = from_generator(f2, [[1, 1, 1]])
    assert (rep.n, rep.k, min_distance(rep)) == (3, 1, 3)
    assert dual(full_space(f2, 3)) == zero_code(f2, 3)
    assert weight_distribution(zero_code(f2, 3)).counts == (1, 0, 0, 0)
    with pytest.raises(EmptyLength):
        from_generator(f2, [])
    with pytest.raises(ZeroCode):
        min_distance(zero_code(f2, 3))


def test_puncture_and_permute():
    f = make_field(3)
    c = from_generator(f, [[1, 0, 1, 2], [0, 1, 1, 1]])
    p = puncture(c, 3)
    assert p == from_generator(f, [[1, 0, 1], [0, 1, 1]])
    with pytest.raises(RangeError):
        puncture(c, 4)
    perm = permute(c, [3, 2, 1, 0])
    assert perm.contains(np.array([2, 1, 0, 1]))


def test_budget_guard():
    f = make_field(2)
    code = full_space(f, 20)
    with pytest.raises(BudgetExceeded):
        list(iter_codewords(code, budget=1 << 10))


def test_macwilliams_examples():
    # Zero code of length 3 over GF(2): the dual is everything.
    a = WeightDistribution(3, (1, 0, 0, 0))
    assert macwilliams(a, 3, 0, 2).counts == (1, 3, 3, 1)
    with pytest.raises(InconsistentInput):
        macwilliams(WeightDistribution(3, (1, 1, 0, 0)), 3, 0, 2)
    # Simplex(3,2) is 1 + 8z^3; its dual, the ternary Hamming [4,2,3], is 1 + 8z^3.
    assert macwilliams(WeightDistribution(4, (1, 0, 0, 8, 0)), 4, 2, 3).counts == (1, 0, 0, 8, 0)


def test_krawtchouk_values():
    assert krawtchouk(4, 3, 0, 2) == 1
    assert krawtchouk(4, 3, 1, 0) == 8
    assert krawtchouk(4, 3, 1, 4) == -4


def test_pless_fifth_moment_guard_and_solver():
    f = make_field(3)
    code = from_generator(f, [[1, 0, 1, 1], [0, 1, 1, 2]])
    a = weight_distribution(code)
    b = weight_distribution(dual(code))
    with pytest.raises(MomentPreconditionViolated):
        pless_residuals(a, WeightDistribution(4, (1, 1, 0, 7, 0)), 4, 2, 3, (5,))
    # Recover A_3 of the ternary Hamming code from the second moment.
    assert solve_pless(a, b, 4, 2, 3, 2, ("A", 3)) == Fraction(8)


def test_exact_distribution_uses_smaller_side():
    f = make_field(2)
    rows = np.eye(12, dtype=np.int64)
    rows[:, -1] = 1
    code = from_generator(f, rows[:-1])
    assert exact_min_distance(code) == 2
    assert exact_distribution(code).total == 2**11


def test_dual_distance_upto_cases():
    f = make_field(3)
    assert dual_distance_upto(from_generator(f, [[1, 0, 1], [0, 1, 1]]), 6) == 3
    assert dual_distance_upto(from_generator(f, [[1, 0, 0], [0, 1, 0]]), 6) == 1
    assert dual_distance_upto(from_generator(f, [[1, 2, 0], [0, 0, 1]]), 6) == 2
