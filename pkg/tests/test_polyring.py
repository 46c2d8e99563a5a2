import pytest
from hypothesis import given
from hypothesis import strategies as st

from extcodes.errors import DivisionByZero, NotCoprime
from extcodes.gf import make_field
from extcodes.polyring import (
    Poly,
    cyclotomic_cosets,
    factor_xn_minus_lambda,
    minimal_poly,
    multiplicative_order,
    poly_arith,
    poly_gcd,
    poly_lcm,
    root_context,
)

F4 = make_field(2, 2)
F3 = make_field(3)


def polys(field, max_deg=6):
    return st.lists(st.integers(0, field.q - 1), max_size=max_deg + 1).map(lambda c: Poly(field, c))


@given(polys(F4), polys(F4))
def test_division_identity(a, b):
    if b.is_zero():
        with pytest.raises(DivisionByZero):
            divmod(a, b)
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@given(polys(F3, 5), polys(F3, 5))
def test_gcd_divides_both_and_lcm_is_multiple(a, b):
    if a.is_zero() or b.is_zero():
        return
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()
    l = poly_lcm([a, b])
    assert (l % a.monic()).is_zero() and (l % b.monic()).is_zero()
    assert l.degree + g.degree == a.degree + b.degree


@given(polys(F4), st.integers(0, 3), st.integers(0, 3))
def test_evaluation_is_ring_map(a, x, c):
    b = Poly(F4, [c, 1])
    assert (a * b)(x) == F4.mul(a(x), b(x))
    assert (a + b)(x) == F4.add(a(x), b(x))


def test_poly_arith_dispatch():
    a = Poly(F3, [1, 1])
    assert poly_arith(a, a, "mul") == Poly(F3, [1, 2, 1])
    assert poly_arith(a, 2, "eval") == 0
    with pytest.raises(ValueError):
        poly_arith(a, a, "pow")


def test_cyclotomic_cosets():
    assert cyclotomic_cosets(2, 7).coset_of(1) == (1, 2, 4)
    assert cyclotomic_cosets(2, 15).leaders == (0, 1, 3, 5, 7)
    # r = 3 over GF(4): x^7 - lambda with lambda of order 3 uses exponents 1 mod 3.
    t = cyclotomic_cosets(4, 21, 3)
    assert all(i % 3 == 1 for i in t.gamma1)
    with pytest.raises(NotCoprime):
        cyclotomic_cosets(3, 12)
    assert multiplicative_order(3, 41) == 8


@pytest.mark.parametrize("n, lam", [(7, 1), (7, 2), (5, 3), (9, 1), (17, 1)])
def test_factor_product_is_xn_minus_lambda(n, lam):
    f = F4 if n != 9 else make_field(2, 3)
    if lam >= f.q:
        pytest.skip("lambda outside field")
    factors = factor_xn_minus_lambda(f, n, lam)
    prod = Poly(f, [1])
    for g, _ in factors:
        prod = prod * g
        assert g.lead() == 1
    assert prod == Poly.x_power(f, n, f.neg(lam))


def test_degrees_of_known_factorizations():
    assert sorted(g.degree for g, _ in factor_xn_minus_lambda(F4, 7, 1)) == [1, 3, 3]
    assert sorted(g.degree for g, _ in factor_xn_minus_lambda(F4, 17, 1)) == [1, 4, 4, 4, 4]
    # x^7 - lambda with lambda = 2 in GF(4): cubic factors x^3+2x^2+1 and x^3+3x+1
    cubics = {g.coeffs for g, _ in factor_xn_minus_lambda(F4, 7, 2) if g.degree == 3}
    assert cubics == {(1, 0, 2, 1), (1, 3, 0, 1)}


def test_minimal_poly_has_root():
    big = make_field(2, 4)
    small = make_field(2)
    for i in range(15):
        m = minimal_poly(big(big.exp_of(i)), small)
        assert Poly(big, m.coeffs)(big.exp_of(i)) == 0


def test_root_context_beta_properties():
    ctx = root_context(F4, 7, 2)
    assert ctx.r == 3 and ctx.rn == 21 and ctx.m == 3
    assert ctx.big.pow(ctx.beta, 7) == ctx.emb(2)
    with pytest.raises(ValueError):
        root_context(F4, 7, 2, beta=1)


def test_reciprocal_and_repr():
    # x + 2 reversed is 2x + 1, whose monic form is x + 2 again
    assert Poly(F3, [2, 1]).reciprocal() == Poly(F3, [2, 1])
    assert Poly(F3, [1, 1, 2]).reciprocal() == Poly(F3, [2, 1, 1])
    assert repr(Poly(F3, [])) == "Poly(0)"
    assert repr(Poly(F3, [1, 0, 2])) == "Poly(2*x^2 + 1)"
