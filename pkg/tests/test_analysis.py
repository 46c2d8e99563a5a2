import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extcodes.analysis import (
    exclusion,
    extended_two_weight_distribution,
    griesmer_length,
    optimality_report,
    singleton_class,
    sphere_packing_holds,
    verdict,
    verdict_from_params,
)
from extcodes.code_core import dual, exact_min_distance, from_generator
from extcodes.constructions import conic_chain, two_weight_parameters
from extcodes.errors import NonIntegralCount, PreconditionViolated
from extcodes.gf import make_field


@pytest.mark.parametrize("q, m", [(2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2), (7, 3)])
def test_hamming_parameters_are_perfect(q, m):
    n = (q**m - 1) // (q - 1)
    assert sphere_packing_holds(n, n - m, 3, q)
    assert not sphere_packing_holds(n, n - m + 1, 3, q)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 16])
def test_ovoid_bounds(q):
    # At q = 3 the ternary Golay code [11, 6, 5] meets the bound with equality.
    assert sphere_packing_holds(q * q + 2, q * q - 3, 5, q) == (q == 3)
    assert griesmer_length(4, q * q - q, q) == q * q + 1
    assert griesmer_length(4, q * q - q + 1, q) == q * q + 3
    v = verdict_from_params(q * q + 2, q * q - 2, 3, 0, q)
    assert v.distance_optimal_by_packing == "yes"


def test_griesmer_trivial_and_packing_threshold():
    assert griesmer_length(1, 9, 5) == 9
    # n = 40 single-root family at q = 3
    assert sphere_packing_holds(41, 36, 3, 3)
    assert not sphere_packing_holds(41, 37, 3, 3)
    assert verdict_from_params(41, 36, 3, 0, 3).dimension_optimal_by_packing == "yes"


def test_singleton_classes_of_conic_chain():
    assert singleton_class(6, 3, 4, 4) == "MDS"
    assert singleton_class(8, 3, 5, 3) == "NMDS"
    assert singleton_class(8, 3, 5, 2) == "AMDS"
    assert singleton_class(8, 3, 4, 3) == "other"
    ch = conic_chain(make_field(5))
    v = verdict(ch.c3)
    assert (v.n, v.k, v.d, v.d_dual, v.singleton_class) == (8, 3, 5, 3, "NMDS")
    assert verdict(conic_chain(make_field(2, 2)).c2).singleton_class == "MDS"


def test_mds_verdicts():
    # A [4, 2, 4] code would break the Singleton bound.
    v = verdict_from_params(4, 2, 3, 3, 3)
    assert v.distance_optimal_by_packing == "yes"
    assert v.certified_by["distance"] == "singleton"
    # [4, 2, 2] over GF(3) is beaten by the [4, 2, 3] tetracode.
    assert verdict_from_params(4, 2, 2, 2, 3).distance_optimal_by_packing == "no"


def test_extended_two_weight_examples():
    assert extended_two_weight_distribution(3, 10, 4, 6, 9, 2) == (24, 36, 2, 18)
    assert extended_two_weight_distribution(3, 10, 4, 6, 9, 0) == (18, 42, 8, 12)
    assert extended_two_weight_distribution(4, 17, 4, 12, 16, 0) == (48, 156, 15, 36)
    with pytest.raises(PreconditionViolated):
        extended_two_weight_distribution(3, 10, 4, 6, 9, 1)
    with pytest.raises(PreconditionViolated):
        extended_two_weight_distribution(3, 10, 4, 9, 6, 0)
    with pytest.raises(NonIntegralCount):
        extended_two_weight_distribution(3, 8, 4, 6, 9, 0)


@pytest.mark.parametrize("q, l, s, h", [(3, 2, 1, 2), (3, 2, 1, 4), (4, 2, 1, 5), (5, 2, 1, 3), (3, 1, 2, 2)])
def test_two_weight_closed_form_sums(q, l, s, h):
    m, n, w1, w2 = two_weight_parameters(q, l, s, h)
    lo, hi = sorted((w1, w2))
    for a2 in (0, q - 1):
        counts = extended_two_weight_distribution(q, n, m, lo, hi, a2)
        assert sum(counts) == q**m - 1


def test_optimality_report_shape():
    f = make_field(3)
    code = from_generator(f, [[1, 0, 1, 1], [0, 1, 1, 2]])
    rep = optimality_report(code, "tetracode")
    assert rep["label"] == "tetracode"
    assert rep["base"]["code"]["params"] == [4, 2, 3]
    assert rep["base"]["dual"]["params"] == [4, 2, 3]


@st.composite
def random_code(draw):
    p, s = draw(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]))
    f = make_field(p, s)
    n = draw(st.integers(2, 9))
    k = draw(st.integers(1, min(4, n)))
    rows = [[draw(st.integers(0, f.q - 1)) for _ in range(n)] for _ in range(k)]
    return from_generator(f, rows, n=n)


@settings(max_examples=80, deadline=None)
@given(random_code())
def test_bounds_never_exclude_a_real_code(code):
    if code.k == 0:
        return
    q = code.field.q
    d = exact_min_distance(code)
    assert exclusion(code.n, code.k, d, q) is None
    assert griesmer_length(code.k, d, q) <= code.n
    if code.k < code.n:
        dd = exact_min_distance(dual(code))
        assert exclusion(code.n, code.n - code.k, dd, q) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 30), st.integers(1, 30), st.integers(1, 30), st.sampled_from([2, 3, 4, 5, 7, 8, 9]))
def test_exclusion_is_monotone(n, k, d, q):
    if k > n or d > n:
        return
    if exclusion(n, k, d, q):
        assert exclusion(n, k, d + 1, q) or d + 1 > n
        assert exclusion(n, k + 1, d, q) or k + 1 > n
    if not sphere_packing_holds(n, k, d, q):
        assert not sphere_packing_holds(n, k, min(n, d + 1), q) or d + 1 > n
