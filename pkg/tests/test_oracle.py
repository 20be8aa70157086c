from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from ferrers import (
    BudgetExceeded,
    DimensionMismatch,
    FieldPoint,
    Partition,
    Polynomial,
    PrimeComponent,
    diagonal_certificate,
    edge_generators,
    evaluate,
    full_decomposition,
    membership_equality,
    minimal_decomposition,
    parse_monomial,
    parse_polynomial,
    sv_sums,
    variety,
    variety_equal,
)

from conftest import partitions


def as_polys(monomials):
    return [Polynomial.sum_of([m]) for m in monomials]


def brute_variety(gens, p, dims):
    """Scalar enumeration through ``evaluate``; independent of the vectorised path."""
    n, m = dims
    return {
        FieldPoint(pt, p, n)
        for pt in product(range(p), repeat=n + m)
        if all(evaluate(f, FieldPoint(pt, p, n)) == 0 for f in gens)
    }


class TestEvaluate:
    def test_char_two_cancellation(self):
        pt = FieldPoint.from_xy((1, 1), (1, 1), 2)
        assert evaluate(parse_polynomial("x1*y2 + x2*y1"), pt) == 0

    def test_origin(self):
        for p in (2, 3, 5, 7):
            assert evaluate(parse_polynomial("x1*y1"), FieldPoint.from_xy((0,), (0,), p)) == 0

    def test_last_example_sum(self):
        pt = FieldPoint.from_xy((1, 0, 1, 0, 0), (0, 0, 0, 1, 0, 1), 3)
        assert evaluate(parse_polynomial("x1*y6 + x3*y4"), pt) == 2

    def test_exponents_and_coefficients(self):
        pt = FieldPoint.from_xy((2,), (3,), 5)
        # 3 * 2^2 * 3 - 4 = 32 = 2 mod 5
        assert evaluate(parse_polynomial("-4 + 3*x1^2*y1"), pt) == 2

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            evaluate(parse_polynomial("x3*y1"), FieldPoint.from_xy((1, 1), (1,), 2))

    def test_point_validation(self):
        with pytest.raises(ValueError):
            FieldPoint.from_xy((2,), (0,), 2)


class TestVariety:
    def test_single_generator(self):
        pts = variety(as_polys(edge_generators(Partition.of(1))), 2, (1, 1))
        assert {pt.residues for pt in pts} == {(0, 0), (0, 1), (1, 0)}

    def test_no_generators(self):
        assert len(variety([], 2, (1, 1))) == 4

    def test_two_one(self):
        assert len(variety(as_polys(edge_generators(Partition.of(2, 1))), 2, (2, 2))) == 8

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            variety([], 3, (3, 3), budget=3**6 - 1)
        assert len(variety([], 3, (3, 3), budget=3**6)) == 3**6

    def test_not_prime(self):
        with pytest.raises(ValueError):
            variety([], 4, (1, 1))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            variety([parse_polynomial("x1*y3")], 2, (1, 2))

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.sampled_from(
                ["x1*y1", "x1*y2 + x2*y1", "x1^2 - y2", "2*x2*y1 + 1", "x1*x2*y1*y2", "y1^3 + 2*y2^2"]
            ),
            max_size=3,
        ),
        st.sampled_from([2, 3, 5]),
    )
    def test_matches_scalar_enumeration(self, texts, p):
        gens = [parse_polynomial(t) for t in texts]
        assert variety(gens, p, (2, 2)) == brute_variety(gens, p, (2, 2))


class TestVarietyEqual:
    def test_two_one(self):
        lam = Partition.of(2, 1)
        result = variety_equal(as_polys(edge_generators(lam)), sv_sums(diagonal_certificate(lam)), 2, (2, 2))
        assert result and result.common_zeros == 8 and result.points_checked == 16

    def test_counterexample_is_first_in_lex_order(self):
        a = [parse_polynomial("x1*y1")]
        b = [parse_polynomial("x1*y1"), parse_polynomial("x1*y2")]
        result = variety_equal(a, b, 2, (1, 2))
        assert not result
        assert result.counterexample == FieldPoint.from_xy((1,), (0, 1), 2)

    def test_reflexive(self):
        gens = sv_sums(diagonal_certificate(Partition.of(3, 1)))
        assert variety_equal(gens, gens, 3, (2, 3))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            variety_equal([], [], 2, (10, 10), budget=1000)


@settings(max_examples=40, deadline=None)
@given(partitions(max_rows=4, max_cols=4), st.sampled_from([2, 3, 5]))
def test_edge_and_diagonal_zero_sets_agree(lam, p):
    dims = (lam.n, lam.m)
    if p ** (lam.n + lam.m) > 10**5:
        return
    gens = as_polys(edge_generators(lam))
    assert variety_equal(gens, sv_sums(diagonal_certificate(lam)), p, dims)


@settings(max_examples=40, deadline=None)
@given(partitions(max_rows=3, max_cols=3), st.sampled_from([2, 3]))
def test_point_count_by_inclusion_exclusion(lam, p):
    total = lam.n + lam.m
    comps = minimal_decomposition(lam)
    expected = 0
    for size in range(1, len(comps) + 1):
        for subset in combinations(comps, size):
            zeroed = set().union(*(c.variables for c in subset))
            expected += (-1) ** (size + 1) * p ** (total - len(zeroed))
    assert len(variety(as_polys(edge_generators(lam)), p, (lam.n, lam.m))) == expected


@settings(max_examples=40, deadline=None)
@given(partitions(max_rows=3, max_cols=3), st.data())
def test_adding_a_generator_never_enlarges_the_variety(lam, data):
    dims = (lam.n, lam.m)
    gens = sv_sums(diagonal_certificate(lam))
    extra = data.draw(st.sampled_from(as_polys(edge_generators(lam))))
    assert variety(gens + [extra], 2, dims) <= variety(gens, 2, dims)


class TestMembershipEquality:
    def test_two_one(self):
        result = membership_equality(Partition.of(2, 1), minimal_decomposition(Partition.of(2, 1)))
        assert result and result.monomials_checked == 16

    def test_example(self):
        lam = Partition.of(6, 4, 4, 2, 1)
        result = membership_equality(lam, minimal_decomposition(lam))
        assert result and result.monomials_checked == 2**11

    def test_wrong_decomposition(self):
        result = membership_equality(Partition.of(2, 1), [PrimeComponent(2, 0)])
        assert not result
        assert result.counterexample == parse_monomial("x1")

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            membership_equality(Partition.of(6, 4, 4, 2, 1), [], budget=2**11 - 1)

    @given(partitions(max_rows=5, max_cols=5))
    def test_both_decompositions(self, lam):
        assert membership_equality(lam, full_decomposition(lam))
        assert membership_equality(lam, minimal_decomposition(lam))
