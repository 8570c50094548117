"""Monomial-ideal arithmetic: normal forms, products, colengths."""

import math
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixmult.errors import NotMPrimaryError
from mixmult.ideals import (
    MonomialIdeal,
    colength,
    colength_boxscan,
    ideal_sum,
    is_subideal,
    maximal_ideal,
    minimalize,
    power,
    product,
    unit_ideal,
)

from conftest import ideal


def brute_minimal(gens):
    """Pairwise divisibility scan; the independent oracle for minimalize."""
    gens = set(gens)
    keep = []
    for g in gens:
        if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in gens):
            keep.append(g)
    return tuple(sorted(keep))


class TestMinimalize:
    def test_drops_divisible_generator(self):
        assert ideal((2, 0), (3, 1), (0, 1)).gens == ((0, 1), (2, 0))

    def test_zero_vector_wins(self):
        assert ideal((0, 0), (5, 7)).gens == ((0, 0),)

    def test_staircase_example(self):
        raw = [(3, 0), (2, 2), (1, 1), (0, 3)]
        assert ideal(*raw).gens == brute_minimal(raw) == ((0, 3), (1, 1), (3, 0))

    def test_idempotent_and_order_independent(self):
        raw = [(3, 0), (2, 2), (1, 1), (0, 3), (4, 4)]
        expected = minimalize(raw, 2)
        for perm in permutations(raw):
            assert minimalize(perm, 2) == expected
        assert minimalize(expected.gens, 2) == expected

    def test_rejects_empty_and_mismatched(self):
        with pytest.raises(ValueError):
            minimalize([], 2)
        with pytest.raises(ValueError):
            minimalize([(1, 2, 3)], 2)
        with pytest.raises(ValueError):
            minimalize([(-1, 0)], 2)

    def test_direct_construction_requires_normal_form(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, ((2, 0), (1, 0)))  # not an antichain
        with pytest.raises(ValueError):
            MonomialIdeal(2, ((2, 0), (0, 1)))  # not sorted


class TestContains:
    def test_examples(self):
        I = ideal((2, 0), (0, 1))
        assert I.contains((1, 1))
        assert not I.contains((1, 0))
        assert (2, 2) in ideal((3, 0), (1, 1), (0, 3))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            ideal((2, 0), (0, 1)).contains((1, 1, 1))


class TestProductPowerSum:
    def test_product_of_maximal(self):
        m = maximal_ideal(2)
        assert product(m, m).gens == ((0, 2), (1, 1), (2, 0))

    def test_product_staircases(self):
        # pairwise sums {(3,0),(2,2),(1,1),(0,3)}, then minimalize
        assert (ideal((2, 0), (0, 1)) * ideal((1, 0), (0, 2))).gens == (
            (0, 3),
            (1, 1),
            (3, 0),
        )

    def test_unit_is_identity(self):
        I = ideal((3, 0), (1, 1), (0, 3))
        assert product(I, unit_ideal(2)) == I

    def test_power_examples(self):
        m = maximal_ideal(2)
        assert power(m, 3).gens == ((0, 3), (1, 2), (2, 1), (3, 0))
        assert power(ideal((2, 0), (0, 1)), 2).gens == ((0, 2), (2, 1), (4, 0))
        assert power(m, 0) == unit_ideal(2)
        assert power(m, 1) == m

    def test_sum_examples(self):
        assert ideal_sum(ideal((2, 0)), ideal((0, 1))).gens == ((0, 1), (2, 0))
        I = ideal((3, 0), (1, 1), (0, 3))
        assert I + I == I
        assert (ideal((3, 0), (1, 1)) + ideal((0, 3), (2, 2))).gens == (
            (0, 3),
            (1, 1),
            (3, 0),
        )

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            product(maximal_ideal(2), maximal_ideal(3))


class TestMPrimary:
    @pytest.mark.parametrize(
        "gens,expected",
        [
            ([(2, 0), (1, 1), (0, 3)], True),
            ([(1, 0)], False),
            ([(0, 0)], True),  # unit ideal, colength 0
            ([(1, 1), (2, 0)], False),
        ],
    )
    def test_examples(self, gens, expected):
        assert ideal(*gens, dim=2).is_m_primary is expected


class TestColength:
    def test_examples(self):
        assert colength(maximal_ideal(2)) == 1
        assert colength(ideal((2, 0), (1, 1), (0, 3))) == 4
        assert colength(ideal((3, 0), (1, 1), (0, 3))) == 5
        assert colength(unit_ideal(3)) == 0

    def test_non_m_primary_raises(self):
        with pytest.raises(NotMPrimaryError):
            colength(ideal((1, 0)))
        with pytest.raises(NotMPrimaryError):
            colength_boxscan(ideal((1, 0, 0), (0, 1, 0)))

    @pytest.mark.parametrize("a", range(1, 7))
    @pytest.mark.parametrize("b", range(1, 7))
    def test_box_ideal_formula(self, a, b):
        assert colength(ideal((a, 0), (0, b))) == a * b

    @pytest.mark.parametrize("d", [2, 3])
    @pytest.mark.parametrize("n", range(1, 11))
    def test_maximal_power_formula(self, d, n):
        assert colength(power(maximal_ideal(d), n)) == math.comb(n + d - 1, d)

    def test_antitone(self):
        I = ideal((3, 0), (1, 1), (0, 3))
        J = ideal((2, 0), (1, 1), (0, 2))
        assert is_subideal(I, J)
        assert colength(I) >= colength(J)


# hypothesis strategies: random m-primary ideals in dimensions 2 and 3


def mprimary_ideals(dim, max_exp=5, max_extra=4):
    pure = st.tuples(*(st.integers(1, max_exp) for _ in range(dim)))

    def assemble(draw_pure, extras):
        gens = [
            tuple(a if j == i else 0 for j in range(dim))
            for i, a in enumerate(draw_pure)
        ]
        gens += [g for g in extras if any(g)]
        return minimalize(gens, dim)

    extra = st.lists(
        st.tuples(*(st.integers(0, max_exp - 1) for _ in range(dim))),
        max_size=max_extra,
    )
    return st.builds(assemble, pure, extra)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: st.tuples(st.just(d), mprimary_ideals(d))))
def test_slicing_agrees_with_boxscan(dim_and_ideal):
    _, I = dim_and_ideal
    assert colength(I) == colength_boxscan(I)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 3).flatmap(
        lambda d: st.tuples(mprimary_ideals(d, 4, 3), mprimary_ideals(d, 4, 3))
    )
)
def test_product_respects_containment(pair):
    I, J = pair
    for e in I.gens[:3]:
        for f in J.gens[:3]:
            assert product(I, J).contains(tuple(a + b for a, b in zip(e, f)))


@settings(max_examples=25, deadline=None)
@given(
    st.integers(2, 3).flatmap(lambda d: mprimary_ideals(d, 3, 2)),
    st.integers(0, 5),
    st.integers(0, 5),
)
def test_power_additivity(I, a, b):
    if a + b <= 5:
        assert power(I, a + b) == product(power(I, a), power(I, b))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: mprimary_ideals(d)))
def test_colength_zero_iff_unit(I):
    assert (colength(I) == 0) == I.is_unit


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: mprimary_ideals(d)))
def test_complement_inside_pure_power_box(I):
    # enumeration-bound soundness: outside the box, everything is inside
    # the ideal
    bounds = I.pure_bounds
    for axis, b in enumerate(bounds):
        probe = tuple(b if j == axis else 10**6 for j in range(I.dim))
        assert I.contains(probe)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 3).flatmap(
        lambda d: st.tuples(mprimary_ideals(d, 4, 3), mprimary_ideals(d, 4, 3))
    )
)
def test_product_commutes(pair):
    I, J = pair
    assert product(I, J) == product(J, I)
