"""Single and mixed multiplicities; two paths that must agree exactly."""

from fractions import Fraction
from itertools import product as iproduct

import pytest

from mixmult.errors import NotMPrimaryError
from mixmult.gridpoly import integer_grid, interpolate_on_grid
from mixmult.ideals import (
    colength,
    maximal_ideal,
    minimalize,
    power,
    product,
    unit_ideal,
)
from mixmult.multiplicity import (
    MixedTable,
    StabilizationWindow,
    compositions,
    mixed_table,
    mixed_table_oracle,
    multinomial,
    multiplicity,
)
from mixmult.verify import RandomStream, SuiteConfig, random_ideal

from conftest import ideal


class TestSingleMultiplicity:
    @pytest.mark.parametrize("d", [2, 3])
    def test_maximal_ideal(self, d):
        assert multiplicity(maximal_ideal(d)) == 1

    def test_second_differences_example(self):
        I = ideal((2, 0), (0, 1))
        # colengths of powers: 2, 6, 12, 20 -> second differences 2, 2
        assert [colength(power(I, t)) for t in range(1, 5)] == [2, 6, 12, 20]
        assert multiplicity(I) == 2

    def test_staircase_with_covolume_crosscheck(self):
        # complement hull of (x^3, xy, y^3) has area 3; e = 2! * 3
        assert multiplicity(ideal((3, 0), (1, 1), (0, 3))) == 6

    def test_unit_ideal_degenerate(self):
        assert multiplicity(unit_ideal(2)) == 0

    def test_not_m_primary(self):
        with pytest.raises(NotMPrimaryError):
            multiplicity(ideal((1, 0)))

    @pytest.mark.parametrize("a", range(1, 5))
    @pytest.mark.parametrize("b", range(1, 5))
    def test_box_ideals(self, a, b):
        assert multiplicity(ideal((a, 0), (0, b))) == a * b

    def test_window_validation(self):
        with pytest.raises(ValueError):
            StabilizationWindow(0)
        with pytest.raises(ValueError):
            StabilizationWindow(3, width=1)


class TestMixedTable:
    def test_equal_maximal_ideals(self):
        table = mixed_table([maximal_ideal(2), maximal_ideal(2)])
        assert table.entries == {
            (2, 0): Fraction(1),
            (1, 1): Fraction(1),
            (0, 2): Fraction(1),
        }

    def test_running_example(self, running_pair):
        I, J = running_pair
        # e(IJ) = 6 = e(I) + 2 e(I,J) + e(J) forces e(I,J) = 1
        assert multiplicity(product(I, J)) == 6
        table = mixed_table([I, J])
        assert table.entries == {
            (2, 0): Fraction(2),
            (1, 1): Fraction(1),
            (0, 2): Fraction(2),
        }

    def test_single_input_reduction(self):
        table = mixed_table([ideal((2, 0), (0, 3))])
        assert table.entries == {(2,): Fraction(6)}

    def test_grid_override(self, running_pair):
        I, J = running_pair
        shifted = mixed_table([I, J], grid_axes=[[2, 3, 4], [1, 3, 5]])
        assert shifted == mixed_table([I, J])
        with pytest.raises(ValueError):
            mixed_table([I, J], grid_axes=[[1, 2], [1, 2]])
        with pytest.raises(ValueError):
            mixed_table([I, J], grid_axes=[[0, 1, 2], [1, 2, 3]])

    def test_rejects_unit_and_non_m_primary(self):
        with pytest.raises(ValueError):
            mixed_table([unit_ideal(2), maximal_ideal(2)])
        with pytest.raises(NotMPrimaryError):
            mixed_table([ideal((1, 0)), maximal_ideal(2)])


class TestOraclePath:
    def test_matches_on_examples(self, running_pair):
        I, J = running_pair
        assert mixed_table_oracle([maximal_ideal(2)] * 2) == mixed_table(
            [maximal_ideal(2)] * 2
        )
        assert mixed_table_oracle([I, J]).entries == {
            (2, 0): Fraction(2),
            (1, 1): Fraction(1),
            (0, 2): Fraction(2),
        }
        assert mixed_table_oracle([ideal((2, 0), (0, 3))]).entries == {
            (2,): Fraction(6)
        }


def _random_instances(seed, dim, r, count, max_exponent):
    cfg = SuiteConfig(dim=dim, r=r, count=count, max_exponent=max_exponent, seed=seed)
    stream = RandomStream(seed)
    return [
        [random_ideal(cfg, stream) for _ in range(r)] for _ in range(count)
    ]


class TestOracleEquivalence:
    def test_dim2(self):
        for ideals in _random_instances(31, 2, 2, 12, 4):
            assert mixed_table(ideals) == mixed_table_oracle(ideals)

    def test_dim2_r3(self):
        for ideals in _random_instances(32, 2, 3, 5, 3):
            assert mixed_table(ideals) == mixed_table_oracle(ideals)

    def test_dim3(self):
        for ideals in _random_instances(33, 3, 2, 3, 3):
            assert mixed_table(ideals) == mixed_table_oracle(ideals)


class TestTableInvariants:
    def test_symmetry(self, running_pair):
        I, J = running_pair
        table = mixed_table([I, J])
        flipped = mixed_table([J, I])
        assert flipped.entries == {
            (k2, k1): v for (k1, k2), v in table.entries.items()
        }

    def test_repetition_consistency(self, running_pair):
        I, J = running_pair
        pair = mixed_table([I, J])
        triple = mixed_table([I, J, J])
        assert triple.entry(1, 1, 0) == pair.entry(1, 1)
        assert triple.entry(1, 0, 1) == pair.entry(1, 1)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_power_multilinearity(self, running_pair, k):
        I, J = running_pair
        assert mixed_table([power(I, k), J]).entry(1, 1) == k * mixed_table(
            [I, J]
        ).entry(1, 1)

    def test_marginals_match_single_multiplicities(self):
        ideals = [ideal((2, 0), (1, 1), (0, 3)), ideal((3, 0), (0, 2))]
        table = mixed_table(ideals)
        for i, I in enumerate(ideals):
            assert table.pure_entry(i) == multiplicity(I)

    def test_expansion_identity_one_point_beyond_grid(self, running_pair):
        I, J = running_pair
        d = 2
        table = mixed_table([I, J])
        for n in iproduct(range(1, d + 3), repeat=2):
            prod_ideal = product(power(I, n[0]), power(J, n[1]))
            predicted = sum(
                multinomial(d, key)
                * table.entries[key]
                * n[0] ** key[0]
                * n[1] ** key[1]
                for key in compositions(d, 2)
            )
            assert multiplicity(prod_ideal) == predicted

    def test_homogeneity_of_interpolant(self, running_pair):
        I, J = running_pair
        d = 2

        def g(pt):
            n = tuple(int(x) for x in pt)
            return multiplicity(product(power(I, n[0]), power(J, n[1])))

        poly = interpolate_on_grid(g, (d, d), integer_grid([d + 1, d + 1]))
        assert poly.total_degrees() == {d}

    def test_keys_are_all_compositions(self):
        table = mixed_table([maximal_ideal(2), maximal_ideal(2), maximal_ideal(2)])
        assert set(table.entries) == set(compositions(2, 3))
        with pytest.raises(ValueError):
            MixedTable(2, 2, {(2, 0): Fraction(1)})
        with pytest.raises(ValueError):
            MixedTable(
                2,
                2,
                {
                    (2, 0): Fraction(1),
                    (1, 1): Fraction(-1),
                    (0, 2): Fraction(1),
                },
            )
