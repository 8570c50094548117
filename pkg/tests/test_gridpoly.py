"""Interpolation and grid identity testing, all exact."""

from fractions import Fraction

import pytest

from mixmult.gridpoly import (
    CoeffTable,
    Grid,
    evaluate,
    integer_grid,
    interpolate_on_grid,
    zero_test,
)
from mixmult.verify import RandomStream


def F(*args):
    return Fraction(*args)


def grid_of(*axes):
    return Grid(tuple(tuple(F(x) for x in axis) for axis in axes))


class TestInterpolate:
    def test_constant(self):
        p = interpolate_on_grid(lambda pt: F(5), (0, 0), grid_of([1], [1]))
        assert p.coeffs == {(0, 0): F(5)}

    def test_running_example_quadratic(self):
        # 2n1^2 + 2n1n2 + 2n2^2 on {1,2,3}^2: solved by elimination
        def f(pt):
            x, y = pt
            return 2 * x * x + 2 * x * y + 2 * y * y

        p = interpolate_on_grid(f, (2, 2), grid_of([1, 2, 3], [1, 2, 3]))
        assert p.coeffs == {(2, 0): F(2), (1, 1): F(2), (0, 2): F(2)}

    def test_univariate_three_point_solve(self):
        p = interpolate_on_grid(
            lambda pt: pt[0] ** 2 - 3 * pt[0], (2,), grid_of([0, 1, 2])
        )
        assert p.coeffs == {(2,): F(1), (1,): F(-3)}

    def test_grid_size_must_match_bounds(self):
        with pytest.raises(ValueError):
            interpolate_on_grid(lambda pt: F(0), (2,), grid_of([0, 1]))

    def test_repeated_nodes_rejected(self):
        with pytest.raises(ValueError):
            grid_of([1, 1, 2])

    def test_rational_nodes(self):
        nodes = [F(1, 2), F(1, 3), F(2)]
        p = interpolate_on_grid(
            lambda pt: pt[0] ** 2 + F(1, 7), (2,), grid_of(nodes)
        )
        assert p.coeffs == {(2,): F(1), (0,): F(1, 7)}


class TestEvaluate:
    def test_running_example_value(self):
        p = CoeffTable(2, {(2, 0): F(2), (1, 1): F(2), (0, 2): F(2)})
        assert evaluate(p, (F(1), F(1))) == 6  # matches e(IJ) downstream

    def test_zero_point_reads_constant_term(self):
        p = CoeffTable(2, {(0, 0): F(7), (1, 1): F(3)})
        assert evaluate(p, (F(0), F(0))) == 7
        assert evaluate(CoeffTable(2, {(1, 1): F(3)}), (F(0), F(0))) == 0

    def test_root(self):
        p = CoeffTable(1, {(1,): F(-3), (2,): F(1)})
        assert evaluate(p, (F(3),)) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            evaluate(CoeffTable(2, {(1, 0): F(1)}), (F(1),))


class TestZeroTest:
    def test_zero_function(self):
        assert zero_test(lambda pt: F(0), (1, 1), grid_of([0, 1], [0, 1]))

    def test_nonzero_witness(self):
        assert not zero_test(
            lambda pt: pt[0] - pt[1], (1, 1), grid_of([0, 1], [0, 1])
        )

    def test_grid_too_small(self):
        with pytest.raises(ValueError):
            zero_test(lambda pt: F(0), (2, 1), grid_of([0, 1], [0, 1]))


def random_poly(stream, vars_, bounds, coeff_range=9):
    coeffs = {}
    for idx in _indices(bounds):
        if stream.below(3) == 0:
            num = stream.below(2 * coeff_range + 1) - coeff_range
            den = 1 + stream.below(3)
            if num:
                coeffs[idx] = Fraction(num, den)
    return CoeffTable(vars_, coeffs)


def _indices(bounds):
    from itertools import product

    return product(*(range(b + 1) for b in bounds))


def test_round_trip_200_random_polynomials():
    stream = RandomStream(2024)
    bounds = (3, 3, 3)
    grid = integer_grid([4, 4, 4])
    done = 0
    while done < 200:
        p = random_poly(stream, 3, bounds)
        q = interpolate_on_grid(lambda pt: evaluate(p, pt), bounds, grid)
        assert q == p
        done += 1


def test_nonzero_witness_on_200_random_polynomials():
    # uniqueness on grids of size bounds+1: a nonzero polynomial within the
    # bounds cannot vanish everywhere on the grid
    stream = RandomStream(4048)
    bounds = (2, 2, 2)
    grid = integer_grid([3, 3, 3])
    done = 0
    while done < 200:
        p = random_poly(stream, 3, bounds)
        if not p.coeffs:
            continue
        assert not zero_test(lambda pt: evaluate(p, pt), bounds, grid)
        done += 1


def test_interpolation_grid_independence():
    stream = RandomStream(99)
    bounds = (2, 2)
    grids = [
        grid_of([1, 2, 3], [1, 2, 3]),
        grid_of([0, 2, 5], [1, 4, 7]),
        grid_of([F(1, 2), F(3, 2), F(5, 2)], [2, 3, 9]),
    ]
    for _ in range(20):
        p = random_poly(stream, 2, bounds)
        tables = [
            interpolate_on_grid(lambda pt: evaluate(p, pt), bounds, g)
            for g in grids
        ]
        assert tables[0] == tables[1] == tables[2] == p


def test_dense_and_tensor_paths_agree():
    # r = 2 runs the dense solve; compare against the tensor recursion by
    # lifting to a dummy third variable of degree 0
    stream = RandomStream(7)
    bounds = (2, 2)
    grid = integer_grid([3, 3])
    lifted_grid = integer_grid([3, 3, 1])
    for _ in range(20):
        p = random_poly(stream, 2, bounds)
        dense = interpolate_on_grid(lambda pt: evaluate(p, pt), bounds, grid)
        tensor = interpolate_on_grid(
            lambda pt: evaluate(p, pt[:2]), (2, 2, 0), lifted_grid
        )
        assert dense.coeffs == {
            idx[:2]: c for idx, c in tensor.coeffs.items()
        }
