"""Exact multivariate interpolation and identity testing on product grids.

A polynomial in r variables whose degree in variable i is at most b_i is
determined by its values on any product grid S_1 x ... x S_r with
|S_i| = b_i + 1 distinct nodes, and vanishes identically iff it vanishes
on such a grid.  Everything here is exact rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import lcm


@dataclass(frozen=True)
class Grid:
    """Product grid: one finite set of distinct rationals per variable."""

    sets: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for axis, s in enumerate(self.sets):
            if len(set(s)) != len(s):
                raise ValueError(f"grid axis {axis} has repeated nodes")

    @property
    def vars(self) -> int:
        return len(self.sets)

    def points(self):
        return iproduct(*self.sets)


def integer_grid(sizes) -> Grid:
    """The default grid {1..n_i} per axis (all nodes positive integers)."""
    return Grid(tuple(tuple(Fraction(k) for k in range(1, n + 1)) for n in sizes))


@dataclass(frozen=True)
class CoeffTable:
    """Sparse exact polynomial: multi-index -> nonzero rational coefficient."""

    vars: int
    coeffs: dict

    def __post_init__(self):
        for idx, c in self.coeffs.items():
            if len(idx) != self.vars:
                raise ValueError(f"index {idx} does not have length {self.vars}")
            if c == 0:
                raise ValueError(f"stored zero coefficient at {idx}")

    def total_degrees(self):
        return {sum(idx) for idx in self.coeffs}

    def __eq__(self, other):
        return (
            isinstance(other, CoeffTable)
            and self.vars == other.vars
            and self.coeffs == other.coeffs
        )


def evaluate(p: CoeffTable, point) -> Fraction:
    """Exact evaluation of p at an r-tuple of rationals."""
    if len(point) != p.vars:
        raise ValueError(f"point has length {len(point)}, expected {p.vars}")
    total = Fraction(0)
    for idx, c in p.coeffs.items():
        term = Fraction(c)
        for x, e in zip(point, idx):
            term *= Fraction(x) ** e
        total += term
    return total


def zero_test(eval_fn, bounds, grid: Grid) -> bool:
    """Whether eval_fn vanishes on every grid point.

    With |S_i| >= bounds_i + 1 this certifies that a polynomial within
    the degree bounds is identically zero.
    """
    if grid.vars != len(bounds):
        raise ValueError("grid/bounds arity mismatch")
    for axis, (s, b) in enumerate(zip(grid.sets, bounds)):
        if len(s) < b + 1:
            raise ValueError(f"grid axis {axis} has {len(s)} nodes, needs >= {b + 1}")
    return all(eval_fn(pt) == 0 for pt in grid.points())


def _bareiss_solve(rows, rhs):
    """Solve a square exact system by fraction-free elimination.

    Rows are scaled to integers first (row scaling preserves solutions),
    then Bareiss division-free elimination keeps entries integral; back
    substitution returns exact Fractions.  Singular systems raise: the
    grids used here make the system nonsingular by construction, so that
    is a programming error, not a user error.
    """
    n = len(rows)
    m = []
    for row, b in zip(rows, rhs):
        entries = [Fraction(x) for x in row] + [Fraction(b)]
        scale = lcm(*(e.denominator for e in entries))
        m.append([int(e * scale) for e in entries])

    prev = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            raise ArithmeticError("singular interpolation system (grid invariant violated)")
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]

    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(m[i][n])
        for j in range(i + 1, n):
            acc -= m[i][j] * sol[j]
        sol[i] = acc / m[i][i]
    return sol


def _dense_interpolate(values, bounds, grid):
    indices = list(iproduct(*(range(b + 1) for b in bounds)))
    points = list(grid.points())
    rows = []
    for pt in points:
        rows.append(
            [
                _monomial(pt, idx)
                for idx in indices
            ]
        )
    sol = _bareiss_solve(rows, [values[pt] for pt in points])
    return {idx: c for idx, c in zip(indices, sol) if c != 0}


def _monomial(point, idx):
    v = Fraction(1)
    for x, e in zip(point, idx):
        v *= Fraction(x) ** e
    return v


def _newton_coeffs(xs, ys):
    """Coefficients (ascending degree) of the unique poly through (xs, ys)."""
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form incrementally
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)] + [Fraction(0)] * (n - 1)  # prod_{k<j} (x - x_k)
    for j in range(n):
        for k in range(j + 1):
            coeffs[k] += dd[j] * basis[k]
        if j + 1 < n:
            new = [Fraction(0)] * n
            for k in range(j + 1):
                new[k + 1] += basis[k]
                new[k] -= basis[k] * xs[j]
            basis = new
    return coeffs


def _tensor_interpolate(values, bounds, grid):
    # Peel off the last axis with univariate interpolations, then recurse
    # on each coefficient layer.
    r = len(bounds)
    if r == 1:
        xs = list(grid.sets[0])
        coeffs = _newton_coeffs(xs, [values[(x,)] for x in xs])
        return {(k,): c for k, c in enumerate(coeffs) if c != 0}
    head = Grid(grid.sets[:-1])
    xs = list(grid.sets[-1])
    layers = [dict() for _ in xs]
    for pt in head.points():
        col = _newton_coeffs(xs, [values[pt + (x,)] for x in xs])
        for k, c in enumerate(col):
            layers[k][pt] = c
    out = {}
    for k, layer in enumerate(layers):
        for idx, c in _tensor_interpolate(layer, bounds[:-1], head).items():
            out[idx + (k,)] = c
    return out


def interpolate_on_grid(eval_fn, bounds, grid: Grid) -> CoeffTable:
    """The unique polynomial within per-variable bounds matching eval_fn.

    The grid must have exactly bounds_i + 1 nodes on axis i.  Dense
    fraction-free elimination for one or two variables; tensor-product
    univariate steps beyond that (identical results, linear-size systems).
    """
    bounds = tuple(bounds)
    if grid.vars != len(bounds):
        raise ValueError("grid/bounds arity mismatch")
    for axis, (s, b) in enumerate(zip(grid.sets, bounds)):
        if len(s) != b + 1:
            raise ValueError(
                f"grid axis {axis} has {len(s)} nodes, interpolation needs exactly {b + 1}"
            )
    values = {pt: Fraction(eval_fn(pt)) for pt in grid.points()}
    if len(bounds) <= 2:
        coeffs = _dense_interpolate(values, bounds, grid)
    else:
        coeffs = _tensor_interpolate(values, bounds, grid)
    return CoeffTable(len(bounds), coeffs)
