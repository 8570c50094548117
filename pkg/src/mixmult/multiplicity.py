"""Multiplicities of m-primary monomial ideals, single and mixed.

The single multiplicity of I is d! times the leading coefficient of the
eventually-polynomial function t -> colength(I^t), read off as a d-th
forward difference once that difference is constant across a
stabilization window.  Mixed multiplicities of a tuple (I_1,...,I_r) are
the coefficients e(I_1^{[k_1]},...,I_r^{[k_r]}) in the expansion

    multiplicity(I_1^{n_1}...I_r^{n_r})
        = sum over k_1+...+k_r = d of  d!/(k_1!...k_r!) * e(...) * n^k,

computed two independent ways: interpolation of the left-hand side on the
grid {1..d+1}^r (the default path), and stabilized mixed finite
differences of the multigraded colength function (the certifying oracle).
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial, gcd

from . import backend
from .errors import NotMPrimaryError, StabilizationError
from .gridpoly import Grid, interpolate_on_grid
from .ideals import MonomialIdeal

DEFAULT_WIDTH = 3
DEFAULT_CAP = 64


@dataclass(frozen=True)
class StabilizationWindow:
    """Where eventual-polynomial behavior of lengths is trusted.

    The d-th differences must be constant at width consecutive starts
    from t_start before a limit value is accepted.
    """

    t_start: int
    width: int = DEFAULT_WIDTH

    def __post_init__(self):
        if self.t_start < 1:
            raise ValueError("t_start must be >= 1")
        if self.width < 2:
            raise ValueError("window width must be >= 2")


def default_window(ideals) -> StabilizationWindow:
    """Default policy: start past the summed pure-power exponents."""
    return StabilizationWindow(1 + sum(i.max_pure_exponent() for i in ideals))


def compositions(total: int, parts: int):
    """All orderings of total into parts nonnegative summands, descending
    lexicographically (so (d,0,...,0) comes first)."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial(d: int, composition) -> int:
    out = factorial(d)
    for k in composition:
        out //= factorial(k)
    return out


@dataclass(frozen=True)
class MixedTable:
    """Exact mixed multiplicities, keyed by compositions of d into r parts."""

    d: int
    r: int
    entries: dict

    def __post_init__(self):
        expected = set(compositions(self.d, self.r))
        if set(self.entries) != expected:
            raise ValueError("entry keys are not exactly the compositions of d")
        for key, value in self.entries.items():
            if value < 0:
                raise ValueError(f"negative entry at {key}")

    def entry(self, *composition) -> Fraction:
        return self.entries[tuple(composition)]

    def pure_entry(self, i: int) -> Fraction:
        key = tuple(self.d if j == i else 0 for j in range(self.r))
        return self.entries[key]

    def scaled(self, factor: Fraction) -> "MixedTable":
        factor = Fraction(factor)
        return MixedTable(
            self.d, self.r, {k: v * factor for k, v in self.entries.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, MixedTable)
            and (self.d, self.r) == (other.d, other.r)
            and self.entries == other.entries
        )


def _unit_flat(dim: int) -> array:
    return array("q", [0] * dim)


def _forward_diffs(values, order: int):
    seq = list(values)
    for _ in range(order):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq


class _RayChain:
    """Walks colength((prod_i I_i^{dir_i})^s) for s = 1, 2, ... incrementally.

    One multiplication step per base-ideal factor keeps intermediate
    generator sets minimal; every visited s caches its colength so later
    (possibly interleaved) requests never rewind the walk.
    """

    def __init__(self, base_flats, direction, dim):
        self._bases = base_flats
        self._dir = direction
        self._dim = dim
        self._cur = _unit_flat(dim)
        self._s = 0
        self._lengths = {}

    def length(self, s: int) -> int:
        while self._s < s:
            for base, k in zip(self._bases, self._dir):
                for _ in range(k):
                    self._cur = backend.product_flat(self._cur, base, self._dim)
            self._s += 1
            self._lengths[self._s] = backend.colength_flat(self._cur, self._dim)
        return self._lengths[s]


def _stabilized_limit(length_at, d: int, window: StabilizationWindow, cap: int, what: str) -> int:
    """d-th forward difference of length_at, accepted once constant."""
    t0 = window.t_start
    while True:
        values = [length_at(t) for t in range(t0, t0 + d + window.width)]
        diffs = _forward_diffs(values, d)
        if all(x == diffs[0] for x in diffs):
            return diffs[0]
        if 2 * t0 > cap:
            raise StabilizationError(
                f"{what}: order-{d} differences not constant on window starting at "
                f"t={t0} (width {window.width}); raise t_start or the cap (cap={cap})"
            )
        t0 *= 2


def _check_inputs(ideals):
    if not ideals:
        raise ValueError("need at least one ideal")
    dim = ideals[0].dim
    for ideal in ideals:
        if ideal.dim != dim:
            raise ValueError("ideals live in different ambient dimensions")
        if ideal.is_unit:
            raise ValueError("the unit ideal has no mixed multiplicities")
        if not ideal.is_m_primary:
            raise NotMPrimaryError("multiplicities require m-primary ideals")
    return dim


def multiplicity(ideal: MonomialIdeal, window: StabilizationWindow | None = None,
                 cap: int = DEFAULT_CAP) -> int:
    """Hilbert-Samuel multiplicity e(I) as a stabilized d-th difference."""
    if ideal.is_unit:
        return 0  # degenerate: colength(I^t) is identically 0
    if not ideal.is_m_primary:
        raise NotMPrimaryError("multiplicity requires an m-primary ideal")
    if window is None:
        window = default_window([ideal])
    chain = _RayChain([ideal._flat], (1,), ideal.dim)
    return _stabilized_limit(chain.length, ideal.dim, window, cap, "multiplicity")


def _primitive(point):
    g = 0
    for c in point:
        g = gcd(g, c)
    return g, tuple(c // g for c in point)


def _ray_values(ideals, grid_axes, d, window, cap):
    """g(n) = multiplicity(prod I_i^{n_i}) for every n in the grid."""
    dim = ideals[0].dim
    flats = [i._flat for i in ideals]
    chains = {}
    values = {}
    for point in iproduct(*grid_axes):
        scale, direction = _primitive(point)
        chain = chains.get(direction)
        if chain is None:
            chain = chains[direction] = _RayChain(flats, direction, dim)
        values[point] = _stabilized_limit(
            lambda t: chain.length(scale * t), d, window, cap,
            f"mixed grid point {point}",
        )
    return values


def mixed_table(ideals, window: StabilizationWindow | None = None,
                cap: int = DEFAULT_CAP, grid_axes=None) -> MixedTable:
    """Mixed multiplicities via interpolation of n -> e(prod I_i^{n_i}).

    Evaluates on {1..d+1}^r by default (or the supplied positive-integer
    axes), fits the unique polynomial with per-variable degrees <= d,
    asserts homogeneity of total degree d, and divides out multinomial
    factors so the table stores e(I_1^{[k_1]},...,I_r^{[k_r]}) itself.
    """
    ideals = list(ideals)
    d = _check_inputs(ideals)
    r = len(ideals)
    if window is None:
        window = default_window(ideals)
    if grid_axes is None:
        grid_axes = [list(range(1, d + 2))] * r
    else:
        grid_axes = [list(axis) for axis in grid_axes]
        for axis in grid_axes:
            if len(axis) != d + 1 or len(set(axis)) != d + 1:
                raise ValueError(f"grid axis needs exactly {d + 1} distinct nodes")
            if any(not isinstance(x, int) or x < 1 for x in axis):
                raise ValueError("mixed-multiplicity grids need integer nodes >= 1")

    values = _ray_values(ideals, grid_axes, d, window, cap)
    grid = Grid(tuple(tuple(Fraction(x) for x in axis) for axis in grid_axes))

    def eval_fn(pt):
        key = tuple(int(x) for x in pt)
        return Fraction(values[key])

    poly = interpolate_on_grid(eval_fn, (d,) * r, grid)
    if poly.total_degrees() - {d}:
        raise StabilizationError(
            "interpolated multiplicity polynomial is not homogeneous of total "
            f"degree {d}; a stabilization window accepted pre-asymptotic values"
        )
    entries = {}
    for key in compositions(d, r):
        coeff = poly.coeffs.get(key, Fraction(0))
        entries[key] = coeff / multinomial(d, key)
    _check_integral(entries)
    return MixedTable(d, r, entries)


def _check_integral(entries):
    for key, value in entries.items():
        if Fraction(value).denominator != 1:
            raise StabilizationError(
                f"mixed multiplicity at {key} is not an integer ({value}); "
                "a stabilization window accepted pre-asymptotic values"
            )


def _box_lengths(flats, lo: int, hi: int, dim: int):
    """colength(prod I_i^{m_i}) for every m in the box [lo, hi]^r."""
    r = len(flats)
    out = {}

    def walk(axis, cur, prefix):
        for _ in range(lo):
            cur = backend.product_flat(cur, flats[axis], dim)
        for k in range(lo, hi + 1):
            if axis == r - 1:
                out[prefix + (k,)] = backend.colength_flat(cur, dim)
            else:
                walk(axis + 1, cur, prefix + (k,))
            if k < hi:
                cur = backend.product_flat(cur, flats[axis], dim)

    walk(0, _unit_flat(dim), ())
    return out


def _mixed_diff(table, base, orders):
    """Mixed forward difference of orders k_i applied at base."""
    total = 0
    for offsets in iproduct(*(range(k + 1) for k in orders)):
        sign = (-1) ** (sum(orders) - sum(offsets))
        weight = 1
        for k, off in zip(orders, offsets):
            weight *= comb(k, off)
        point = tuple(b + off for b, off in zip(base, offsets))
        total += sign * weight * table[point]
    return total


def mixed_table_oracle(ideals, window: StabilizationWindow | None = None,
                       cap: int = DEFAULT_CAP) -> MixedTable:
    """Mixed multiplicities as stabilized mixed finite differences.

    Tabulates F(m) = colength(prod I_i^{m_i}) on a box past the window
    start and reads entry(k_1,...,k_r) as the (k_1,...,k_r) mixed
    difference, requiring constancy at width consecutive diagonal shifts.
    Independent of the interpolation path by construction.
    """
    ideals = list(ideals)
    d = _check_inputs(ideals)
    r = len(ideals)
    if window is None:
        window = default_window(ideals)
    flats = [i._flat for i in ideals]
    t0 = window.t_start
    while True:
        table = _box_lengths(flats, t0, t0 + d + window.width - 1, ideals[0].dim)
        entries = {}
        stable = True
        for key in compositions(d, r):
            vals = [
                _mixed_diff(table, (t0 + s,) * r, key)
                for s in range(window.width)
            ]
            if any(v != vals[0] for v in vals):
                stable = False
                break
            entries[key] = Fraction(vals[0])
        if stable:
            _check_integral(entries)
            return MixedTable(d, r, entries)
        if 2 * t0 > cap:
            raise StabilizationError(
                f"mixed differences not constant on the box starting at t={t0}; "
                f"raise t_start or the cap (cap={cap})"
            )
        t0 *= 2
