"""Filtrations of monomial ideals: graded families, truncation, rescaling.

A filtration is a rule t -> I_t with I_0 the unit ideal, every I_t
(t >= 1) m-primary, I_{t+1} contained in I_t, and I_s I_t contained in
I_{s+t}.  Non-Noetherian behavior enters through the square-root power
family and through rational-weight valuation families.  The a-th
truncation regenerates everything from the first a members and is
Noetherian, so some Veronese step f turns it into plain powers of a
single ideal; mixed multiplicities of the truncation are those of that
ideal scaled by 1/f^d.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, isqrt, lcm

from . import backend
from .errors import RescaleSearchError
from .ideals import (
    MonomialIdeal,
    _from_flat,
    is_subideal,
    minimalize,
    power,
    product,
    unit_ideal,
)
from .multiplicity import MixedTable, mixed_table, mixed_table_oracle


class Filtration:
    """Base class: memoized t -> MonomialIdeal with the graded-family law.

    The memo is write-once per key and all writers compute identical
    values, so concurrent lookups are safe.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._memo: dict[int, MonomialIdeal] = {}

    def ideal_at(self, t: int) -> MonomialIdeal:
        if t < 0:
            raise ValueError("filtration index must be >= 0")
        got = self._memo.get(t)
        if got is None:
            got = unit_ideal(self.dim) if t == 0 else self._compute(t)
            self._memo.setdefault(t, got)
        return got

    def _compute(self, t: int) -> MonomialIdeal:
        raise NotImplementedError


class PowersFiltration(Filtration):
    """I_t = base^t, the classical ideal-adic family."""

    kind = "powers"

    def __init__(self, base: MonomialIdeal):
        super().__init__(base.dim)
        self.base = base

    def _compute(self, t):
        return power(self.base, t)


class ScaledPowersFiltration(Filtration):
    """I_t = base^ceil(t * num/den), a Veronese-rescaled power family."""

    kind = "scaled_powers"

    def __init__(self, base: MonomialIdeal, num: int, den: int):
        if num < 1 or den < 1:
            raise ValueError("scaling must be a positive rational")
        super().__init__(base.dim)
        self.base = base
        self.num = num
        self.den = den

    def _compute(self, t):
        return power(self.base, -((-t * self.num) // self.den))


class WeightedFiltration(Filtration):
    """I_t generated by all monomials of weighted degree >= t.

    Weights are positive rationals; the minimal generators lie in the box
    bounded by the per-axis pure powers ceil(t / w_i).
    """

    kind = "weighted"

    def __init__(self, weights):
        weights = tuple(Fraction(w) for w in weights)
        if not weights or any(w <= 0 for w in weights):
            raise ValueError("weights must be positive rationals")
        super().__init__(len(weights))
        self.weights = weights

    def _compute(self, t):
        from itertools import product as iproduct

        bounds = [int(ceil(Fraction(t) / w)) for w in self.weights]
        gens = [
            e
            for e in iproduct(*(range(b + 1) for b in bounds))
            if sum(w * c for w, c in zip(self.weights, e)) >= t
        ]
        return minimalize(gens, self.dim)


class SqrtPowersFiltration(Filtration):
    """I_t = base^ceil(sqrt(t)): subpolynomial growth, not Noetherian."""

    kind = "subpolynomial_sqrt"

    def __init__(self, base: MonomialIdeal):
        super().__init__(base.dim)
        self.base = base

    def _compute(self, t):
        return power(self.base, 1 + isqrt(t - 1))


class TruncatedFiltration(Filtration):
    """The a-th truncation: first a members kept, later ones regenerated.

    For t > a the member is the sum over partitions of t into parts <= a
    of the corresponding products; computed by first-part decomposition
    I_{a,t} = sum_{i <= min(a, t-1)} F(i) * I_{a,t-i}, which generates the
    same ideal as the symmetric-split recursion (see the tests) at a
    fraction of the product count.
    """

    kind = "truncation"

    def __init__(self, parent: Filtration, level: int):
        if level < 1:
            raise ValueError("truncation level must be >= 1")
        super().__init__(parent.dim)
        self.parent = parent
        self.level = level

    def _compute(self, t):
        if t <= self.level:
            return self.parent.ideal_at(t)
        acc = array("q")
        for i in range(1, min(self.level, t - 1) + 1):
            acc.extend(
                backend.product_flat(
                    self.ideal_at(i)._flat, self.ideal_at(t - i)._flat, self.dim
                )
            )
        return _from_flat(backend.minimalize_flat(acc, self.dim), self.dim)


def powers(base: MonomialIdeal) -> PowersFiltration:
    return PowersFiltration(base)


def scaled_powers(base: MonomialIdeal, num: int, den: int) -> ScaledPowersFiltration:
    return ScaledPowersFiltration(base, num, den)


def weighted(weights) -> WeightedFiltration:
    return WeightedFiltration(weights)


def subpolynomial_sqrt(base: MonomialIdeal) -> SqrtPowersFiltration:
    return SqrtPowersFiltration(base)


def truncate(filtration: Filtration, a: int) -> TruncatedFiltration:
    """The a-th truncated filtration (a >= 1)."""
    return TruncatedFiltration(filtration, a)


def check_graded_family(filtration: Filtration, horizon: int):
    """Validate the graded-family law and member invariants up to horizon.

    Raises ValueError at the first violation; a passing run certifies
    I_0 = R, m-primariness, descending members, and I_s I_t <= I_{s+t}
    for 1 <= s, t <= horizon.
    """
    if not filtration.ideal_at(0).is_unit:
        raise ValueError("filtration member at 0 is not the unit ideal")
    for t in range(1, horizon + 1):
        if not filtration.ideal_at(t).is_m_primary:
            raise ValueError(f"filtration member at {t} is not m-primary")
    for t in range(1, horizon):
        if not is_subideal(filtration.ideal_at(t + 1), filtration.ideal_at(t)):
            raise ValueError(f"filtration member at {t + 1} is not inside member {t}")
    for s in range(1, horizon + 1):
        for t in range(s, horizon + 1):
            lhs = product(filtration.ideal_at(s), filtration.ideal_at(t))
            if not is_subideal(lhs, filtration.ideal_at(s + t)):
                raise ValueError(f"graded-family law fails at ({s}, {t})")


@dataclass(frozen=True)
class RescaledStage:
    """One truncation level turned into plain ideal powers.

    J holds the ideals I_a(i)_f; the identity I_a(i)_{f t} = J_i^t was
    checked for 1 <= t <= verified_horizon (an effective bound for the
    Veronese step is not available, so the stage records exactly what was
    verified).
    """

    a: int
    f: int
    J: tuple[MonomialIdeal, ...]
    verified_horizon: int


def default_horizon(a: int) -> int:
    return max(2 * a, 8)


def find_rescale(truncations, a: int, horizon: int | None = None,
                 f_cap: int | None = None) -> RescaledStage:
    """Least f >= 1 with member(f*t) = member(f)^t for all filtrations.

    Checks every 1 <= t <= horizon for each filtration; a single common f
    serves all of them.  Raises RescaleSearchError (carrying the best
    candidate and its first failing t) if nothing passes up to f_cap.
    """
    truncations = list(truncations)
    if horizon is None:
        horizon = default_horizon(a)
    if horizon < 2:
        raise ValueError("horizon must be >= 2")
    if f_cap is None:
        f_cap = 2 * lcm(*range(1, a + 1))
    for flt in truncations:
        if not isinstance(flt, TruncatedFiltration) or flt.level != a:
            raise ValueError("find_rescale expects truncations at the given level")

    best_f, best_t = None, 0
    for f in range(1, f_cap + 1):
        bases = [flt.ideal_at(f) for flt in truncations]
        failed_at = None
        for t in range(2, horizon + 1):
            if any(
                flt.ideal_at(f * t) != power(base, t)
                for flt, base in zip(truncations, bases)
            ):
                failed_at = t
                break
        if failed_at is None:
            return RescaledStage(a=a, f=f, J=tuple(bases), verified_horizon=horizon)
        if failed_at > best_t:
            best_f, best_t = f, failed_at
    raise RescaleSearchError(
        f"no rescaling exponent f <= {f_cap} passes the horizon-{horizon} check "
        f"(best candidate f={best_f} first fails at t={best_t})",
        best_f=best_f,
        first_failing_t=best_t,
    )


def filtration_mixed(filtrations, a: int, horizon: int | None = None,
                     paranoid: bool = False) -> MixedTable:
    """Mixed multiplicities of the a-th truncations, exactly.

    Truncates, finds the common Veronese step f, computes the ideal table
    of the rescaled members, and divides by f^d.
    """
    filtrations = list(filtrations)
    if not filtrations:
        raise ValueError("need at least one filtration")
    dims = {flt.dim for flt in filtrations}
    if len(dims) != 1:
        raise ValueError("filtrations live in different ambient dimensions")
    d = dims.pop()
    stage = find_rescale([truncate(flt, a) for flt in filtrations], a, horizon)
    table = mixed_table(stage.J)
    if paranoid and table != mixed_table_oracle(stage.J):
        raise AssertionError("grid and difference paths disagree")  # pragma: no cover
    return table.scaled(Fraction(1, stage.f**d))


@dataclass(frozen=True)
class SweepResult:
    """Truncation levels, their tables, and consecutive per-entry deltas."""

    levels: tuple
    deltas: tuple = field(default=())

    def tables(self):
        return [table for _, table in self.levels]


def convergence_sweep(filtrations, schedule, horizon: int | None = None,
                      paranoid: bool = False) -> SweepResult:
    """filtration_mixed at each level of an increasing schedule."""
    schedule = list(schedule)
    if not schedule:
        raise ValueError("empty schedule")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    levels = [
        (a, filtration_mixed(filtrations, a, horizon, paranoid)) for a in schedule
    ]
    deltas = []
    for (_, prev), (_, cur) in zip(levels, levels[1:]):
        deltas.append({k: cur.entries[k] - prev.entries[k] for k in prev.entries})
    return SweepResult(levels=tuple(levels), deltas=tuple(deltas))
