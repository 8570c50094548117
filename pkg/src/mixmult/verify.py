"""Machine checks of the Minkowski-type inequality and its consequences.

For a mixed table of m-primary inputs in dimension d, every composition
(k_1,...,k_r) must satisfy

    entry(k_1,...,k_r)^d  <=  prod_i pure_entry(i)^{k_i},

compared in this powered form so no roots (hence no irrational
arithmetic) ever appear.  The randomized suite draws reproducible ideal
tuples from a fully specified 64-bit congruential stream and checks the
inequality on each; a violation is a build-failing bug, not data.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import MonotonicityError, ToleranceNotMetError
from .filtrations import convergence_sweep
from .ideals import MonomialIdeal, minimalize
from .multiplicity import MixedTable, compositions, mixed_table, mixed_table_oracle

# Knuth's MMIX linear congruential constants; the stream below is the
# entire portability contract for golden files (see README).
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MODULUS = 1 << 64


class RandomStream:
    """Deterministic 64-bit congruential stream.

    state <- (state * LCG_MULTIPLIER + LCG_INCREMENT) mod 2^64, and
    below(n) returns (state >> 33) mod n from the freshly advanced state.
    """

    def __init__(self, seed: int):
        self.state = seed % LCG_MODULUS

    def below(self, n: int) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) % LCG_MODULUS
        return (self.state >> 33) % n


@dataclass(frozen=True)
class InequalityReport:
    """One powered Minkowski comparison: lhs = entry^d, rhs = prod pure^{k_i}."""

    composition: tuple
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool


def minkowski_report(table: MixedTable) -> list[InequalityReport]:
    """Compare entry^d against the pure-entry product for every composition."""
    pures = [table.pure_entry(i) for i in range(table.r)]
    reports = []
    for key in compositions(table.d, table.r):
        lhs = table.entries[key] ** table.d
        rhs = Fraction(1)
        for pure, k in zip(pures, key):
            rhs *= pure**k
        reports.append(
            InequalityReport(
                composition=key,
                lhs=lhs,
                rhs=rhs,
                holds=lhs <= rhs,
                equality=lhs == rhs,
            )
        )
    return reports


ZERO_PROPAGATION_NOTE = (
    "checks that truncated values decrease below tol along the schedule; "
    "the limit value itself is not computed"
)


@dataclass(frozen=True)
class ZeroPropagationReport:
    """Tracked entries (those weighting the vanishing slot) along a schedule."""

    j: int
    schedule: tuple
    tracked: tuple            # compositions with k_j > 0
    values: dict              # composition -> tuple of per-level values
    tol: Fraction
    minkowski_holds: bool     # inequality held at every level
    note: str = ZERO_PROPAGATION_NOTE


def zero_propagation_check(filtrations, j: int, schedule, tol) -> ZeroPropagationReport:
    """Entries weighting slot j must decrease along the schedule to < tol.

    Raises MonotonicityError on any increase (a pipeline bug) and
    ToleranceNotMetError when the final value is still >= tol (schedule
    too short).  The powered inequality is re-checked at every level.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    filtrations = list(filtrations)
    if not 0 <= j < len(filtrations):
        raise ValueError(f"index j={j} out of range")
    sweep = convergence_sweep(filtrations, schedule)
    tables = sweep.tables()
    tracked = tuple(
        key for key in compositions(tables[0].d, tables[0].r) if key[j] > 0
    )
    values = {
        key: tuple(table.entries[key] for table in tables) for key in tracked
    }
    mink_ok = all(
        report.holds for table in tables for report in minkowski_report(table)
    )
    if not mink_ok:
        raise MonotonicityError("powered inequality failed at a truncation level")
    for key, vals in values.items():
        for a, b in zip(vals, vals[1:]):
            if b > a:
                raise MonotonicityError(
                    f"entry {key} increased along the schedule: {a} -> {b}"
                )
    for key, vals in values.items():
        if vals[-1] >= tol:
            raise ToleranceNotMetError(
                f"entry {key} still at {vals[-1]} >= tol {tol} at level "
                f"{sweep.levels[-1][0]}; extend the schedule"
            )
    return ZeroPropagationReport(
        j=j,
        schedule=tuple(schedule),
        tracked=tracked,
        values=values,
        tol=tol,
        minkowski_holds=mink_ok,
    )


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters of the randomized inequality suite."""

    dim: int
    r: int
    count: int
    max_exponent: int
    seed: int

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError("suite dimension must be 2 or 3")
        if self.max_exponent < 1:
            raise ValueError("max_exponent must be >= 1")
        if self.r < 1 or self.count < 0:
            raise ValueError("need r >= 1 and count >= 0")


def random_ideal(cfg: SuiteConfig, stream: RandomStream) -> MonomialIdeal:
    """One m-primary draw: forced pure powers plus a few box generators.

    Consumes dim + 1 + (extras * dim) values from the stream regardless of
    outcomes, so draws stay aligned across platforms; all-zero extra
    generators are discarded (they would collapse to the unit ideal).
    """
    axes = [1 + stream.below(cfg.max_exponent) for _ in range(cfg.dim)]
    gens = [
        tuple(a if j == i else 0 for j in range(cfg.dim))
        for i, a in enumerate(axes)
    ]
    extras = stream.below(cfg.dim + 1)
    for _ in range(extras):
        g = tuple(stream.below(axes[j] + 1) for j in range(cfg.dim))
        if any(g):
            gens.append(g)
    return minimalize(gens, cfg.dim)


@dataclass(frozen=True)
class SuiteInstance:
    index: int
    ideals: tuple
    table: MixedTable
    reports: tuple
    holds: bool
    equality: bool  # every composition met with equality


@dataclass(frozen=True)
class SuiteReport:
    config: SuiteConfig
    instances: tuple
    passed: bool
    equality_count: int


def suite(cfg: SuiteConfig, paranoid: bool = False, force_equal: bool = False,
          jobs: int = 1) -> SuiteReport:
    """Draw cfg.count tuples, check the inequality on each, aggregate.

    Draws happen up front on the single stream; instance evaluation is
    pure and may run on a thread pool, with results assembled in draw
    order regardless of completion order.
    """
    stream = RandomStream(cfg.seed)
    drawn = []
    for index in range(cfg.count):
        if force_equal:
            ideal = random_ideal(cfg, stream)
            drawn.append((index, (ideal,) * cfg.r))
        else:
            drawn.append(
                (index, tuple(random_ideal(cfg, stream) for _ in range(cfg.r)))
            )

    def evaluate(item):
        index, ideals = item
        table = mixed_table(list(ideals))
        if paranoid:
            oracle = mixed_table_oracle(list(ideals))
            if table != oracle:
                raise AssertionError(
                    f"instance {index}: grid and difference paths disagree"
                )
        reports = tuple(minkowski_report(table))
        return SuiteInstance(
            index=index,
            ideals=ideals,
            table=table,
            reports=reports,
            holds=all(rep.holds for rep in reports),
            equality=all(rep.equality for rep in reports),
        )

    if jobs > 1 and len(drawn) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            instances = tuple(pool.map(evaluate, drawn))
    else:
        instances = tuple(evaluate(item) for item in drawn)
    return SuiteReport(
        config=cfg,
        instances=instances,
        passed=all(inst.holds for inst in instances),
        equality_count=sum(1 for inst in instances if inst.equality),
    )
