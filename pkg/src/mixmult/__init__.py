"""Exact mixed multiplicities of monomial ideals and filtrations.

Everything is exact: integer staircase combinatorics in the kernels,
rationals (fractions.Fraction) everywhere above them.  See README.md for
the CLI, the scenario format, and the backend selection rules.
"""

__version__ = "0.1.0"

from .backend import BACKEND
from .errors import (
    MixmultError,
    MonotonicityError,
    NotMPrimaryError,
    RescaleSearchError,
    ScenarioError,
    StabilizationError,
    ToleranceNotMetError,
)
from .ideals import (
    MonomialIdeal,
    colength,
    colength_boxscan,
    ideal_sum,
    is_m_primary,
    is_subideal,
    maximal_ideal,
    minimalize,
    power,
    product,
    unit_ideal,
)
from .gridpoly import CoeffTable, Grid, evaluate, integer_grid, interpolate_on_grid, zero_test
from .multiplicity import (
    MixedTable,
    StabilizationWindow,
    compositions,
    mixed_table,
    mixed_table_oracle,
    multinomial,
    multiplicity,
)
from .filtrations import (
    Filtration,
    RescaledStage,
    SweepResult,
    check_graded_family,
    convergence_sweep,
    filtration_mixed,
    find_rescale,
    powers,
    scaled_powers,
    subpolynomial_sqrt,
    truncate,
    weighted,
)
from .verify import (
    InequalityReport,
    RandomStream,
    SuiteConfig,
    minkowski_report,
    random_ideal,
    suite,
    zero_propagation_check,
)
