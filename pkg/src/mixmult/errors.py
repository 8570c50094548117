"""Exception types shared across the package."""


class MixmultError(Exception):
    """Base class for domain errors raised by mixmult."""


class NotMPrimaryError(MixmultError):
    """An operation requiring finite colength got an ideal without a pure
    power on every axis."""


class StabilizationError(MixmultError):
    """Iterated differences of a length function did not become constant
    within the allowed window; retry with a larger start or cap."""


class RescaleSearchError(MixmultError):
    """No rescaling exponent up to the cap turned a truncated filtration
    into plain ideal powers over the verification horizon."""

    def __init__(self, message, best_f=None, first_failing_t=None):
        super().__init__(message)
        self.best_f = best_f
        self.first_failing_t = first_failing_t


class MonotonicityError(MixmultError):
    """A quantity that must be nonincreasing along a truncation schedule
    increased; indicates a pipeline bug, not bad input."""


class ToleranceNotMetError(MixmultError):
    """Final swept value did not fall below the requested tolerance; the
    schedule is too short for the target."""


class ScenarioError(MixmultError):
    """Scenario file is malformed or semantically invalid."""
