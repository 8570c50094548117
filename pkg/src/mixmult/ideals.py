"""Exact arithmetic of monomial ideals in a fixed ambient polynomial ring.

An ideal lives in k[x_1,...,x_d] with the maximal ideal (x_1,...,x_d) and
is represented by the exponent vectors of its unique minimal monomial
generators (an antichain under componentwise <=).  The unit ideal is the
antichain {0-vector}; the zero ideal is not representable.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property

from . import backend
from . import _kernels_py as _ref
from .errors import NotMPrimaryError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, in normal form.

    Construct through :func:`minimalize` unless the generators are already
    known to be the sorted minimal antichain; __post_init__ rejects
    anything else.
    """

    dim: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        if not self.gens:
            raise ValueError("empty generator set (the zero ideal is not representable)")
        flat = array("q")
        for g in self.gens:
            if len(g) != self.dim:
                raise ValueError(f"generator {g} does not have length {self.dim}")
            flat.extend(g)  # rejects non-integer entries
        if flat and min(flat) < 0:
            raise ValueError("generators must have natural entries")
        if backend.minimalize_flat(flat, self.dim) != flat:
            raise ValueError(
                "generators are not a sorted minimal antichain; use minimalize()"
            )
        object.__setattr__(self, "_flat_cache", flat)

    @property
    def _flat(self) -> array:
        return self._flat_cache

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    def contains(self, e: Exponent) -> bool:
        """Membership of the monomial with exponent e."""
        if len(e) != self.dim:
            raise ValueError(f"exponent {e} does not have length {self.dim}")
        return any(all(g[i] <= e[i] for i in range(self.dim)) for g in self.gens)

    def __contains__(self, e: Exponent) -> bool:
        return self.contains(e)

    @cached_property
    def pure_bounds(self) -> tuple[int, ...]:
        """Minimal pure-power exponent per axis; raises if any is missing."""
        bounds = _ref._pure_bounds(list(self.gens), self.dim)
        if self.is_unit:
            return (0,) * self.dim
        for i, b in enumerate(bounds):
            if b is None:
                raise NotMPrimaryError(f"no pure power of axis {i}")
        return tuple(bounds)

    @property
    def is_m_primary(self) -> bool:
        try:
            self.pure_bounds
        except NotMPrimaryError:
            return False
        return True

    def max_pure_exponent(self) -> int:
        return max(self.pure_bounds)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, n: int) -> MonomialIdeal:
        return power(self, n)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __le__(self, other: MonomialIdeal) -> bool:
        return is_subideal(self, other)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens)
        return f"MonomialIdeal(dim={self.dim}, gens=[{gens}])"


def _from_flat(flat, dim: int) -> MonomialIdeal:
    it = iter(flat.tolist() if isinstance(flat, array) else list(flat))
    return MonomialIdeal(dim, tuple(zip(*[it] * dim)))


def minimalize(raw_gens, dim: int) -> MonomialIdeal:
    """Normal form: the unique antichain generating the same ideal."""
    raw = [tuple(int(c) for c in g) for g in raw_gens]
    if not raw:
        raise ValueError("empty generator set (the zero ideal is not representable)")
    for g in raw:
        if len(g) != dim:
            raise ValueError(f"generator {g} does not have length {dim}")
        if any(c < 0 for c in g):
            raise ValueError(f"generator {g} has a negative entry")
    flat = array("q")
    for g in raw:
        flat.extend(g)
    return _from_flat(backend.minimalize_flat(flat, dim), dim)


def unit_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ((0,) * dim,))


def maximal_ideal(dim: int) -> MonomialIdeal:
    """The irrelevant maximal ideal (x_1,...,x_d)."""
    gens = tuple(
        tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)
    )
    return MonomialIdeal(dim, tuple(sorted(gens)))


def _require_same_dim(a: MonomialIdeal, b: MonomialIdeal):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Product ideal, minimalized (generators are all pairwise sums)."""
    _require_same_dim(a, b)
    return _from_flat(backend.product_flat(a._flat, b._flat, a.dim), a.dim)


def power(a: MonomialIdeal, n: int) -> MonomialIdeal:
    """n-fold product; power(a, 0) is the unit ideal.

    Iterated products with intermediate minimalization keep generator
    sets small along the way.
    """
    if n < 0:
        raise ValueError("negative power")
    acc = unit_ideal(a.dim)._flat
    for _ in range(n):
        acc = backend.product_flat(acc, a._flat, a.dim)
    return _from_flat(acc, a.dim)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Sum of ideals: union of generator sets, minimalized."""
    _require_same_dim(a, b)
    flat = array("q", a._flat)
    flat.extend(b._flat)
    return _from_flat(backend.minimalize_flat(flat, a.dim), a.dim)


def is_subideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Whether a is contained in b (every generator of a lies in b)."""
    _require_same_dim(a, b)
    return all(b.contains(g) for g in a.gens)


def is_m_primary(a: MonomialIdeal) -> bool:
    return a.is_m_primary


def colength(a: MonomialIdeal) -> int:
    """Length of the quotient: lattice points outside the staircase."""
    if not a.is_m_primary:
        raise NotMPrimaryError("colength is infinite: ideal is not m-primary")
    return backend.colength_flat(a._flat, a.dim)


def colength_boxscan(a: MonomialIdeal) -> int:
    """Direct bounding-box scan; the independent oracle for colength()."""
    if not a.is_m_primary:
        raise NotMPrimaryError("colength is infinite: ideal is not m-primary")
    return backend.colength_boxscan_flat(a._flat, a.dim)
