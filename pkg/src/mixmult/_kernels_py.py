"""Pure-Python staircase kernels.

Reference implementation of the combinatorial primitives everything else
sits on: antichain reduction (minimal generators), staircase products,
and lattice-point counting for colengths.  The compiled module
``mixmult._kernels`` provides the same functions for ambient dimensions
1-3; this module covers every dimension and is the fallback when the
extension is unavailable (see ``mixmult.backend``).

Points travel as flat row-major integer buffers: a generator set with n
vectors in dimension d is a sequence of n*d nonnegative ints.  All
functions return ``array('q')`` buffers sorted in ascending lexicographic
order, so results are canonical and directly comparable.
"""

from array import array
from bisect import bisect_left, bisect_right

BACKEND = "python"


def _points(flat, dim):
    return [tuple(flat[i : i + dim]) for i in range(0, len(flat), dim)]


def _flat(points):
    out = array("q")
    for p in points:
        out.extend(p)
    return out


def _minimal_points(pts, dim):
    """Minimal elements of a finite set under componentwise <=, sorted."""
    if dim == 1:
        return [(min(p[0] for p in pts),)]
    if dim == 2:
        out = []
        best = None
        for x, y in sorted(set(pts)):
            if best is None or y < best:
                out.append((x, y))
                best = y
        return out
    if dim == 3:
        return _minimal_points_3d(pts)
    return _minimal_points_nd(pts, dim)


def _minimal_points_3d(pts):
    # Sweep in increasing z; a point is dominated iff its (x, y) is
    # dominated by the 2-d front of already-accepted points (all of which
    # have z <= current z).  Accepted points are never invalidated later.
    out = []
    fx = []  # front x's, ascending
    fy = []  # matching y's, strictly decreasing
    for x, y, z in sorted(set(pts), key=lambda p: (p[2], p[0], p[1])):
        i = bisect_right(fx, x)
        if i and fy[i - 1] <= y:
            continue
        out.append((x, y, z))
        j = bisect_left(fx, x)
        k = j
        while k < len(fx) and fy[k] >= y:
            k += 1
        fx[j:k] = [x]
        fy[j:k] = [y]
    out.sort()
    return out


def _minimal_points_nd(pts, dim):
    # Dominators have strictly smaller coordinate sum (ties are equal
    # points), so sorting by sum lets a single forward scan suffice.
    out = []
    for p in sorted(set(pts), key=lambda q: (sum(q), q)):
        if not any(all(q[i] <= p[i] for i in range(dim)) for q in out):
            out.append(p)
    out.sort()
    return out


def minimalize_flat(flat, dim):
    """Reduce a generator buffer to the unique minimal antichain."""
    return _flat(_minimal_points(_points(flat, dim), dim))


def product_flat(a, b, dim):
    """Minimal generators of the product ideal: pairwise sums, reduced."""
    pa = _points(a, dim)
    pb = _points(b, dim)
    sums = [tuple(x + y for x, y in zip(p, q)) for p in pa for q in pb]
    return _flat(_minimal_points(sums, dim))


def _pure_bounds(pts, dim):
    """Minimal pure-power exponent per axis, or None where absent."""
    bounds = [None] * dim
    for p in pts:
        support = [i for i in range(dim) if p[i]]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or p[i] < bounds[i]:
                bounds[i] = p[i]
    return bounds


def _staircase_area_2d(mins):
    # mins: 2-d antichain sorted by x ascending (y strictly descending),
    # starting at x = 0 and ending at y = 0.  Counts lattice points under
    # the staircase.
    total = 0
    for (x0, y0), (x1, _) in zip(mins, mins[1:]):
        total += (x1 - x0) * y0
    return total


def _colength_2d(pts):
    return _staircase_area_2d(_minimal_points(pts, 2))


def _colength_3d(pts):
    # Slice along z.  The slice ideal only changes at z values carried by
    # generators, so accumulate projected generators into a 2-d front and
    # charge each constant interval at its current staircase area.
    pz = min(p[2] for p in pts if p[0] == 0 and p[1] == 0)
    order = sorted(pts, key=lambda p: p[2])
    fx = []
    fy = []

    def insert(x, y):
        i = bisect_right(fx, x)
        if i and fy[i - 1] <= y:
            return
        j = bisect_left(fx, x)
        k = j
        while k < len(fx) and fy[k] >= y:
            k += 1
        fx[j:k] = [x]
        fy[j:k] = [y]

    total = 0
    idx = 0
    z = 0
    n = len(order)
    while z < pz:
        while idx < n and order[idx][2] <= z:
            insert(order[idx][0], order[idx][1])
            idx += 1
        z_next = order[idx][2] if idx < n else pz
        z_next = min(z_next, pz)
        area = _staircase_area_2d(list(zip(fx, fy)))
        total += (z_next - z) * area
        z = z_next
    return total


def _colength_rec(pts, dim):
    if any(not any(p) for p in pts):
        return 0  # unit ideal
    if dim == 1:
        return min(p[0] for p in pts)
    if dim == 2:
        return _colength_2d(pts)
    if dim == 3:
        return _colength_3d(pts)
    # Generic slice-on-last-axis recursion; only exercised for dim >= 4.
    plast = min(p[-1] for p in pts if not any(p[:-1]))
    order = sorted(pts, key=lambda p: p[-1])
    total = 0
    idx = 0
    z = 0
    acc = []
    n = len(order)
    while z < plast:
        while idx < n and order[idx][-1] <= z:
            acc.append(order[idx][:-1])
            idx += 1
        z_next = min(order[idx][-1] if idx < n else plast, plast)
        sliced = _minimal_points(acc, dim - 1)
        total += (z_next - z) * _colength_rec(sliced, dim - 1)
        z = z_next
    return total


def colength_flat(flat, dim):
    """Lattice points outside the staircase, by slicing on the last axis.

    Requires a pure power on every axis (finite colength); raises
    ValueError otherwise.
    """
    pts = _points(flat, dim)
    bounds = _pure_bounds(pts, dim)
    if any(not any(p) for p in pts):
        return 0
    for i, b in enumerate(bounds):
        if b is None:
            raise ValueError(f"no pure power on axis {i}: colength is infinite")
    return _colength_rec(pts, dim)


def colength_boxscan_flat(flat, dim):
    """Independent colength oracle: scan the pure-power bounding box."""
    pts = _points(flat, dim)
    if any(not any(p) for p in pts):
        return 0
    bounds = _pure_bounds(pts, dim)
    for i, b in enumerate(bounds):
        if b is None:
            raise ValueError(f"no pure power on axis {i}: colength is infinite")
    from itertools import product as iproduct

    count = 0
    for e in iproduct(*(range(b) for b in bounds)):
        if not any(all(g[i] <= e[i] for i in range(dim)) for g in pts):
            count += 1
    return count
