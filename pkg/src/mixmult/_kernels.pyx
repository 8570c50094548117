# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled staircase kernels for ambient dimensions 1-3.

Same contract as mixmult._kernels_py (the reference implementation):
flat row-major int buffers in, canonical lex-sorted array('q') out.

Coordinates are packed into one 64-bit key per point (21 bits per axis,
3*21 = 63 bits) so sorting a key vector is a lexicographic sort of the
points.  Inputs are bounded by 2**20 per coordinate; pairwise sums then
fit their 21-bit fields without carrying.  Desk-scale exponents stay
orders of magnitude below the bound, and anything larger raises
OverflowError instead of overflowing silently.
"""

from cpython cimport array
import array

from libcpp.vector cimport vector
from libcpp.algorithm cimport sort as cpp_sort

BACKEND = "cython"

DEF COORD_BITS = 21
cdef long long COORD_MASK = (1LL << COORD_BITS) - 1
cdef long long INPUT_LIMIT = 1LL << 20
cdef long long INF = 1LL << 62

_TEMPLATE = array.array("q", [])


cdef array.array _to_array(vector[long long]& pts, int dim):
    # unpack packed keys (lex order preserved) into a flat result buffer
    cdef Py_ssize_t n = pts.size()
    cdef array.array out = array.clone(_TEMPLATE, n * dim, zero=False)
    cdef long long[::1] view = out
    cdef Py_ssize_t i
    cdef long long key
    for i in range(n):
        key = pts[i]
        if dim == 1:
            view[i] = key
        elif dim == 2:
            view[2 * i] = key >> COORD_BITS
            view[2 * i + 1] = key & COORD_MASK
        else:
            view[3 * i] = key >> (2 * COORD_BITS)
            view[3 * i + 1] = (key >> COORD_BITS) & COORD_MASK
            view[3 * i + 2] = key & COORD_MASK
    return out


cdef int _fill_packed(object flat, int dim, vector[long long]& out) except -1:
    cdef array.array buf
    if isinstance(flat, array.array):
        buf = <array.array> flat
    else:
        buf = array.array("q", flat)
    cdef long long[::1] view = buf
    cdef Py_ssize_t n = view.shape[0] // dim
    cdef Py_ssize_t i
    cdef long long a, b, c
    out.reserve(out.size() + n)
    for i in range(n):
        a = view[dim * i]
        if a < 0 or a >= INPUT_LIMIT:
            raise OverflowError("exponent out of range for compiled kernels")
        if dim == 1:
            out.push_back(a)
            continue
        b = view[dim * i + 1]
        if b < 0 or b >= INPUT_LIMIT:
            raise OverflowError("exponent out of range for compiled kernels")
        if dim == 2:
            out.push_back((a << COORD_BITS) | b)
            continue
        c = view[dim * i + 2]
        if c < 0 or c >= INPUT_LIMIT:
            raise OverflowError("exponent out of range for compiled kernels")
        out.push_back((a << (2 * COORD_BITS)) | (b << COORD_BITS) | c)
    return 0


cdef void _minimal_1d(vector[long long]& pts):
    cdef long long best = pts[0]
    cdef Py_ssize_t i
    for i in range(1, <Py_ssize_t> pts.size()):
        if pts[i] < best:
            best = pts[i]
    pts.clear()
    pts.push_back(best)


cdef void _minimal_2d(vector[long long]& pts):
    # ascending key order is (x, y) lex; a point survives iff its y drops
    # strictly below everything kept so far
    cpp_sort(pts.begin(), pts.end())
    cdef vector[long long] out
    cdef long long best_y = -1
    cdef long long key, y
    cdef Py_ssize_t i
    for i in range(<Py_ssize_t> pts.size()):
        key = pts[i]
        y = key & COORD_MASK
        if best_y < 0 or y < best_y:
            out.push_back(key)
            best_y = y
    pts.swap(out)


cdef Py_ssize_t _front_bisect_right(vector[long long]& fx, long long x):
    cdef Py_ssize_t lo = 0, hi = fx.size(), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if fx[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef bint _front_insert(vector[long long]& fx, vector[long long]& fy,
                        long long x, long long y):
    # returns False when (x, y) is dominated by the front; otherwise
    # inserts it, evicting the contiguous run of points it dominates
    cdef Py_ssize_t i = _front_bisect_right(fx, x)
    cdef Py_ssize_t j, k, n
    if i > 0 and fy[i - 1] <= y:
        return False
    j = i
    while j > 0 and fx[j - 1] == x:
        j -= 1
    k = j
    n = fx.size()
    while k < n and fy[k] >= y:
        k += 1
    if k == j:
        fx.insert(fx.begin() + j, x)
        fy.insert(fy.begin() + j, y)
    else:
        fx[j] = x
        fy[j] = y
        if k > j + 1:
            fx.erase(fx.begin() + j + 1, fx.begin() + k)
            fy.erase(fy.begin() + j + 1, fy.begin() + k)
    return True


cdef void _minimal_3d(vector[long long]& pts):
    # sweep in (z, x, y) order with a 2-d dominance front; accepted points
    # are never invalidated by later (larger-z) arrivals
    cdef Py_ssize_t n = pts.size()
    cdef vector[long long] order
    cdef vector[long long] out
    cdef vector[long long] fx, fy
    cdef long long key, x, y, z
    cdef Py_ssize_t i
    order.reserve(n)
    for i in range(n):
        key = pts[i]
        x = key >> (2 * COORD_BITS)
        y = (key >> COORD_BITS) & COORD_MASK
        z = key & COORD_MASK
        order.push_back((z << (2 * COORD_BITS)) | (x << COORD_BITS) | y)
    cpp_sort(order.begin(), order.end())
    for i in range(n):
        key = order[i]
        z = key >> (2 * COORD_BITS)
        x = (key >> COORD_BITS) & COORD_MASK
        y = key & COORD_MASK
        if _front_insert(fx, fy, x, y):
            out.push_back((x << (2 * COORD_BITS)) | (y << COORD_BITS) | z)
    cpp_sort(out.begin(), out.end())
    pts.swap(out)


cdef void _minimalize(vector[long long]& pts, int dim):
    if dim == 1:
        _minimal_1d(pts)
    elif dim == 2:
        _minimal_2d(pts)
    else:
        _minimal_3d(pts)


cdef int _check_dim(int dim) except -1:
    if dim < 1 or dim > 3:
        raise ValueError("compiled kernels cover dimensions 1-3")
    return 0


def minimalize_flat(flat, int dim):
    """Reduce a generator buffer to the unique minimal antichain."""
    _check_dim(dim)
    cdef vector[long long] pts
    _fill_packed(flat, dim, pts)
    _minimalize(pts, dim)
    return _to_array(pts, dim)


def product_flat(a, b, int dim):
    """Minimal generators of the product ideal: pairwise sums, reduced."""
    _check_dim(dim)
    cdef vector[long long] pa, pb, sums
    _fill_packed(a, dim, pa)
    _fill_packed(b, dim, pb)
    cdef Py_ssize_t na = pa.size(), nb = pb.size()
    cdef Py_ssize_t i, j
    cdef long long x
    sums.reserve(na * nb)
    # inputs are < 2**20 per axis, so packed addition cannot carry
    # between 21-bit fields
    for i in range(na):
        x = pa[i]
        for j in range(nb):
            sums.push_back(x + pb[j])
    _minimalize(sums, dim)
    return _to_array(sums, dim)


cdef long long _staircase_area(vector[long long]& fx, vector[long long]& fy):
    cdef long long total = 0
    cdef Py_ssize_t k
    for k in range(<Py_ssize_t> fx.size() - 1):
        total += (fx[k + 1] - fx[k]) * fy[k]
    return total


cdef long long _colength_2d(vector[long long]& pts):
    _minimal_2d(pts)
    cdef vector[long long] gx, gy
    cdef Py_ssize_t i
    cdef long long key
    for i in range(<Py_ssize_t> pts.size()):
        key = pts[i]
        gx.push_back(key >> COORD_BITS)
        gy.push_back(key & COORD_MASK)
    return _staircase_area(gx, gy)


def colength_flat(flat, int dim):
    """Lattice points outside the staircase, by slicing on the last axis.

    Requires a pure power on every axis; raises ValueError otherwise.
    """
    _check_dim(dim)
    cdef vector[long long] pts
    cdef vector[long long] order
    cdef vector[long long] fx, fy
    cdef Py_ssize_t n, i, idx
    cdef long long key, x, y, z
    cdef long long px = INF, py = INF, pz = INF
    cdef long long total, zcur, znext

    _fill_packed(flat, dim, pts)
    n = pts.size()

    if dim == 1:
        _minimal_1d(pts)
        return pts[0]

    if dim == 2:
        for i in range(n):
            key = pts[i]
            x = key >> COORD_BITS
            y = key & COORD_MASK
            if x == 0 and y == 0:
                return 0
            if y == 0 and x < px:
                px = x
            if x == 0 and y < py:
                py = y
        if px == INF or py == INF:
            raise ValueError("no pure power on some axis: colength is infinite")
        return _colength_2d(pts)

    # dim == 3: walk z breakpoints, keeping the 2-d front of projections
    for i in range(n):
        key = pts[i]
        x = key >> (2 * COORD_BITS)
        y = (key >> COORD_BITS) & COORD_MASK
        z = key & COORD_MASK
        if x == 0 and y == 0 and z == 0:
            return 0
        if y == 0 and z == 0 and x < px:
            px = x
        if x == 0 and z == 0 and y < py:
            py = y
        if x == 0 and y == 0 and z < pz:
            pz = z
    if px == INF or py == INF or pz == INF:
        raise ValueError("no pure power on some axis: colength is infinite")

    order.reserve(n)
    for i in range(n):
        key = pts[i]
        x = key >> (2 * COORD_BITS)
        y = (key >> COORD_BITS) & COORD_MASK
        z = key & COORD_MASK
        order.push_back((z << (2 * COORD_BITS)) | (x << COORD_BITS) | y)
    cpp_sort(order.begin(), order.end())

    total = 0
    zcur = 0
    idx = 0
    while zcur < pz:
        while idx < n and (order[idx] >> (2 * COORD_BITS)) <= zcur:
            key = order[idx]
            _front_insert(fx, fy, (key >> COORD_BITS) & COORD_MASK, key & COORD_MASK)
            idx += 1
        if idx < n and (order[idx] >> (2 * COORD_BITS)) < pz:
            znext = order[idx] >> (2 * COORD_BITS)
        else:
            znext = pz
        total += (znext - zcur) * _staircase_area(fx, fy)
        zcur = znext
    return total


def colength_boxscan_flat(flat, int dim):
    """Independent colength oracle: scan the pure-power bounding box."""
    _check_dim(dim)
    cdef array.array buf
    if isinstance(flat, array.array):
        buf = <array.array> flat
    else:
        buf = array.array("q", flat)
    cdef long long[::1] view = buf
    cdef Py_ssize_t n = view.shape[0] // dim, i
    cdef long long px = INF, py = INF, pz = INF
    cdef long long x, y, z
    cdef long long count = 0
    cdef long long ex, ey, ez
    cdef bint inside, unit = False
    for i in range(n):
        x = view[dim * i]
        y = view[dim * i + 1] if dim >= 2 else 0
        z = view[dim * i + 2] if dim >= 3 else 0
        if x == 0 and y == 0 and z == 0:
            unit = True
        if y == 0 and z == 0 and x < px:
            px = x
        if dim >= 2 and x == 0 and z == 0 and y < py:
            py = y
        if dim >= 3 and x == 0 and y == 0 and z < pz:
            pz = z
    if unit:
        return 0
    if px == INF or (dim >= 2 and py == INF) or (dim >= 3 and pz == INF):
        raise ValueError("no pure power on some axis: colength is infinite")
    if dim == 1:
        return px
    if dim == 2:
        for ex in range(px):
            for ey in range(py):
                inside = False
                for i in range(n):
                    if view[2 * i] <= ex and view[2 * i + 1] <= ey:
                        inside = True
                        break
                if not inside:
                    count += 1
        return count
    for ex in range(px):
        for ey in range(py):
            for ez in range(pz):
                inside = False
                for i in range(n):
                    if (view[3 * i] <= ex and view[3 * i + 1] <= ey
                            and view[3 * i + 2] <= ez):
                        inside = True
                        break
                if not inside:
                    count += 1
    return count
