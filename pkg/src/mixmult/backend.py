"""Kernel backend selection.

Tries the compiled extension first and falls back to the pure-Python
reference kernels.  The extension only covers ambient dimensions 1-3
(everything the acceptance surface uses); higher dimensions are always
routed to the reference implementation.  Set ``MIXMULT_PURE_PYTHON=1``
to force the fallback, e.g. for the backend-parity tests and benchmark.
"""

import os

from . import _kernels_py as _py

_fast = None
if os.environ.get("MIXMULT_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _fast  # type: ignore[attr-defined]
    except ImportError:
        _fast = None

BACKEND = _fast.BACKEND if _fast is not None else _py.BACKEND

_COMPILED_DIMS = (1, 2, 3)


def minimalize_flat(flat, dim):
    if _fast is not None and dim in _COMPILED_DIMS:
        return _fast.minimalize_flat(flat, dim)
    return _py.minimalize_flat(flat, dim)


def product_flat(a, b, dim):
    if _fast is not None and dim in _COMPILED_DIMS:
        return _fast.product_flat(a, b, dim)
    return _py.product_flat(a, b, dim)


def colength_flat(flat, dim):
    if _fast is not None and dim in _COMPILED_DIMS:
        return _fast.colength_flat(flat, dim)
    return _py.colength_flat(flat, dim)


def colength_boxscan_flat(flat, dim):
    if _fast is not None and dim in _COMPILED_DIMS:
        return _fast.colength_boxscan_flat(flat, dim)
    return _py.colength_boxscan_flat(flat, dim)
