"""Accumulation kernels with import-time backend selection.

The compiled Cython extension is used when available; setting the
environment variable ``RIESZBOUNDS_PURE_PYTHON=1`` forces the pure-Python
fallback.  ``prefix_sums`` is always the exact Python implementation because
downstream code relies on its correctly rounded prefixes.
"""

import os

import numpy as np

from . import pykernels
from .pykernels import prefix_sums

__all__ = ["BACKEND", "riesz_sum", "power_sum", "prefix_sums", "as_eigenarray"]

if os.environ.get("RIESZBOUNDS_PURE_PYTHON", "") not in ("", "0"):
    _impl = pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = pykernels

BACKEND = _impl.BACKEND
riesz_sum = _impl.riesz_sum
power_sum = _impl.power_sum


def as_eigenarray(values):
    """Contiguous float64 view/copy suitable for either backend."""
    return np.ascontiguousarray(values, dtype=np.float64)


def _ckernels_or_none():
    """The compiled kernel module if the extension was built, else None."""
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels
