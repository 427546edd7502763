"""Kernel selection: the compiled extension when built, else pure Python.

Both implementations share one contract (see ``_kernel_py``), and the test
suite runs them against each other.  Set TRUNCDIM_NO_EXT=1 before import to
force the pure-Python kernel.
"""

from __future__ import annotations

import os
from typing import Optional

import numpy as np

from . import _kernel_py

if os.environ.get("TRUNCDIM_NO_EXT"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION


def min_distinguishing_subset(mat, max_size: Optional[int] = None
                              ) -> Optional[tuple[int, tuple[int, ...]]]:
    """Smallest (and lexicographically first) column subset making all rows distinct.

    Returns (size, columns) or None when no subset of at most max_size columns
    works.  Entry values only matter up to equality, so any integer matrix goes.
    """
    arr = np.ascontiguousarray(mat, dtype=np.int32)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    n, m = arr.shape
    if m < 1:
        raise ValueError("matrix needs at least one column")
    if max_size is None or max_size > m:
        max_size = m
    if max_size < 1:
        return None
    if n <= 1:
        return 1, (0,)  # nothing to separate; any single column does
    return _impl.min_distinguishing_subset(arr, int(max_size))
