"""Pure-Python subset-search kernel.

Finds the smallest column subset of an integer matrix under which all rows
are pairwise distinct.  Columns are scanned in increasing cardinality and,
within a cardinality, in lexicographic order, so the first hit is the
canonical (lexicographically smallest) witness.

Each column is reduced to a bitmask over row pairs ("which pairs does this
column separate"); a subset works exactly when the OR of its masks covers
every pair.  Python's big ints make the mask width a non-issue.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

import numpy as np

IMPLEMENTATION = "python"


def column_pair_masks(mat: np.ndarray) -> tuple[list[int], int]:
    """Per-column mask of separated row pairs, and the all-pairs mask."""
    n, m = mat.shape
    iu, iv = np.triu_indices(n, 1)
    npairs = len(iu)
    if npairs == 0:
        return [0] * m, 0
    differs = mat[iu, :] != mat[iv, :]  # (npairs, m) bool
    masks = []
    for c in range(m):
        packed = np.packbits(differs[:, c], bitorder="little")
        masks.append(int.from_bytes(packed.tobytes(), "little"))
    full = (1 << npairs) - 1
    return masks, full


def min_distinguishing_subset(mat: np.ndarray, max_size: int
                              ) -> Optional[tuple[int, tuple[int, ...]]]:
    n, m = mat.shape
    masks, full = column_pair_masks(mat)
    acc_all = 0
    for msk in masks:
        acc_all |= msk
    if acc_all != full:
        return None  # some row pair is equal in every column
    for s in range(1, min(max_size, m) + 1):
        for combo in combinations(range(m), s):
            acc = 0
            for c in combo:
                acc |= masks[c]
            if acc == full:
                return s, combo
    return None
