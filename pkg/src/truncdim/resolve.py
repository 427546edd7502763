"""Truncated distances, resolving-set verification, exact brute-force search,
and the greedy information-content heuristic.

The k-truncated distance between vertices caps the geodesic distance at k+1,
so landmarks only "see" their k-neighborhood.  A vertex set R resolves a graph
under this metric when the per-vertex vectors of truncated distances to R are
pairwise distinct; beta_k is the size of a smallest such set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import kernel
from .graph import DistanceMatrix

# Returned by beta_k_matrix when no column subset can separate the rows.
INFINITE = math.inf

MatrixLike = Union[DistanceMatrix, np.ndarray, Sequence[Sequence[int]]]


def _as_array(D: MatrixLike) -> np.ndarray:
    if isinstance(D, DistanceMatrix):
        return D.dist
    return np.asarray(D)


def _check_k(k: int) -> int:
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"truncation level k must be a nonnegative integer, got {k!r}")
    return int(k)


def truncated_distance(d: int, k: int) -> int:
    """min(d, k+1): distances beyond k collapse to the single value k+1."""
    k = _check_k(k)
    if d < 0:
        raise ValueError(f"distance must be nonnegative, got {d}")
    return min(int(d), k + 1)


def truncated_matrix(D: MatrixLike, k: int) -> np.ndarray:
    """Entrywise truncation of a distance (or general) matrix at k+1."""
    k = _check_k(k)
    return np.minimum(_as_array(D), k + 1)


def truncated_vector(D: MatrixLike, v: int, landmarks: Sequence[int], k: int
                     ) -> tuple[int, ...]:
    """The vector of truncated distances from v to an ordered landmark list."""
    k = _check_k(k)
    if len(landmarks) == 0:
        raise ValueError("landmark list must be nonempty")
    mat = _as_array(D)
    cap = k + 1
    row = mat[v]
    return tuple(min(int(row[r]), cap) for r in landmarks)


@dataclass(frozen=True)
class ResolvingCertificate:
    """Outcome of a resolving-set check, with a colliding pair when it fails."""

    landmarks: tuple[int, ...]
    k: int
    resolving: bool
    witness_pair: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.resolving


def is_truncated_resolving(D: MatrixLike, R: Sequence[int], k: int
                           ) -> ResolvingCertificate:
    """Check whether R is a k-truncated resolving set; on failure report one
    colliding pair (the first in vertex order)."""
    k = _check_k(k)
    landmarks = tuple(sorted(set(int(r) for r in R)))
    if not landmarks:
        raise ValueError("resolving sets are nonempty by definition")
    mat = _as_array(D)
    n = mat.shape[0]
    cap = k + 1
    seen: dict[tuple[int, ...], int] = {}
    for v in range(n):
        row = mat[v]
        vec = tuple(min(int(row[r]), cap) for r in landmarks)
        if vec in seen:
            return ResolvingCertificate(landmarks, k, False, (seen[vec], v))
        seen[vec] = v
    return ResolvingCertificate(landmarks, k, True, None)


def beta_k_exact(D: MatrixLike, k: int) -> tuple[int, tuple[int, ...]]:
    """Exact truncated metric dimension by subset search over the distance matrix.

    Scans cardinalities 1, 2, ... and subsets in lexicographic order, so the
    returned witness is canonical.  k is capped at the diameter internally;
    larger values cannot change any truncated distance.
    """
    k = _check_k(k)
    mat = _as_array(D)
    n = mat.shape[0]
    if n == 0:
        raise ValueError("empty distance matrix")
    if n == 1:
        return 1, (0,)
    k_eff = min(k, int(mat.max()))
    trunc = np.minimum(mat, k_eff + 1)
    found = kernel.min_distinguishing_subset(trunc, max_size=n)
    if found is None:  # unreachable for a genuine distance matrix
        raise ValueError("matrix has duplicate rows; not a distance matrix of a graph")
    return found


def beta_k_matrix(M: MatrixLike, k: int) -> Union[int, float]:
    """Truncated metric dimension of a general real matrix (columns as landmarks).

    Returns INFINITE (math.inf) when no column subset separates the rows,
    which covers the degenerate all-rows-equal case.
    """
    k = _check_k(k)
    mat = np.asarray(_as_array(M), dtype=float)
    if mat.ndim != 2 or mat.shape[1] < 1:
        raise ValueError("expected a matrix with at least one column")
    if not np.all(np.isfinite(mat)):
        raise ValueError("matrix entries must be finite")
    trunc = np.minimum(mat, k + 1)
    # Only within-column equality matters; rank-encode each column so the
    # integer kernel applies to real entries.
    codes = np.empty(trunc.shape, dtype=np.int32)
    for c in range(trunc.shape[1]):
        _, inv = np.unique(trunc[:, c], return_inverse=True)
        codes[:, c] = inv
    found = kernel.min_distinguishing_subset(codes, max_size=trunc.shape[1])
    if found is None:
        return INFINITE
    return found[0]


def beta_0(D: MatrixLike) -> int:
    """At k=0 only the landmark itself is visible, so beta_0 = n-1 outright."""
    n = _as_array(D).shape[0]
    if n < 2:
        raise ValueError("beta_0 needs at least two vertices")
    return n - 1


def _partition_entropy(sizes: Sequence[int], n: int) -> float:
    # Summed over sorted sizes so equal partitions give bit-identical floats.
    h = 0.0
    for s in sorted(sizes):
        p = s / n
        h -= p * math.log(p)
    return h


def ich_heuristic(D: MatrixLike, k: int) -> tuple[int, ...]:
    """Greedy landmark selection in the style of the information content heuristic.

    Repeatedly adds the vertex whose truncated-distance column maximizes the
    entropy of the induced partition of vertices into indistinguishable
    classes (ties break to the lowest id), stopping once the partition is
    discrete.  The result is verified resolving before it is returned.
    """
    k = _check_k(k)
    mat = _as_array(D)
    n = mat.shape[0]
    if n < 2:
        raise ValueError("heuristic needs at least two vertices")
    k_eff = min(k, int(mat.max()))
    trunc = np.minimum(mat, k_eff + 1)
    cols = [tuple(int(x) for x in trunc[:, c]) for c in range(n)]

    block_of = [0] * n
    num_blocks = 1
    chosen: list[int] = []
    while num_blocks < n:
        best_c = -1
        best_h = -1.0
        best_blocks = num_blocks
        best_assign: list[int] = block_of
        for c in range(n):
            if c in chosen:
                continue
            refined: dict[tuple[int, int], int] = {}
            assign = [0] * n
            for v in range(n):
                key = (block_of[v], cols[c][v])
                b = refined.get(key)
                if b is None:
                    b = len(refined)
                    refined[key] = b
                assign[v] = b
            sizes: dict[int, int] = {}
            for b in assign:
                sizes[b] = sizes.get(b, 0) + 1
            h = _partition_entropy(list(sizes.values()), n)
            if h > best_h:
                best_h = h
                best_c = c
                best_blocks = len(refined)
                best_assign = assign
        if best_c < 0 or best_blocks == num_blocks:
            raise RuntimeError(
                "greedy heuristic stalled with a non-discrete partition; "
                "the matrix is not resolvable at this truncation")
        chosen.append(best_c)
        block_of = best_assign
        num_blocks = best_blocks

    result = tuple(sorted(chosen))
    if not is_truncated_resolving(mat, result, k):
        raise RuntimeError("heuristic produced a non-resolving set (internal bug)")
    return result
