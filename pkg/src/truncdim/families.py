"""Generators for named graph families, the extremal constructions, and tree
generation via Pruefer sequences.

Construction vertex ordering is canonical (landmarks first, then pendant
paths, then connector paths) so that recorded landmark hints stay stable
across runs.
"""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .formulas import beta_k_path
from .graph import Graph, all_pairs_distances
from .resolve import is_truncated_resolving


class ConstructionWarning(UserWarning):
    """A construction disagrees with its companion formula; surfaced, not fatal."""


@dataclass(frozen=True)
class LabeledConstruction:
    """A generated graph with optional canonical landmarks and a predicted dimension."""

    graph: Graph
    landmark_hint: Optional[tuple[int, ...]] = None
    predicted_beta_k: Optional[int] = None
    k: Optional[int] = None
    note: str = ""
    junction: Optional[int] = None


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle order must be >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete-graph order must be >= 1, got {n}")
    return Graph(n, list(itertools.combinations(range(n), 2)))


def edgeless(n: int) -> Graph:
    """The complement of the complete graph: n vertices, no edges."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return Graph(n, [])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise ValueError(f"both part sizes must be >= 1, got ({s}, {t})")
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 2:
        raise ValueError(f"star order must be >= 2, got {n}")
    return complete_bipartite(1, n - 1)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with h's vertices relabeled by offset g.n."""
    off = g.n
    edges = g.edges() + [(u + off, v + off) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    base = disjoint_union(g, h)
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph(base.n, base.edges() + cross)


def u_graph(n: int, delta: int) -> LabeledConstruction:
    """A path of order delta sharing one endpoint with a clique of order
    n-delta+1: n vertices, diameter exactly delta.

    Path positions are 0..delta-1 (junction at delta-1), clique fills the rest.
    """
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    if n <= delta:
        raise ValueError(f"need n > delta, got n={n}, delta={delta}")
    junction = delta - 1
    edges = [(i, i + 1) for i in range(delta - 1)]
    clique = [junction] + list(range(delta, n))
    edges += [(u, v) for u, v in itertools.combinations(clique, 2)]
    return LabeledConstruction(
        graph=Graph(n, edges),
        junction=junction,
        note=f"clique of order {n - delta + 1} sharing vertex {junction} "
             f"with a path of order {delta}",
    )


def beta_k_u_graph(n: int, delta: int, k: int) -> int:
    """Predicted dimension of u_graph(n, delta): all but one clique vertex,
    plus whatever the leftover path stub still needs.

    When delta = n-1 the "clique" is a single edge and the whole construction
    collapses to the path on n vertices, so the path value applies; the
    piecewise clique formula presumes a clique of order at least 3.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if delta < 1 or n <= delta:
        raise ValueError(f"need n > delta >= 1, got n={n}, delta={delta}")
    if delta == n - 1:
        return beta_k_path(n, k)
    if delta <= 2 * (k + 1):
        return n - delta
    return n - delta + beta_k_path(delta - 2 * k - 1, k)


def s_tilde_order(beta: int, k: int) -> int:
    """Vertex-count formula for the s_tilde landmark tree."""
    if beta < 2 or k < 1:
        raise ValueError(f"need beta >= 2 and k >= 1, got ({beta}, {k})")
    return 1 + beta * (k + 1) + (beta - 1) * (k - 1 + k * k // 4)


def s_tilde(beta: int, k: int) -> LabeledConstruction:
    """Tree with beta landmarks whose k-truncated dimension is exactly beta.

    Each landmark r_j carries a pendant path of length k (r_1's gets one extra
    vertex, the unique all-(k+1) vertex).  Landmarks r_2..r_beta connect to
    r_1 by paths of length k (length 2 when k=1); every internal connector
    vertex v hangs a path of length k - max(d(v, r_1), d(v, r_j)).

    The builder verifies that the landmark set resolves, and warns when the
    built order disagrees with s_tilde_order (which happens at k=1, where the
    formula's connector term is zero but the built connector has one internal
    vertex per branch).
    """
    if beta < 2 or k < 1:
        raise ValueError(f"need beta >= 2 and k >= 1, got ({beta}, {k})")
    edges: list[tuple[int, int]] = []
    nxt = beta  # landmarks take ids 0..beta-1

    def chain(start: int, length: int) -> None:
        nonlocal nxt
        prev = start
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1

    # pendant paths: r_1 gets length k+1 (the extra vertex), others length k
    chain(0, k + 1)
    for j in range(1, beta):
        chain(j, k)

    conn_len = 2 if k == 1 else k
    for j in range(1, beta):
        internal: list[int] = []
        prev = 0
        for _ in range(conn_len - 1):
            edges.append((prev, nxt))
            internal.append(nxt)
            prev = nxt
            nxt += 1
        edges.append((prev, j))
        for i, v in enumerate(internal, start=1):
            hang = k - max(i, conn_len - i)
            if hang > 0:
                chain(v, hang)

    g = Graph(nxt, edges)
    landmarks = tuple(range(beta))
    cert = is_truncated_resolving(all_pairs_distances(g), landmarks, k)
    if not cert.resolving:
        raise RuntimeError(
            f"s_tilde({beta}, {k}) self-check failed: canonical landmarks do "
            f"not resolve (collision {cert.witness_pair}); builder bug")
    expected = s_tilde_order(beta, k)
    if g.n != expected:
        warnings.warn(
            f"s_tilde({beta}, {k}) built {g.n} vertices but the order formula "
            f"gives {expected}; keeping the built tree",
            ConstructionWarning, stacklevel=2)
    return LabeledConstruction(
        graph=g, landmark_hint=landmarks, predicted_beta_k=beta, k=k,
        note=f"landmark tree with {beta} landmarks at truncation {k}")


# ---------------------------------------------------------------------------
# Tree generation (Pruefer sequences) and seeded random connected graphs,
# used by the oracle sweeps.
# ---------------------------------------------------------------------------


def tree_from_pruefer(seq: Sequence[int], n: int) -> Graph:
    """Decode a Pruefer sequence of length n-2 into the labeled tree on n vertices."""
    import heapq

    if n < 2:
        raise ValueError("Pruefer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be n-2={n - 2}, got {len(seq)}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves_heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves_heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves_heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves_heap, x)
    u = heapq.heappop(leaves_heap)
    v = heapq.heappop(leaves_heap)
    edges.append((u, v))
    return Graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n vertices (1 tree for n in {1, 2})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        yield Graph(1, [])
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq, n)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(seq, n)


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.25
                           ) -> Graph:
    """Random spanning tree plus independent extra edges; always connected."""
    tree = random_tree(n, rng)
    present = set(tree.edges())
    edges = list(present)
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in present and rng.random() < extra_edge_prob:
            edges.append((u, v))
    return Graph(n, edges)
