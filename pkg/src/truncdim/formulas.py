"""Closed-form values, extreme-dimension characterizations, and bounds.

Everything here is checked against the brute-force solver by the theorem
sweep (see checks.py and the acceptance suite), so a formula bug cannot hide.
"""

from __future__ import annotations

from typing import Optional

from .graph import Graph, is_complete, is_connected, is_path


def beta_k_path(n: int, k: int) -> int:
    """Truncated metric dimension of the path on n vertices, for k >= 1.

    With block length 3k+2 and m = n // (3k+2), the value is 2m, 2m+1 or 2m+2
    depending on where the remainder n mod (3k+2) falls.
    """
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    if k < 1:
        raise ValueError("k must be >= 1 here; at k=0 the dimension is n-1 (see beta_0)")
    if n == 1:
        return 1
    block = 3 * k + 2
    m, r = divmod(n, block)
    if r in (0, 1):
        return 2 * m
    if 2 <= r <= k + 2:
        return 2 * m + 1
    return 2 * m + 2  # r in {k+3, ..., 3k+1}


def path_resolving_set(n: int, k: int) -> tuple[int, ...]:
    """A minimum k-truncated resolving set of the path, as 0-based positions.

    Positions follow the constructive pattern behind beta_k_path: two landmarks
    per full block of 3k+2 vertices (at offsets k+1 and 2(k+1), 1-based), plus
    a remainder-dependent tail.  The published pattern is 1-based; ids are
    shifted to 0-based at this boundary.
    """
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    if k < 1:
        raise ValueError("k must be >= 1 here; at k=0 any n-1 vertices are needed")
    block = 3 * k + 2
    m, r = divmod(n, block)
    picked = {i for i in range(1, block * m + 1) if i % block in (k + 1, 2 * (k + 1))}
    if n == 1:
        picked.add(1)
    elif r in (0, 1):
        pass
    elif 2 <= r <= k + 2:
        picked.add(n)
    else:
        picked.add(block * m + k + 1)
        picked.add(min(n, block * m + 2 * (k + 1)))
    return tuple(sorted(i - 1 for i in picked))


def beta_k_cycle(n: int, k: int) -> int:
    """Truncated metric dimension of the n-cycle: 2 up to n = 3k+3, then the
    path value takes over."""
    if n < 3:
        raise ValueError(f"cycle order must be >= 3, got {n}")
    if k < 1:
        raise ValueError("k must be >= 1 here; at k=0 the dimension is n-1 (see beta_0)")
    if n <= 3 * k + 3:
        return 2
    return beta_k_path(n, k)


def has_beta_k_one(g: Graph, k: int) -> bool:
    """Dimension 1 happens exactly for paths short enough that one endpoint
    sees everything: n <= k+2."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    return is_path(g) and g.n <= k + 2


def has_beta_k_n_minus_1(g: Graph, k: int) -> bool:
    """Dimension n-1 happens exactly for complete graphs (k >= 1, n >= 2)."""
    if k < 1:
        raise ValueError("k must be >= 1; at k=0 every graph has dimension n-1")
    if g.n < 2:
        raise ValueError("need n >= 2")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    return is_complete(g)


def _universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def _is_complete_bipartite(g: Graph) -> bool:
    # Connected + 2-colorable + every cross pair present.
    if g.n < 2:
        return False
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    sizes = [1, 0]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if color[v] == -1:
                color[v] = 1 - color[u]
                sizes[color[v]] += 1
                stack.append(v)
            elif color[v] == color[u]:
                return False
    if -1 in color:
        return False
    return g.num_edges == sizes[0] * sizes[1]


def n_minus_2_family(g: Graph, k: int) -> Optional[str]:
    """Family tag when beta_k(g) = n-2 is forced structurally, else None.

    For k >= 1 and n >= 4 the graphs of dimension n-2 are exactly: complete
    bipartite graphs; a clique joined to an edgeless part (t >= 2); a clique
    joined to an isolated vertex plus a clique; and the 4-path at k=1.
    Recognition is by neighborhood structure, no isomorphism search.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n < 4:
        raise ValueError("characterization applies to n >= 4 only")
    if not is_connected(g):
        raise ValueError("graph must be connected")

    if _is_complete_bipartite(g):
        return "complete-bipartite"

    universal = set(_universal_vertices(g))
    if universal:
        rest = [v for v in range(g.n) if v not in universal]
        rest_deg = {v: sum(1 for w in g.adj[v] if w not in universal) for v in rest}
        # clique + edgeless part: no edges among the rest, at least 2 there
        if len(rest) >= 2 and all(rest_deg[v] == 0 for v in rest):
            return "clique-plus-edgeless"
        # clique + (isolated vertex, clique): rest splits into one isolated
        # vertex and a clique with no edges between them
        isolated = [v for v in rest if rest_deg[v] == 0]
        if len(isolated) == 1:
            clique_part = [v for v in rest if v != isolated[0]]
            t = len(clique_part)
            if t >= 1 and all(rest_deg[v] == t - 1 for v in clique_part):
                return "clique-plus-point-and-clique"

    if k == 1 and is_path(g) and g.n == 4:
        return "path-4"
    return None


def has_beta_k_n_minus_2(g: Graph, k: int) -> bool:
    return n_minus_2_family(g, k) is not None


def order_upper_bound(beta_k: int, k: int) -> int:
    """Largest order a graph with the given dimension can have: (k+1)^beta_k + beta_k.

    Python integers do not overflow, so the value is always exact.
    """
    if beta_k < 1:
        raise ValueError("beta_k must be >= 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (k + 1) ** beta_k + beta_k


def diameter_upper_bound(n: int, delta: int, k: int) -> int:
    """Upper bound on the dimension from the diameter: resolve one diametral
    path, take every other vertex."""
    if not 1 <= delta <= n - 1:
        raise ValueError(f"need 1 <= delta <= n-1, got delta={delta}, n={n}")
    return beta_k_path(delta + 1, k) + (n - (delta + 1))
