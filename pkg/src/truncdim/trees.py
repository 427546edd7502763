"""Tree-specific machinery: classic metric dimension of trees, the peelable
tree family with its resolve-and-delete algorithm, and the dynamic program
for minimum 1-truncated resolving sets.

The dynamic program works over four locating-dominating-set variants per
subtree; a set R is locating-dominating when every vertex outside R has a
distinct nonempty neighborhood intersection with R.  Infeasible cells carry
math.inf, which saturates under min and + so no magic numbers leak into the
arithmetic.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph import (Graph, all_pairs_distances, induced_subgraph, is_connected,
                    is_path, is_tree, leaves)
from .resolve import is_truncated_resolving, truncated_vector

INF = math.inf


class BudgetExceededError(RuntimeError):
    """An enumeration exceeded its configured budget; the answer is undecided."""


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise ValueError("input graph is not a tree")


# ---------------------------------------------------------------------------
# Exterior major vertices and the classic (non-truncated) dimension of trees.
# ---------------------------------------------------------------------------


def _leaf_groups(t: Graph) -> dict[int, tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for u in leaves(t):
        prev, cur = u, t.adj[u][0]
        while t.degree(cur) == 2:
            nxt = next(w for w in t.adj[cur] if w != prev)
            prev, cur = cur, nxt
        if t.degree(cur) >= 3:
            groups.setdefault(cur, []).append(u)
    return {v: tuple(sorted(ls)) for v, ls in sorted(groups.items())}


def leaf_groups(t: Graph) -> dict[int, tuple[int, ...]]:
    """Map each exterior major vertex (degree >= 3 with a clean path to some
    leaf) to the sorted tuple of leaves it collects."""
    _require_tree(t)
    return _leaf_groups(t)


def exterior_major_vertices(t: Graph) -> tuple[int, ...]:
    return tuple(sorted(leaf_groups(t)))


def tree_metric_dimension(t: Graph) -> int:
    """Classic metric dimension: leaves minus exterior major vertices, with
    paths handled as the dimension-1 special case."""
    _require_tree(t)
    if t.n < 2:
        raise ValueError("need a tree on at least two vertices")
    if is_path(t):
        return 1
    return len(leaves(t)) - len(_leaf_groups(t))


def _tree_resolving_set(t: Graph) -> tuple[int, ...]:
    if all(t.degree(v) <= 2 for v in range(t.n)):
        return (min(v for v in range(t.n) if t.degree(v) == 1),)
    picked: list[int] = []
    for _, group in _leaf_groups(t).items():
        picked.extend(group[1:])  # drop the designated (lowest-id) leaf
    return tuple(sorted(picked))


def tree_resolving_set(t: Graph) -> tuple[int, ...]:
    """Canonical minimum classic resolving set: per leaf group, every leaf but
    the lowest-id one; for paths, the lowest-id endpoint."""
    _require_tree(t)
    if t.n < 2:
        raise ValueError("need a tree on at least two vertices")
    return _tree_resolving_set(t)


# ---------------------------------------------------------------------------
# The peelable family: trees on which classic resolving sets compose, by
# resolve-and-delete rounds, into minimum k-truncated resolving sets.
#
# Membership needs: no degree-2 vertices; every minimal classic resolving set
# (all-but-one leaf per group) leaves every truncated vector unique or equal
# to the all-(k+1) vector; and the residual far set is again a member.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TkResult:
    """Membership verdict: member True/False, or None when the enumeration
    budget ran out before a decision."""

    member: Optional[bool]
    failed_condition: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.member is True


@dataclass(frozen=True)
class PeelStep:
    """One peeling round: the residual tree, its original vertex ids, and the
    classic resolving set chosen on it (original ids)."""

    graph: Graph
    vertices: tuple[int, ...]
    landmarks: tuple[int, ...]


def _classic_choice_count(t: Graph) -> int:
    if t.n <= 2:
        return t.n
    count = 1
    for group in _leaf_groups(t).values():
        count *= len(group)
    return count


def _classic_choices(t: Graph) -> Iterator[tuple[int, ...]]:
    """All minimal classic resolving sets.  Without degree-2 vertices these
    are exactly the all-but-one-leaf-per-group sets; tiny trees (n <= 2) have
    single-endpoint sets instead."""
    if t.n <= 2:
        for v in range(t.n):
            yield (v,)
        return
    groups = list(_leaf_groups(t).values())
    for excluded in itertools.product(*groups):
        picked: list[int] = []
        for group, x in zip(groups, excluded):
            picked.extend(u for u in group if u != x)
        yield tuple(sorted(picked))


def _far_vertices(D, n: int, R: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Vertices at truncated distance k+1 from every landmark."""
    allk1 = (k + 1,) * len(R)
    return tuple(v for v in range(n)
                 if truncated_vector(D, v, R, k) == allk1)


def tk_membership(t: Graph, k: int, budget: int = 10 ** 6,
                  dist=None) -> TkResult:
    """Decide membership in the peelable family at truncation k.

    The empty tree is a member by definition.  Exceeding the budget on the
    classic-resolving-set enumeration yields an undecided result (member
    None), never a wrong answer.  Sweep callers can pass the tree's
    all_pairs_distances as dist to skip recomputation.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if t.n == 0:
        return TkResult(True, None, "empty tree")
    _require_tree(t)
    if dist is None:
        dist = all_pairs_distances(t)
    return _tk_membership_rec(t, dist, k, [budget])


def _tk_membership_rec(t: Graph, D, k: int, budget_box: list[int]) -> TkResult:
    n = t.n
    if n == 0:
        return TkResult(True)
    for v in range(n):
        if t.degree(v) == 2:
            return TkResult(False, 2, f"vertex {v} has degree 2")

    count = _classic_choice_count(t)
    if count > budget_box[0]:
        return TkResult(None, None,
                        f"undecided: {count} classic resolving sets exceed the "
                        f"remaining enumeration budget {budget_box[0]}")
    budget_box[0] -= count

    residuals: set[tuple[int, ...]] = set()
    for R in _classic_choices(t):
        allk1 = (k + 1,) * len(R)
        vecs = [truncated_vector(D, v, R, k) for v in range(n)]
        counts = Counter(vecs)
        for v, vec in enumerate(vecs):
            if counts[vec] > 1 and vec != allk1:
                return TkResult(
                    False, 3,
                    f"classic set {R} leaves a non-far collision at vertex {v}")
        carriers = tuple(v for v, vec in enumerate(vecs) if vec == allk1)
        residuals.add(carriers if len(carriers) >= 2 else ())

    for res in sorted(residuals):
        if not res:
            continue
        sub, _ = induced_subgraph(t, res)
        if not is_connected(sub):
            return TkResult(False, 4,
                            f"residual {res} is disconnected, hence not a tree")
        inner = _tk_membership_rec(sub, all_pairs_distances(sub), k, budget_box)
        if inner.member is None:
            return inner
        if not inner.member:
            return TkResult(False, 4,
                            f"residual {res} fails condition {inner.failed_condition}: "
                            f"{inner.detail}")
    return TkResult(True)


def tk_beta_k(t: Graph, k: int, budget: int = 10 ** 6, dist=None
              ) -> tuple[int, tuple[int, ...], list[PeelStep]]:
    """Exact truncated dimension of a family member by peeling.

    Each round picks the canonical classic resolving set of the residual,
    deletes every vertex it pins down, and recurses on the far set.  A final
    single far vertex costs nothing: its all-(k+1) vector is already unique.
    The combined landmark set is verified resolving before returning.
    """
    if dist is None and t.n > 0:
        dist = all_pairs_distances(t)
    res = tk_membership(t, k, budget, dist)
    if res.member is None:
        raise BudgetExceededError(res.detail)
    if not res.member:
        raise ValueError(
            f"tree is not a peelable-family member at k={k}: {res.detail}")
    if t.n == 0:
        return 0, (), []
    if t.n == 1:
        return 1, (0,), [PeelStep(t, (0,), (0,))]

    steps: list[PeelStep] = []
    witness: list[int] = []
    cur = t
    cur_dist = dist
    ids = tuple(range(t.n))
    while cur.n >= 2:
        r_local = _tree_resolving_set(cur)
        r_orig = tuple(sorted(ids[r] for r in r_local))
        steps.append(PeelStep(cur, ids, r_orig))
        witness.extend(r_orig)
        carriers = _far_vertices(cur_dist, cur.n, r_local, k)
        if len(carriers) <= 1:
            break
        if len(carriers) == cur.n:
            raise RuntimeError("peeling stalled; membership check should forbid this")
        cur, kept = induced_subgraph(cur, carriers)
        ids = tuple(ids[i] for i in kept)
        cur_dist = all_pairs_distances(cur)

    cert = is_truncated_resolving(dist, witness, k)
    if not cert.resolving:
        raise RuntimeError(
            f"peeled landmark set {witness} fails to resolve (collision "
            f"{cert.witness_pair}); internal bug")
    return len(witness), tuple(sorted(witness)), steps


def tk_all_peel_totals(t: Graph, k: int, budget: int = 10 ** 5) -> set[int]:
    """Totals over every sequence of classic-set choices, to surface any
    divergence between tie choices (peeling is only well-defined if none exists)."""
    counter = [budget]

    def rec(cur: Graph, D) -> set[int]:
        if cur.n <= 1:
            return {0}
        totals: set[int] = set()
        for R in _classic_choices(cur):
            counter[0] -= 1
            if counter[0] < 0:
                raise BudgetExceededError("choice exploration exceeded budget")
            carriers = _far_vertices(D, cur.n, R, k)
            if len(carriers) >= 2:
                sub, _ = induced_subgraph(cur, carriers)
                totals.update(len(R) + x for x in rec(sub, all_pairs_distances(sub)))
            else:
                totals.add(len(R))
        return totals

    if t.n == 0:
        return {0}
    if t.n == 1:
        return {1}
    return rec(t, all_pairs_distances(t))


# ---------------------------------------------------------------------------
# Rooted trees and the locating-dominating dynamic program.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootedTree:
    """A tree with parent/children arrays from a BFS rooting."""

    graph: Graph
    root: int
    parent: tuple[Optional[int], ...]
    children: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]  # BFS order; parents precede children


def root_tree(g: Graph, root: int = 0) -> RootedTree:
    if g.n == 0:
        raise ValueError("cannot root an empty graph")
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    if g.num_edges != g.n - 1:
        raise ValueError("input graph is not a tree")
    parent: list[Optional[int]] = [None] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    order = [root]
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                children[u].append(v)
                order.append(v)
                queue.append(v)
    if len(order) != g.n:
        raise ValueError("input graph is not a tree (disconnected)")
    return RootedTree(g, root, tuple(parent),
                      tuple(tuple(c) for c in children), tuple(order))


def _flatten(expr) -> tuple[int, ...]:
    out: list[int] = []
    stack = [expr]
    while stack:
        e = stack.pop()
        for item in e:
            if isinstance(item, int):
                out.append(item)
            else:
                stack.append(item)
    return tuple(sorted(out))


@dataclass
class DpTables:
    """Per-vertex minimum sizes of four locating-dominating variants on the
    subtree at v, plus lazily flattened witness sets.

      full[v]      locate and dominate the whole subtree
      skip_dom[v]  locate everything below v; v itself only needs domination
      skip[v]      locate everything below v; v may stay undominated
      avoid[v]     locate and dominate the whole subtree without using v

    Leaf bases: full = skip_dom = 1, skip = 0, avoid = inf (a leaf cannot be
    dominated from its empty subtree).
    """

    root: int
    pair_indexing: str
    full: list[float]
    skip_dom: list[float]
    skip: list[float]
    avoid: list[float]
    _exprs: dict[str, list] = field(repr=False, default_factory=dict)

    def witness(self, v: int, table: str = "full") -> Optional[tuple[int, ...]]:
        expr = self._exprs[table][v]
        if expr is None:
            return None
        return _flatten(expr)


def dp_tables(rt: RootedTree, pair_indexing: str = "symmetric") -> DpTables:
    """Post-order evaluation of the four locating-dominating recurrences.

    pair_indexing selects how the two-children-chosen case charges the second
    child's grandchildren: "symmetric" (the default; sums the second child's
    own remaining children) or "literal" (a published variant that sums the
    first child's children again, kept switchable for regression comparison).
    Minima over empty candidate sets are inf.
    """
    if pair_indexing not in ("symmetric", "literal"):
        raise ValueError(f"unknown pair_indexing {pair_indexing!r}")
    g = rt.graph
    n = g.n
    full = [0.0] * n
    full_e: list = [None] * n
    skip_dom = [0.0] * n
    skip_dom_e: list = [None] * n
    skip = [0.0] * n
    skip_e: list = [None] * n
    avoid = [0.0] * n
    avoid_e: list = [None] * n
    inner = [INF] * n
    inner_e: list = [None] * n
    rp_sum = [0.0] * n
    rp_sum_e: list = [None] * n
    min_skip = [INF] * n
    min_skip_e: list = [None] * n

    for v in reversed(rt.order):
        cs = rt.children[v]
        if not cs:
            full[v] = 1
            full_e[v] = (v,)
            skip_dom[v] = 1
            skip_dom_e[v] = (v,)
            skip[v] = 0
            skip_e[v] = ()
            avoid[v] = INF
            avoid_e[v] = None
            rp_sum[v] = 0
            rp_sum_e[v] = ()
            continue

        sum_full = sum(full[u] for u in cs)
        sum_sd = sum(skip_dom[u] for u in cs)
        rp_sum[v] = sum_sd
        rp_sum_e[v] = tuple(skip_dom_e[u] for u in cs)

        for u in cs:
            if skip[u] < min_skip[v]:
                min_skip[v] = skip[u]
                min_skip_e[v] = skip_e[u]

        # inner(v): one child may lean on v alone (skip), the rest must be
        # dominated inside their own subtrees (skip_dom)
        best_x = -1
        for x in cs:
            cand = skip[x] + (sum_sd - skip_dom[x])
            if cand < inner[v]:
                inner[v] = cand
                best_x = x
        if best_x >= 0:
            inner_e[v] = (skip_e[best_x],) + tuple(
                skip_dom_e[y] for y in cs if y != best_x)

        # case: v itself is in the set
        eq_self = 1 + inner[v]
        eq_self_e = (v, inner_e[v]) if inner_e[v] is not None else None

        # case: exactly one chosen child u; u's children dominated elsewhere,
        # v's other children handled fully on their own
        eq_one = INF
        eq_one_u = -1
        for u in cs:
            cand = 1 + rp_sum[u] + (sum_full - full[u])
            if cand < eq_one:
                eq_one = cand
                eq_one_u = u
        eq_one_e = None
        if eq_one_u >= 0:
            eq_one_e = (eq_one_u, rp_sum_e[eq_one_u]) + tuple(
                full_e[w] for w in cs if w != eq_one_u)

        # case: two chosen children u, w
        eq_two = INF
        eq_two_e = None
        if pair_indexing == "symmetric":
            viable = [u for u in cs if inner[u] < INF]
            pick = None
            for i in range(len(viable)):
                for j in range(i + 1, len(viable)):
                    u, w = viable[i], viable[j]
                    cand = (2 + inner[u] + inner[w]
                            + sum_full - full[u] - full[w])
                    if cand < eq_two:
                        eq_two = cand
                        pick = (u, w)
            if pick is not None:
                u, w = pick
                eq_two_e = (u, w, inner_e[u], inner_e[w]) + tuple(
                    full_e[x] for x in cs if x != u and x != w)
        else:
            pick = None
            for u in cs:
                if inner[u] == INF:
                    continue
                for w in cs:
                    if w == u or min_skip[w] == INF:
                        continue
                    cand = (2 + inner[u] + min_skip[w] + rp_sum[u]
                            + sum_full - full[u] - full[w])
                    if cand < eq_two:
                        eq_two = cand
                        pick = (u, w)
            if pick is not None:
                u, w = pick
                eq_two_e = (u, w, inner_e[u], min_skip_e[w], rp_sum_e[u]) + tuple(
                    full_e[x] for x in cs if x != u and x != w)

        # full: any of the three cases
        full[v], full_e[v] = eq_self, eq_self_e
        if eq_one < full[v]:
            full[v], full_e[v] = eq_one, eq_one_e
        if eq_two < full[v]:
            full[v], full_e[v] = eq_two, eq_two_e

        # avoid: v barred from the set
        avoid[v], avoid_e[v] = eq_one, eq_one_e
        if eq_two < avoid[v]:
            avoid[v], avoid_e[v] = eq_two, eq_two_e

        # skip_dom: v in the set, or one chosen child dominates v
        eq_dom = INF
        eq_dom_u = -1
        for u in cs:
            if inner[u] == INF:
                continue
            cand = 1 + inner[u] + (sum_full - full[u])
            if cand < eq_dom:
                eq_dom = cand
                eq_dom_u = u
        skip_dom[v], skip_dom_e[v] = eq_self, eq_self_e
        if eq_dom < skip_dom[v]:
            skip_dom[v] = eq_dom
            skip_dom_e[v] = (eq_dom_u, inner_e[eq_dom_u]) + tuple(
                full_e[w] for w in cs if w != eq_dom_u)

        # skip: v in the set, or every child settled fully on its own
        skip[v], skip_e[v] = eq_self, eq_self_e
        if sum_full < skip[v]:
            skip[v] = sum_full
            skip_e[v] = tuple(full_e[u] for u in cs)

    return DpTables(
        root=rt.root, pair_indexing=pair_indexing,
        full=full, skip_dom=skip_dom, skip=skip, avoid=avoid,
        _exprs={"full": full_e, "skip_dom": skip_dom_e,
                "skip": skip_e, "avoid": avoid_e})


def locating_dominating_number(t: Graph, root: int = 0,
                               pair_indexing: str = "symmetric") -> int:
    """Minimum size of a locating-dominating set of a tree (root-invariant)."""
    _require_tree(t)
    if t.n < 2:
        raise ValueError("need a tree on at least two vertices")
    tables = dp_tables(root_tree(t, root), pair_indexing)
    return int(tables.full[root])


def locating_dominating_set(t: Graph, root: int = 0) -> tuple[int, ...]:
    """A minimum locating-dominating set reconstructed from the dynamic program."""
    _require_tree(t)
    if t.n < 2:
        raise ValueError("need a tree on at least two vertices")
    tables = dp_tables(root_tree(t, root))
    witness = tables.witness(root, "full")
    assert witness is not None
    return witness


def beta_1_tree(t: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact 1-truncated metric dimension of a tree with a verified witness.

    Takes the best of: a minimum locating-dominating set, and, for every
    vertex v, the cheapest set that locates and dominates everything except v
    while staying out of v's neighborhood (v then carries the unique all-2
    vector).  The per-v candidates need the tree rooted at v, so the dynamic
    program runs once per root; O(n) each keeps the total quadratic.
    """
    _require_tree(t)
    if t.n <= 2:
        return 1, (0,)

    best = INF
    best_expr = None
    for v in range(t.n):
        rt = root_tree(t, v)
        tables = dp_tables(rt)
        if v == 0:
            if tables.full[0] < best:
                best = tables.full[0]
                best_expr = tables._exprs["full"][0]
        total = 0.0
        parts = []
        feasible = True
        for u in rt.children[v]:
            if tables.avoid[u] == INF:
                feasible = False
                break
            total += tables.avoid[u]
            parts.append(tables._exprs["avoid"][u])
        if feasible and total < best:
            best = total
            best_expr = tuple(parts)

    witness = _flatten(best_expr)
    cert = is_truncated_resolving(all_pairs_distances(t), witness, 1)
    if not cert.resolving:
        raise RuntimeError(
            f"reconstructed witness {witness} fails to resolve (collision "
            f"{cert.witness_pair}); internal bug")
    return int(best), witness
