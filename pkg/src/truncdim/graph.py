"""Undirected-graph core: construction, BFS distances, structural recognizers,
edge-list parsing, and exhaustive enumeration of small connected graphs.

Vertices are always the contiguous integers 0..n-1.  Arbitrary string labels
from input files are mapped to ids by the parser and kept in a label table so
results can be reported in the caller's vocabulary.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

# Enumerating all labeled connected graphs walks 2^(n(n-1)/2) edge subsets,
# which stops being a desk-scale job somewhere past this point.
ENUMERATION_LIMIT = 7


class GraphInputError(ValueError):
    """Malformed graph input: self-loops, bad vertex ids, unparsable files."""


class DisconnectedGraphError(ValueError):
    """The operation needs a connected graph but the input is not one."""


class Graph:
    """Immutable simple undirected graph with sorted adjacency lists.

    Duplicate edges are collapsed; self-loops are rejected.  Instances are
    safe to share across threads or processes: nothing is mutated after
    construction.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {n}")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphInputError(f"vertex ids must be integers, got ({u!r}, {v!r})")
            if u < 0 or v < 0:
                raise GraphInputError(f"negative vertex id in edge ({u}, {v})")
            if u >= n or v >= n:
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[tuple[int, ...], ...]) -> "Graph":
        # Fast path for internal generators that already hold valid sorted
        # adjacency; skips validation on hot enumeration loops.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def from_edge_list(edges: Sequence[tuple[int, int]], n: Optional[int] = None) -> Graph:
    """Build a graph from integer edge pairs, inferring n as max id + 1."""
    if n is None:
        if not edges:
            raise GraphInputError("cannot infer vertex count from an empty edge list")
        n = max(max(u, v) for u, v in edges) + 1
    return Graph(n, edges)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs geodesic distances of a connected graph, as a read-only array."""

    dist: np.ndarray

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def row(self, v: int) -> np.ndarray:
        return self.dist[v]

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Hop distances from source; unreachable vertices are None, never a magic number."""
    if not 0 <= source < g.n:
        raise GraphInputError(f"source {source} out of range for n={g.n}")
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = du + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return None not in bfs_distances(g, 0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """n BFS sweeps assembled into a matrix; rejects empty or disconnected input."""
    if g.n == 0:
        raise GraphInputError("empty graph has no distance matrix")
    rows = []
    for s in range(g.n):
        d = bfs_distances(g, s)
        if None in d:
            raise DisconnectedGraphError("graph is disconnected")
        rows.append(d)
    arr = np.array(rows, dtype=np.int32)
    arr.setflags(write=False)
    return DistanceMatrix(arr)


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise GraphInputError("empty graph has no diameter")
    best = 0
    for s in range(g.n):
        d = bfs_distances(g, s)
        if None in d:
            raise DisconnectedGraphError("graph is disconnected")
        best = max(best, max(d))  # type: ignore[type-var]
    return best


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)) and is_connected(g)


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def leaves(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if g.degree(v) == 1)


def path_order(g: Graph) -> list[int]:
    """Vertices of a path graph in walk order, starting at the lowest-id endpoint."""
    if not is_path(g):
        raise GraphInputError("not a path graph")
    if g.n == 1:
        return [0]
    start = min(v for v in range(g.n) if g.degree(v) == 1)
    order = [start]
    prev, cur = -1, start
    while len(order) < g.n:
        nxt = next(w for w in g.adj[cur] if w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the new-id -> old-id table."""
    vs = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(vs)}
    edges = []
    for u in vs:
        for w in g.adj[u]:
            if u < w and w in index:
                edges.append((index[u], index[w]))
    return Graph(len(vs), edges), vs


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected simple graph on n vertices, exactly once.

    Iterates all 2^(n(n-1)/2) edge subsets and keeps the connected ones; no
    isomorphism dedup.  Counts for n = 1..7: 1, 1, 4, 38, 728, 26704, 1866256.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise GraphInputError(
            f"enumeration supported for 1 <= n <= {ENUMERATION_LIMIT} "
            f"(2^(n(n-1)/2) edge subsets get out of hand beyond that), got n={n}")
    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        neigh = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                neigh[u] |= 1 << v
                neigh[v] |= 1 << u
        seen = 1
        stack = [0]
        while stack:
            v = stack.pop()
            new = neigh[v] & ~seen
            seen |= new
            while new:
                low = new & -new
                stack.append(low.bit_length() - 1)
                new ^= low
        if seen == full:
            adj = tuple(
                tuple(i for i in range(n) if neigh[v] >> i & 1) for v in range(n))
            yield Graph._from_adj(n, adj)


# ---------------------------------------------------------------------------
# Edge-list text format.
#
#   # comment lines start with '#'
#   n 5            <- optional header fixing the vertex count (ids then 0..n-1)
#   0 1
#   a b            <- without a header, labels are arbitrary tokens
#
# Without a header, labels are sorted (numerically when every label is a
# decimal integer, else lexicographically) and assigned ids in that order.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledGraph:
    """A graph together with the original vertex labels from its source file."""

    graph: Graph
    labels: tuple[str, ...]

    def id_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphInputError(f"unknown vertex label {label!r}") from None

    def label_of(self, v: int) -> str:
        return self.labels[v]


def parse_edge_list(text: str) -> LabeledGraph:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line.split())
    if not lines:
        raise GraphInputError("no graph data found")

    header_n: Optional[int] = None
    if lines[0][0] == "n" and len(lines[0]) == 2:
        try:
            header_n = int(lines[0][1])
        except ValueError:
            raise GraphInputError(f"bad header line: {' '.join(lines[0])}") from None
        lines = lines[1:]

    pairs: list[tuple[str, str]] = []
    for toks in lines:
        if len(toks) != 2:
            raise GraphInputError(f"expected two labels per line, got: {' '.join(toks)}")
        pairs.append((toks[0], toks[1]))

    if header_n is not None:
        labels = tuple(str(i) for i in range(header_n))
        edges = []
        for a, b in pairs:
            try:
                u, v = int(a), int(b)
            except ValueError:
                raise GraphInputError(
                    f"header declares n={header_n}; labels must be integers, got ({a}, {b})"
                ) from None
            if not (0 <= u < header_n and 0 <= v < header_n):
                raise GraphInputError(f"edge ({a}, {b}) out of range for n={header_n}")
            edges.append((u, v))
        return LabeledGraph(Graph(header_n, edges), labels)

    label_set = {tok for pair in pairs for tok in pair}
    if not label_set:
        raise GraphInputError("no edges and no header")
    try:
        ordered = sorted(label_set, key=lambda s: (0, int(s)))
    except ValueError:
        ordered = sorted(label_set)
    index = {lab: i for i, lab in enumerate(ordered)}
    edges = [(index[a], index[b]) for a, b in pairs]
    return LabeledGraph(Graph(len(ordered), edges), tuple(ordered))


def read_edge_list(path: str) -> LabeledGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from None
    return parse_edge_list(text)


def format_edge_list(g: Graph, labels: Optional[Sequence[str]] = None,
                     comments: Sequence[str] = ()) -> str:
    """Canonical writer: comments, 'n <count>' header, then sorted edges."""
    if labels is None:
        labels = [str(i) for i in range(g.n)]
    out = [f"# {c}" for c in comments]
    out.append(f"n {g.n}")
    out.extend(f"{labels[u]} {labels[v]}" for u, v in g.edges())
    return "\n".join(out) + "\n"
