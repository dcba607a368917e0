"""Simple undirected graphs on dense integer vertices.

Everything downstream (the forest solver, the brute-force oracle, the
constructive procedures) works on the immutable :class:`Graph` defined here,
together with the degree-profile, girth, and component utilities and the
success condition for the degree-equalization number f_k.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable

INFINITY = math.inf

_EDGE_LINE = re.compile(r"(\d+) (\d+)$")
_HEADER_LINE = re.compile(r"(\d+) (\d+)$")


class GraphFormatError(ValueError):
    """Edge-list input violates the file format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbors of ``v`` and ``m`` the number
    of edges.  Instances validate simplicity and symmetry on construction and
    are safe to share across threads or processes.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        neigh: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in neigh[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            neigh[u].add(v)
            neigh[v].add(u)
            m += 1
        return cls(n, tuple(tuple(sorted(s)) for s in neigh), m)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        if 2 * self.m != sum(len(a) for a in self.adj):
            raise ValueError("edge count inconsistent with degree sum")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class DegreeProfile:
    """Non-increasing degree sequence with one witness vertex per entry.

    ``deltas[i]`` is the (i+1)-th largest degree and ``witnesses[i]`` a vertex
    realizing it; ties are broken by ascending vertex id so every downstream
    procedure is deterministic.
    """

    deltas: tuple[int, ...]
    witnesses: tuple[int, ...]

    def delta(self, i: int) -> int:
        """1-based access to the i-th largest degree."""
        if not 1 <= i <= len(self.deltas):
            raise IndexError(f"degree index {i} out of range")
        return self.deltas[i - 1]

    def witness(self, i: int) -> int:
        if not 1 <= i <= len(self.witnesses):
            raise IndexError(f"witness index {i} out of range")
        return self.witnesses[i - 1]


def parse_graph(text: str | Iterable[str]) -> Graph:
    """Parse the edge-list format: header ``n m`` then m lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.  Tokens are
    separated by single spaces, edge lines require ``0 <= u < v < n``, and
    every violation is reported with its line number.
    """
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in text]

    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        if raw.startswith("#") or raw.strip() == "":
            continue
        if header is None:
            match = _HEADER_LINE.fullmatch(raw)
            if not match:
                raise GraphFormatError(f"malformed header {raw!r}", lineno)
            header = (int(match.group(1)), int(match.group(2)))
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"unexpected content after {m} edges", lineno)
        match = _EDGE_LINE.fullmatch(raw)
        if not match:
            raise GraphFormatError(f"malformed edge line {raw!r}", lineno)
        u, v = int(match.group(1)), int(match.group(2))
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if u > v:
            raise GraphFormatError(f"edge ({u}, {v}) not in increasing order", lineno)
        if v >= n:
            raise GraphFormatError(f"vertex {v} out of range for n={n}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))

    if header is None:
        raise GraphFormatError("missing header line")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def to_edgelist(graph: Graph) -> str:
    """Serialize to the canonical edge-list text (sorted edges, u < v)."""
    out = [f"{graph.n} {graph.m}"]
    out.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(out) + "\n"


def degree_profile(graph: Graph) -> DegreeProfile:
    """Degrees sorted non-increasingly, witnesses tie-broken by vertex id."""
    order = sorted(range(graph.n), key=lambda v: (-len(graph.adj[v]), v))
    return DegreeProfile(
        deltas=tuple(len(graph.adj[v]) for v in order),
        witnesses=tuple(order),
    )


def components(graph: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * graph.n
    comps: list[list[int]] = []
    for start in range(graph.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in graph.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_forest(graph: Graph) -> bool:
    return graph.m == graph.n - len(components(graph))


def girth(graph: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    One breadth-first search per start vertex; the minimum over all starts of
    dist(x) + dist(y) + 1, over non-tree edges (x, y), is the exact girth.
    """
    best: int | float = INFINITY
    dist = [-1] * graph.n
    parent = [-1] * graph.n
    for start in range(graph.n):
        for v in range(graph.n):
            dist[v] = -1
        dist[start] = 0
        parent[start] = -1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue  # any cycle through u is at least 2*dist[u] long
            for w in graph.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if length < best:
                        best = length
    return best


def remove_vertices(graph: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the kept vertices plus the old-id -> new-id map."""
    removed_set = set(removed)
    for v in removed_set:
        if not (isinstance(v, int) and 0 <= v < graph.n):
            raise ValueError(f"unknown vertex {v!r}")
    kept = [v for v in range(graph.n) if v not in removed_set]
    old_to_new = {old: new for new, old in enumerate(kept)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in graph.edges()
        if u in old_to_new and v in old_to_new
    ]
    return Graph.from_edges(len(kept), edges), old_to_new


def residual_degree_stats(graph: Graph, removed: set[int]) -> tuple[int, int, int]:
    """(order, max degree, number of max-degree vertices) of graph - removed.

    Avoids building the induced subgraph; equivalent to inspecting the result
    of :func:`remove_vertices`.  Max degree is 0 for an empty residual.
    """
    order = graph.n - len(removed)
    if order <= 0:
        return max(order, 0), 0, 0
    max_deg = -1
    count = 0
    adj = graph.adj
    for v in range(graph.n):
        if v in removed:
            continue
        deg = len(adj[v])
        if deg >= max_deg:  # cheap pre-filter before subtracting hits
            deg -= sum(1 for w in adj[v] if w in removed)
        else:
            continue
        if deg > max_deg:
            max_deg = deg
            count = 1
        elif deg == max_deg:
            count += 1
    if max_deg < 0:
        max_deg = 0
    return order, max_deg, count


def check_fk_condition(graph: Graph, removed: Iterable[int], k: int) -> bool:
    """True iff graph - removed has >= k vertices of maximum degree or order < k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    removed_set = set(removed)
    for v in removed_set:
        if not (isinstance(v, int) and 0 <= v < graph.n):
            raise ValueError(f"unknown vertex {v!r}")
    order, max_deg, count = residual_degree_stats(graph, removed_set)
    del max_deg
    return order < k or count >= k
