"""Seeded random instance generators for corpora and benchmarks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph
from .prng import SplitMix64


class GirthSaturationError(ValueError):
    """The edge target is unreachable without creating a short cycle."""

    def __init__(self, target: int, achieved: int):
        self.target = target
        self.achieved = achieved
        super().__init__(
            f"requested {target} edges but only {achieved} are insertable"
        )


def gen_random_forest(
    n: int,
    split_prob: float = 0.15,
    seed: int = 0,
    m: int | None = None,
) -> Graph:
    """Random forest by parent attachment: each vertex after the first either
    starts a fresh component or attaches to a uniformly random earlier vertex.

    With an explicit edge target ``m`` the component starts are sampled
    up front so the output has exactly n - m components.  Deterministic in
    ``seed``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    if m is not None:
        if not 0 <= m <= n - 1:
            raise ValueError(f"a forest on {n} vertices has 0..{n - 1} edges")
        extra_starts = set(v + 1 for v in rng.sample(n - 1, n - 1 - m))
        for v in range(1, n):
            if v in extra_starts:
                continue
            edges.append((rng.randrange(v), v))
    else:
        if not 0.0 <= split_prob <= 1.0:
            raise ValueError("split probability must be in [0, 1]")
        for v in range(1, n):
            if rng.random() < split_prob:
                continue
            edges.append((rng.randrange(v), v))
    return Graph.from_edges(n, edges)


def _within_distance(adj: list[set[int]], source: int, target: int, cap: int) -> bool:
    """True iff target is reachable from source in at most cap steps."""
    if source == target:
        return True
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        if d > cap:
            continue
        for w in adj[u]:
            if w == target:
                return True
            if w not in dist:
                dist[w] = d
                queue.append(w)
    return False


def gen_random_girth5(
    n: int,
    m: int | None = None,
    seed: int = 0,
    min_girth: int = 5,
) -> Graph:
    """Random graph of girth at least ``min_girth`` by shuffled greedy edge
    insertion; an edge is inserted only if its endpoints are currently at
    distance at least min_girth - 1.

    Stops after ``m`` edges, or at certified saturation when ``m`` is None.
    Raises :class:`GirthSaturationError` when the target is unreachable:
    once rejected, a pair only gets closer, so one scan is conclusive.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if min_girth < 3:
        raise ValueError("min_girth below 3 is not a girth constraint")
    rng = SplitMix64(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    cap = min_girth - 2
    for u, v in pairs:
        if m is not None and len(edges) == m:
            break
        if _within_distance(adj, u, v, cap):
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    if m is not None and len(edges) < m:
        raise GirthSaturationError(m, len(edges))
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class GeneratorConfig:
    """One corpus line: a family, its parameters, a seed, and a count.

    ``count`` produces that many instances; random kinds derive one seed per
    instance, the extremal family instead steps t upward from ``t``.
    """

    kind: str
    n: int | None = None
    m: int | None = None
    t: int | None = None
    sizes: tuple[int, ...] | None = None
    seed: int = 0
    count: int = 1
    split: float = 0.15

    KINDS = (
        "random-forest",
        "random-girth5",
        "star-union",
        "extremal-Ft",
        "path",
        "star",
    )

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.count < 1:
            raise ValueError("count must be positive")
        needs_n = self.kind in ("random-forest", "random-girth5", "path", "star")
        if needs_n and (self.n is None or self.n < 1):
            raise ValueError(f"kind {self.kind} requires n >= 1")
        if self.kind == "extremal-Ft" and (self.t is None or self.t < 1):
            raise ValueError("extremal-Ft requires t >= 1")
        if self.kind == "star-union" and not self.sizes:
            raise ValueError("star-union requires a sizes list")

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorConfig":
        known = {"kind", "n", "m", "t", "sizes", "seed", "count", "split"}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if "sizes" in data and data["sizes"] is not None:
            data = dict(data)
            data["sizes"] = tuple(data["sizes"])
        return cls(**data)
