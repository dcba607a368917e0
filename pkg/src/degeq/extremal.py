"""Deterministic graph families: stars, paths, star unions, and the extremal
star-union family whose members need t deletions to equalize three maximum
degrees despite having few edges."""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph


def a_sequence(i: int) -> int:
    """The i-th star size of the extremal family.

    a_1 = 1, a_2 = 3, and a_i = max(a_{i-1}, i - a_{i-1} + 2 a_{i-2}) after
    that; equals (i // 2)^2 + (i // 2) + 1 in closed form.
    """
    if i < 1:
        raise ValueError("index must be positive")
    if i == 1:
        return 1
    prev2, prev = 1, 3
    for j in range(3, i + 1):
        prev2, prev = prev, max(prev, j - prev + 2 * prev2)
    return prev


def a_closed_form(i: int) -> int:
    if i < 1:
        raise ValueError("index must be positive")
    half = i // 2
    return half * half + half + 1


def build_star(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def build_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def build_star_union(leaf_counts) -> Graph:
    """Disjoint union of stars; ids assigned component by component, center
    first."""
    leaf_counts = list(leaf_counts)
    if not leaf_counts or any(c < 0 for c in leaf_counts):
        raise ValueError("leaf counts must be non-negative and non-empty")
    edges = []
    base = 0
    for count in leaf_counts:
        center = base
        edges.extend((center, center + j) for j in range(1, count + 1))
        base += count + 1
    return Graph.from_edges(base, edges)


def build_extremal_forest(t: int) -> Graph:
    """Union of stars with leaf counts a_1 .. a_t."""
    if t < 1:
        raise ValueError("t must be positive")
    return build_star_union([a_sequence(i) for i in range(1, t + 1)])


def extremal_size(t: int) -> int:
    """Closed-form edge count of the extremal forest with parameter t."""
    if t < 1:
        raise ValueError("t must be positive")
    k, odd = divmod(t, 2)
    if odd:
        value = Fraction(2, 3) * k**3 + 2 * k**2 + Fraction(10, 3) * k + 1
    else:
        value = Fraction(2, 3) * k**3 + k**2 + Fraction(7, 3) * k
    if value.denominator != 1:
        raise AssertionError(f"size formula produced non-integer {value}")
    return int(value)
