"""Certificate-producing deletion procedures.

These trade optimality for explicit constructions: iterative peeling of
maximum-degree vertices, the neighbor-trimming routine for graphs of girth at
least 5, and the full recursive routine that equalizes three maximum degrees
in a forest.  Every returned certificate is validated before it leaves this
module; a branch whose hypothesis fails raises instead of guessing.
"""

from __future__ import annotations

from math import comb

from .certificates import RemovalCertificate, make_certificate
from .graph import (
    Graph,
    check_fk_condition,
    components,
    degree_profile,
    girth,
    is_forest,
    remove_vertices,
)


class PreconditionError(ValueError):
    """A stated precondition of a constructive procedure does not hold."""

    def __init__(self, what: str, message: str):
        self.what = what
        super().__init__(f"{what}: {message}")


def _top_witnesses(graph: Graph, count: int) -> list[int]:
    profile = degree_profile(graph)
    return list(profile.witnesses[:count])


def peel_removal(graph: Graph, k: int) -> RemovalCertificate:
    """Remove the top k-1 degree witnesses, then strip whole max-degree layers
    until k vertices share the maximum degree or fewer than k remain.

    Safe on any graph; when the k-th largest degree is below k-1 the removed
    set has size at most (k-1)^2.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if check_fk_condition(graph, (), k):
        return make_certificate(graph, (), k, "peel")

    removed: set[int] = set(_top_witnesses(graph, k - 1))
    alive = [v for v in range(graph.n) if v not in removed]
    deg = {v: sum(1 for w in graph.adj[v] if w not in removed) for v in alive}
    while alive:
        max_deg = max(deg[v] for v in alive)
        top = [v for v in alive if deg[v] == max_deg]
        if len(alive) < k or len(top) >= k:
            break
        for v in top:
            removed.add(v)
            for w in graph.adj[v]:
                if w in deg and w not in removed:
                    deg[w] -= 1
        alive = [v for v in alive if v not in removed]
    return make_certificate(graph, removed, k, "peel")


def girth5_equalize(graph: Graph, k: int, t: int) -> RemovalCertificate:
    """Equalize k maximum degrees in a graph of girth at least 5 by deleting,
    for each of the top k-1 witnesses, its surplus neighbors outside the other
    witnesses' closed neighborhoods; at most t deletions.

    Requires girth >= 5, t >= (k-1)^2, and the top-degree surplus
    d_1 + ... + d_{k-1} - (k-1) d_k at most t.  When the k-th largest degree is
    below k-1 the peeling procedure is used instead.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if girth(graph) < 5:
        raise PreconditionError("girth", "graph has girth below 5")
    if t < (k - 1) ** 2:
        raise PreconditionError("t", f"t={t} is below (k-1)^2={(k - 1) ** 2}")
    if graph.n < k:
        return make_certificate(graph, (), k, "girth5")

    profile = degree_profile(graph)
    deltas = profile.deltas
    surplus = sum(deltas[:k - 1]) - (k - 1) * deltas[k - 1]
    if surplus > t:
        raise PreconditionError(
            "hypothesis",
            f"degree surplus {surplus} exceeds t={t}",
        )
    if deltas[k - 1] < k - 1:
        cert = peel_removal(graph, k)
        if len(cert.x) > (k - 1) ** 2:
            raise AssertionError("peeling exceeded its (k-1)^2 budget")
        return cert

    witnesses = list(profile.witnesses[:k])
    closed = [set(graph.adj[u]) | {u} for u in witnesses]
    removed: list[int] = []
    for i in range(k - 1):
        u = witnesses[i]
        need = deltas[i] - deltas[k - 1]
        if need == 0:
            continue
        blocked = set()
        for j in range(k):
            if j != i:
                blocked |= closed[j]
        candidates = [w for w in graph.adj[u] if w not in blocked]
        if len(candidates) < need:
            raise AssertionError(
                f"witness {u} has only {len(candidates)} deletable neighbors, "
                f"needs {need}; girth hypothesis violated?"
            )
        removed.extend(candidates[:need])

    cert = make_certificate(graph, removed, k, "girth5")
    if len(cert.x) > t:
        raise AssertionError("girth-5 trimming exceeded its budget t")
    return cert


# ---------------------------------------------------------------------------
# Equalizing three maximum degrees in a forest


def _k2_components(graph: Graph, alive: set[int]) -> list[list[int]]:
    return [c for c in components(graph) if len(c) == 2 and set(c) <= alive]


def _trim(graph, u, keep_closed: list[set[int]], count: int) -> list[int]:
    """Lowest-id ``count`` neighbors of u outside the given closed
    neighborhoods."""
    blocked: set[int] = set()
    for s in keep_closed:
        blocked |= s
    out = [w for w in graph.adj[u] if w not in blocked][:count]
    if len(out) < count:
        raise AssertionError(
            f"vertex {u} lacks {count} trimmable neighbors; case analysis broken"
        )
    return out


def _closed(graph: Graph, u: int) -> set[int]:
    return set(graph.adj[u]) | {u}


def _equalize3(graph: Graph, t: int, to_original: list[int]) -> list[int]:
    """Recursive worker; returns a deletion set in original vertex ids."""
    n = graph.n
    if n < 3:
        return []
    profile = degree_profile(graph)
    d1, d2, d3 = profile.deltas[0], profile.deltas[1], profile.deltas[2]
    u1, u2, u3 = profile.witnesses[0], profile.witnesses[1], profile.witnesses[2]
    if d1 == d3:
        return []
    bound = comb(t + 2, 2) + 2
    if d1 + 2 * d2 > bound:
        raise AssertionError(f"recursion hypothesis {d1}+2*{d2} <= {bound} broken")

    if t == 2:
        x = _equalize3_base(graph, d1, d2, d3, u1, u2, u3)
        return [to_original[v] for v in x]

    if d1 + d2 - 2 * d3 <= t:
        x = _equalize3_direct(graph, t, d1, d2, d3, u1, u2, u3)
        return [to_original[v] for v in x]

    # Dominant first witness: remove it and recurse with a smaller budget.
    if d2 + 2 * d3 > comb(t + 1, 2) + 2:
        raise AssertionError("recursion bound violated; hypothesis arithmetic broken")
    sub, old_to_new = remove_vertices(graph, {u1})
    sub_map = [0] * sub.n
    for old, new in old_to_new.items():
        sub_map[new] = to_original[old]
    return [to_original[u1]] + _equalize3(sub, t - 1, sub_map)


def _equalize3_base(graph, d1, d2, d3, u1, u2, u3) -> list[int]:
    """Budget-2 case analysis; every branch asserts the shape it relies on."""
    if d1 == 1:
        # Only one edge outside isolated vertices: drop one endpoint.
        assert d2 == 1 and d3 == 0
        return [u1]

    if d2 == 1:
        # One star plus matching edges and isolated vertices.
        assert d1 >= 2
        k2 = _k2_components(graph, set(range(graph.n)))
        if len(k2) == 1:
            return [u1, k2[0][0]]
        return [u1]

    assert d2 == 2 and 2 <= d1 <= 4
    if d1 == 2:
        assert d3 == 1
        if u2 not in graph.adj[u1]:
            # Two short-path components; trim one endpoint from each.
            return [_trim(graph, u1, [], 1)[0], _trim(graph, u2, [], 1)[0]]
        k2 = _k2_components(graph, set(range(graph.n)))
        if k2:
            return [u1]
        return [u1, u2]

    # d1 in {3, 4}
    if d3 == 2:
        return _trim(graph, u1, [_closed(graph, u2), _closed(graph, u3)], d1 - 2)
    assert d3 == 1
    k2 = _k2_components(graph, set(range(graph.n)))
    if not k2:
        return [u1, u2]
    if u2 in graph.adj[u1]:
        return [u1]
    return [u1, _trim(graph, u2, [], 1)[0]]


def _equalize3_direct(graph, t, d1, d2, d3, u1, u2, u3) -> list[int]:
    """Direct trimming when the top-degree surplus fits within the budget."""
    if d3 == 0:
        # A single matching edge among isolated vertices.
        assert d1 == 1 and d2 == 1
        return [u1]
    if d3 == 1:
        if u2 in graph.adj[u1]:
            k2 = _k2_components(graph, set(range(graph.n)))
            if len(k2) == 1:
                # Trim both witnesses down to the shared edge.
                x = _trim(graph, u1, [_closed(graph, u2)], d1 - 1)
                x += _trim(graph, u2, [_closed(graph, u1)], d2 - 1)
                return x
            return [u1, u2]
        x = _trim(graph, u1, [_closed(graph, u2)], d1 - 1)
        x += _trim(graph, u2, [_closed(graph, u1)], d2 - 1)
        return x
    x = _trim(graph, u1, [_closed(graph, u2), _closed(graph, u3)], d1 - d3)
    x += _trim(graph, u2, [_closed(graph, u1), _closed(graph, u3)], d2 - d3)
    return x


def equalize3_forest(forest: Graph, t: int) -> RemovalCertificate:
    """Equalize three maximum degrees in a forest with at most t deletions.

    Requires t >= 2 and d_1 + 2 d_2 <= C(t+2, 2) + 2.  Implements the direct
    trimming when the surplus d_1 + d_2 - 2 d_3 fits in the budget and
    otherwise removes the top witness and recurses with budget t - 1.
    """
    if not is_forest(forest):
        raise PreconditionError("forest", "input graph is not a forest")
    if t < 2:
        raise PreconditionError("t", "budget t must be at least 2")
    if forest.n >= 2:
        profile = degree_profile(forest)
        value = profile.deltas[0] + 2 * profile.deltas[1]
        bound = comb(t + 2, 2) + 2
        if value > bound:
            raise PreconditionError(
                "hypothesis", f"d1 + 2*d2 = {value} exceeds {bound}"
            )
    removed = _equalize3(forest, t, list(range(forest.n)))
    if len(removed) > t:
        raise AssertionError("equalizer exceeded its budget t")
    cert = make_certificate(forest, removed, 3, "theorem2")
    if not check_fk_condition(forest, cert.x, 3):
        raise AssertionError("equalizer produced an invalid certificate")
    return cert
