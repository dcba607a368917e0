import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degeq import (
    Graph,
    GraphFormatError,
    check_fk_condition,
    components,
    degree_profile,
    gen_random_forest,
    girth,
    is_forest,
    parse_graph,
    remove_vertices,
    to_edgelist,
)
from degeq.extremal import build_star, build_star_union
from degeq.graph import residual_degree_stats

from conftest import girth_by_edge_removal


def random_graphs(max_n=9):
    """Hypothesis strategy for arbitrary simple graphs."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        return Graph.from_edges(n, chosen)

    return build()


class TestParse:
    def test_single_edge(self):
        g = parse_graph("2 1\n0 1")
        assert (g.n, g.m) == (2, 1)
        assert g.adj == ((1,), (0,))

    def test_path(self, path4):
        assert path4.degrees() == (1, 2, 2, 1)

    def test_comments_and_blank_lines(self):
        g = parse_graph("# header comment\n\n3 1\n# edge next\n0 2\n")
        assert g.m == 1 and g.has_edge(0, 2)

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("3 3\n0 0\n0 1\n1 2", "self-loop"),
            ("2 2\n0 1\n0 1", "duplicate edge"),
            ("2 1\n1 0", "increasing order"),
            ("2 1\n0 5", "out of range"),
            ("x y\n", "malformed header"),
            ("2 1\n0  1", "malformed edge"),
            ("2 1", "expected 1 edges"),
            ("2 0\n0 1", "unexpected content"),
            ("", "missing header"),
        ],
    )
    def test_rejections(self, text, fragment):
        with pytest.raises(GraphFormatError) as err:
            parse_graph(text)
        assert fragment in str(err.value)

    def test_error_carries_line_number(self):
        with pytest.raises(GraphFormatError) as err:
            parse_graph("# c\n3 3\n0 1\n1 1\n")
        assert err.value.line == 4

    @settings(max_examples=60)
    @given(random_graphs())
    def test_roundtrip(self, g):
        assert parse_graph(to_edgelist(g)) == g


class TestDegreeProfile:
    def test_star(self):
        prof = degree_profile(build_star(4))
        assert prof.deltas == (3, 1, 1, 1)
        assert prof.witnesses[0] == 0

    def test_extremal_three_star_union(self):
        # ten vertices: two centers of degree 3, eight vertices of degree 1
        prof = degree_profile(build_star_union([1, 3, 3]))
        assert prof.deltas == (3, 3) + (1,) * 8
        assert sum(prof.deltas) == 2 * 7

    def test_edgeless(self):
        prof = degree_profile(Graph.from_edges(4, []))
        assert prof.deltas == (0, 0, 0, 0)
        assert prof.witnesses == (0, 1, 2, 3)

    def test_tie_break_ascending_id(self, path4):
        prof = degree_profile(path4)
        assert prof.witnesses == (1, 2, 0, 3)

    @settings(max_examples=60)
    @given(random_graphs())
    def test_deltas_sum_to_twice_m(self, g):
        prof = degree_profile(g)
        assert sum(prof.deltas) == 2 * g.m
        assert sorted(prof.witnesses) == list(range(g.n))
        assert all(g.degree(w) == d for w, d in zip(prof.witnesses, prof.deltas))


class TestGirth:
    def test_cycle5(self, cycle5):
        assert girth(cycle5) == 5

    def test_forest_is_infinite(self, path4):
        assert girth(path4) == math.inf

    def test_petersen(self, petersen):
        assert girth(petersen) == 5
        assert girth_by_edge_removal(petersen) == 5

    def test_triangle_with_tail(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
        assert girth(g) == 3

    @settings(max_examples=120)
    @given(random_graphs())
    def test_against_edge_removal_oracle(self, g):
        assert girth(g) == girth_by_edge_removal(g)


class TestComponentsForest:
    def test_path_connected(self, path4):
        assert components(path4) == [[0, 1, 2, 3]]
        assert is_forest(path4)

    def test_cycle_not_forest(self, cycle5):
        assert not is_forest(cycle5)

    def test_star_plus_edge(self):
        g = build_star_union([3, 1])
        assert len(components(g)) == 2
        assert is_forest(g)

    @settings(max_examples=60)
    @given(random_graphs())
    def test_forest_iff_infinite_girth(self, g):
        assert is_forest(g) == (girth(g) == math.inf)
        assert g.m == g.n - len(components(g)) or not is_forest(g)


class TestRemoveVertices:
    def test_star_center(self):
        h, mapping = remove_vertices(build_star(4), {0})
        assert (h.n, h.m) == (3, 0)
        assert mapping == {1: 0, 2: 1, 3: 2}

    def test_identity(self, path4):
        h, mapping = remove_vertices(path4, set())
        assert h == path4
        assert mapping == {v: v for v in range(4)}

    def test_inner_path_vertex(self, path4):
        h, _ = remove_vertices(path4, {1})
        assert sorted(h.degrees()) == [0, 1, 1]

    def test_unknown_vertex(self, path4):
        with pytest.raises(ValueError):
            remove_vertices(path4, {9})

    @settings(max_examples=60)
    @given(random_graphs(), st.data())
    def test_girth_never_decreases(self, g, data):
        removed = data.draw(
            st.sets(st.integers(min_value=0, max_value=g.n - 1))
            if g.n
            else st.just(set())
        )
        h, _ = remove_vertices(g, removed)
        assert girth(h) >= girth(g)


class TestCondition:
    def test_star_center_removed(self):
        assert check_fk_condition(build_star(4), {0}, 3)

    def test_path_two_inner(self, path4):
        assert check_fk_condition(path4, set(), 2)

    def test_star_unique_max(self):
        assert not check_fk_condition(build_star(4), set(), 2)

    def test_keeping_k_minus_one_vertices(self):
        for n in (2, 4, 7):
            g = gen_random_forest(n, seed=n)
            for k in (2, 3):
                if n >= k - 1:
                    assert check_fk_condition(g, set(range(k - 1, n)), k)

    @settings(max_examples=60)
    @given(random_graphs(), st.data())
    def test_matches_remove_vertices_path(self, g, data):
        removed = data.draw(
            st.sets(st.integers(min_value=0, max_value=g.n - 1))
            if g.n
            else st.just(set())
        )
        order, max_deg, count = residual_degree_stats(g, set(removed))
        h, _ = remove_vertices(g, removed)
        assert order == h.n
        if h.n:
            assert max_deg == h.max_degree()
            assert count == sum(1 for v in range(h.n) if h.degree(v) == h.max_degree())
        for k in (2, 3):
            assert check_fk_condition(g, removed, k) == (
                h.n < k
                or sum(1 for v in range(h.n) if h.degree(v) == h.max_degree()) >= k
            )
