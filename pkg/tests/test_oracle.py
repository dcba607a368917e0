import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degeq import (
    NEG_INF,
    OrderLimitError,
    brute_force_fk,
    brute_force_subforest,
    brute_force_subforest_all,
    build_star,
    build_star_union,
    check_fk_condition,
    gen_random_forest,
    validate_certificate,
)
from degeq.graph import Graph, parse_graph


def test_star_union_fixture():
    value, cert = brute_force_fk(build_star_union([3, 1]), 3)
    assert value == 2
    assert cert.method == "brute"


def test_cycle_already_regular(cycle5):
    value, cert = brute_force_fk(cycle5, 2)
    assert value == 0
    assert cert.x == ()
    assert cert.witnesses == (0, 1, 2, 3, 4)


def test_path4_k3(path4):
    value, cert = brute_force_fk(path4, 3)
    assert value == 2
    assert cert.order_below_k or len(cert.witnesses) >= 3


def test_first_minimizer_is_lexicographic():
    # Both endpoints of the K_2 are symmetric; the certificate must pick
    # the lexicographically first minimum deletion set.
    g = build_star_union([3, 1])
    _, cert = brute_force_fk(g, 3)
    assert cert.x == (0, 4)


def test_order_limit_guard():
    g = Graph.from_edges(19, [])
    with pytest.raises(OrderLimitError):
        brute_force_fk(g, 2)
    value, _ = brute_force_fk(g, 2, limit=19)
    assert value == 0


def test_subforest_star_two_leaves():
    assert brute_force_subforest(build_star(4), (1, 2), 0) == 3


def test_subforest_path_three_specials(path4):
    for s in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        for delta in range(3):
            assert brute_force_subforest(path4, s, delta) == NEG_INF


def test_subforest_single_edge():
    k2 = parse_graph("2 1\n0 1")
    assert brute_force_subforest(k2, (0, 1), 1) == 2
    assert brute_force_subforest(k2, (0, 1), 0) == NEG_INF


def test_subforest_all_agrees_with_single_queries():
    from itertools import combinations

    forest = gen_random_forest(8, split_prob=0.3, seed=11)
    for k in (2, 3):
        table = brute_force_subforest_all(forest, k)
        for s in combinations(range(8), k):
            for delta in range(forest.max_degree() + 1):
                expected = table.get((s, delta), NEG_INF)
                assert brute_force_subforest(forest, s, delta) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=2**32))
def test_zero_iff_condition_already_holds(n, seed):
    g = gen_random_forest(n, split_prob=0.35, seed=seed)
    for k in (2, 3):
        value, cert = brute_force_fk(g, k)
        assert (value == 0) == check_fk_condition(g, set(), k)
        assert value <= g.n - k + 1
        assert validate_certificate(g, cert, k)
        assert len(cert.x) == value
