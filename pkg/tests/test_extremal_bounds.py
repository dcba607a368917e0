from fractions import Fraction
from math import comb

import pytest

from degeq import (
    a_sequence,
    asymptotic_report,
    bound_corollary2,
    bound_theorem1,
    bound_theorem2,
    bound_theorem3,
    build_extremal_forest,
    build_path,
    build_star,
    build_star_union,
    c_k,
    compute_fk_forest,
    corollary1_check,
    degree_profile,
    extremal_size,
    moore_edge_bound_ok,
)
from degeq.extremal import a_closed_form
from degeq.bounds import corollary1_threshold_iii, minimal_t, theorem1_hypothesis


class TestASequence:
    @pytest.mark.parametrize("i, expected", [(1, 1), (2, 3), (3, 3), (4, 7), (7, 13)])
    def test_values(self, i, expected):
        assert a_sequence(i) == expected

    def test_recursion_equals_closed_form(self):
        for i in range(1, 201):
            assert a_sequence(i) == a_closed_form(i)

    def test_closed_form_pairs(self):
        for i in range(1, 101):
            assert a_sequence(2 * i) == a_sequence(2 * i + 1) == i * i + i + 1

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            a_sequence(0)


class TestExtremalForest:
    def test_t1_is_single_edge(self):
        g = build_extremal_forest(1)
        assert (g.n, g.m) == (2, 1)

    def test_t3_shape(self):
        g = build_extremal_forest(3)
        assert g.m == 7
        assert degree_profile(g).deltas[:2] == (3, 3)

    @pytest.mark.parametrize("t, expected_m", [(2, 4), (3, 7), (4, 14), (7, 47)])
    def test_sizes(self, t, expected_m):
        assert extremal_size(t) == expected_m
        assert build_extremal_forest(t).m == expected_m

    def test_size_formula_matches_sum_up_to_50(self):
        for t in range(1, 51):
            assert extremal_size(t) == sum(a_sequence(i) for i in range(1, t + 1))

    def test_builders(self):
        assert build_star(5).degrees() == (4, 1, 1, 1, 1)
        assert build_path(4).degrees() == (1, 2, 2, 1)
        union = build_star_union([2, 0])
        assert union.n == 4 and union.m == 2


class TestBoundEvaluators:
    def test_theorem1_small_values(self):
        assert bound_theorem1(1) == 6
        assert bound_theorem1(2) == 13
        assert bound_theorem1(3) == 24

    def test_theorem1_integrality(self):
        for t in range(1, 200):
            value = t**3 + 6 * t**2 + 17 * t + 12
            assert value % 6 == 0

    def test_theorem2(self):
        assert bound_theorem2(2) == 8
        assert bound_theorem2(3) == comb(5, 2) + 2

    def test_corollary2(self):
        assert bound_corollary2(2) == 4
        assert bound_corollary2(3) == Fraction(27, 18) + 3 + Fraction(33, 18) + 1

    def test_c_k(self):
        assert c_k(2) == -2
        assert c_k(3) == -13
        # defining identity: C((k-1)^2 + 2, 2) + c_k = k - 1
        for k in range(2, 8):
            assert comb((k - 1) ** 2 + 2, 2) + c_k(k) == k - 1

    def test_theorem3(self):
        assert bound_theorem3(2, 1) == comb(3, 2) - 2
        assert bound_theorem3(3, 4) == comb(6, 2) - 13
        with pytest.raises(ValueError):
            bound_theorem3(3, 3)

    def test_minimal_t_monotone_search(self):
        g = build_star_union([2, 1])
        t = minimal_t(lambda s: theorem1_hypothesis(g, s), 1)
        assert theorem1_hypothesis(g, t)
        assert t == 1 or not theorem1_hypothesis(g, t - 1)


class TestCorollary1:
    def test_extremal_t3_tight(self):
        forest = build_extremal_forest(3)
        prof = degree_profile(forest)
        fk, _ = compute_fk_forest(forest, 3)
        assert fk == 3
        entry = corollary1_check(prof, 2, fk=fk)
        assert entry.status == "pass"
        # clause (ii) is tight at i=2: 3 + 2*3 = C(4,2) + 3 = 9
        i, lhs, rhs = entry.conclusion["ii_values"][0]
        assert (i, lhs, rhs) == (2, 9, 9)

    def test_threshold_iii_value(self):
        assert corollary1_threshold_iii(2) == 5

    def test_low_degree_profile_fails_clause_i(self):
        forest = build_star_union([4, 1, 1])  # second-largest degree is 1
        prof = degree_profile(forest)
        entry = corollary1_check(prof, 2)
        assert entry.conclusion["i"] is False
        # contrapositive: three maximum degrees must then cost at most t
        fk, _ = compute_fk_forest(forest, 3)
        assert fk <= 2

    def test_profile_too_short(self):
        with pytest.raises(ValueError):
            corollary1_check(degree_profile(build_path(3)), 3)

    def test_report_only_without_fk(self):
        entry = corollary1_check(degree_profile(build_extremal_forest(3)), 2)
        assert entry.status == "report"


class TestAsymptotics:
    def test_moore_inequality_petersen(self, petersen):
        assert moore_edge_bound_ok(petersen.n, petersen.m, 2)
        assert 15**2 <= 4 * 10**3

    def test_report_entries(self, petersen):
        entries = asymptotic_report(petersen, 3, 2)
        by_claim = {e.claim: e for e in entries}
        moore = by_claim["moore"]
        assert moore.hypothesis_holds is True  # girth 5 > 4
        assert moore.status == "pass"
        assert by_claim["cor3"].status == "report"
        assert by_claim["cor3"].conclusion["leading_divisor"] == 18
        assert by_claim["cor5"].hypothesis_holds is False

    def test_forest_constant(self):
        forest = build_path(8)
        entries = asymptotic_report(forest, 2, 2)
        cor5 = next(e for e in entries if e.claim == "cor5")
        assert cor5.hypothesis_holds is True
        assert cor5.conclusion["constant"] == pytest.approx(6 ** (1 / 3))
