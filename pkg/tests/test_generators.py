import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degeq import (
    GeneratorConfig,
    GirthSaturationError,
    SplitMix64,
    gen_random_forest,
    gen_random_girth5,
    girth,
    instance_seed,
    is_forest,
)


class TestSplitMix64:
    def test_known_stream(self):
        # reference values for seed 0 of the standard algorithm
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF
        assert rng.next_u64() == 0x6E789E6AA1B965F4
        assert rng.next_u64() == 0x06C45D188009454F

    def test_determinism_and_split(self):
        a, b = SplitMix64(123), SplitMix64(123)
        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]
        child = a.split()
        assert child.next_u64() != a.next_u64()

    @settings(max_examples=30)
    @given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(1, 1000))
    def test_randrange_in_bounds(self, seed, bound):
        rng = SplitMix64(seed)
        for _ in range(20):
            assert 0 <= rng.randrange(bound) < bound

    def test_shuffle_and_sample_deterministic(self):
        items = list(range(10))
        SplitMix64(7).shuffle(items)
        again = list(range(10))
        SplitMix64(7).shuffle(again)
        assert items == again
        assert SplitMix64(9).sample(20, 5) == SplitMix64(9).sample(20, 5)

    def test_instance_seed_spread(self):
        seeds = {instance_seed(42, i) for i in range(100)}
        assert len(seeds) == 100


class TestForestGenerator:
    def test_single_vertex(self):
        g = gen_random_forest(1, seed=5)
        assert (g.n, g.m) == (1, 0)

    def test_determinism(self):
        assert gen_random_forest(5, seed=77) == gen_random_forest(5, seed=77)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(min_value=1, max_value=40),
        st.integers(min_value=0, max_value=2**32),
    )
    def test_always_a_forest(self, n, seed):
        assert is_forest(gen_random_forest(n, split_prob=0.3, seed=seed))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=30), st.data())
    def test_exact_edge_target(self, n, data):
        m = data.draw(st.integers(min_value=0, max_value=n - 1))
        seed = data.draw(st.integers(min_value=0, max_value=2**32))
        g = gen_random_forest(n, seed=seed, m=m)
        assert g.m == m and is_forest(g)

    def test_bad_edge_target(self):
        with pytest.raises(ValueError):
            gen_random_forest(4, m=4)


class TestGirth5Generator:
    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(min_value=1, max_value=20),
        st.integers(min_value=0, max_value=2**32),
    )
    def test_girth_invariant(self, n, seed):
        g = gen_random_girth5(n, None, seed=seed)
        assert girth(g) >= 5

    def test_determinism(self):
        assert gen_random_girth5(12, 10, seed=3) == gen_random_girth5(12, 10, seed=3)

    def test_moore_extremal_density_reachable(self):
        # 15 = 3n/2 edges at n=10 is the girth-5 maximum; seed found by scan
        g = gen_random_girth5(10, 15, seed=19)
        assert g.m == 15
        assert girth(g) == 5
        assert set(g.degrees()) == {3}

    def test_saturation_reported_with_achieved_count(self):
        with pytest.raises(GirthSaturationError) as err:
            gen_random_girth5(5, 10, seed=0)
        assert err.value.target == 10
        assert err.value.achieved < 10

    def test_higher_girth_option(self):
        g = gen_random_girth5(16, None, seed=2, min_girth=7)
        assert girth(g) >= 7


class TestGeneratorConfig:
    def test_roundtrip(self):
        config = GeneratorConfig.from_dict(
            {"kind": "random-forest", "n": 10, "seed": 4, "count": 3}
        )
        assert config.n == 10 and config.count == 3

    @pytest.mark.parametrize(
        "data",
        [
            {"kind": "nonsense", "n": 3},
            {"kind": "random-forest"},
            {"kind": "extremal-Ft"},
            {"kind": "star-union"},
            {"kind": "random-forest", "n": 5, "bogus": 1},
        ],
    )
    def test_rejects_bad_configs(self, data):
        with pytest.raises(ValueError):
            GeneratorConfig.from_dict(data)
