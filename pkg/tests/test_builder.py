from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twins.builder import (
    BipartiteColoring,
    PopularSubset,
    build_binary_ladder,
    build_general_ladder,
    build_twin_binary,
    build_twin_general,
    matchable_pair_via,
    popular_subset,
)
from twins.constructions import extremal_partition, random_coloring
from twins.core import EMPTY_TWIN, EdgeColoring, TwinPair, validate_twin


def constant_bipartite(size_a, size_b, r=2, color=1):
    a_side = tuple(range(1, size_a + 1))
    b_side = tuple(range(size_a + 1, size_a + size_b + 1))
    grid = tuple(tuple(color for _ in b_side) for _ in a_side)
    return BipartiteColoring(a_side, b_side, r, grid)


class TestPopularSubset:
    def test_monochromatic_takes_everything(self):
        bc = constant_bipartite(3, 5)
        subset = popular_subset(bc, 2, 2)
        assert subset.color == 1
        assert subset.members == bc.b_side

    def test_padded_partition_instance(self):
        # extremal_partition(2, 2) plus one b-vertex whose edges are all
        # color 1: the color-1 part grows to three vertices and wins.
        base = extremal_partition(2, 2)
        pad = max(base.b_side) + 1
        bc = BipartiteColoring(
            base.a_side,
            base.b_side + (pad,),
            base.r,
            tuple(row + (1,) for row in base.grid),
        )
        subset = popular_subset(bc, 2, 2)
        assert subset.color == 1
        assert subset.members == base.b_side[:2] + (pad,)

    def test_short_b_side_rejected(self):
        bc = extremal_partition(2, 2)  # |B| = rk, one vertex short
        with pytest.raises(ValueError):
            popular_subset(bc, 2, 2)

    def test_wrong_a_side_rejected(self):
        bc = constant_bipartite(3, 5)
        with pytest.raises(ValueError):
            popular_subset(bc, 3, 2)

    @given(seed=st.integers(0, 10**9))
    @settings(max_examples=60, deadline=None)
    def test_members_always_popular(self, seed):
        c = random_coloring(10, 2, seed)
        bc = BipartiteColoring.from_coloring(c, (1, 2, 3), (4, 5, 6, 7, 8))
        subset = popular_subset(bc, 2, 2)
        assert len(subset.members) >= 3
        for b in subset.members:
            a1, a2 = subset.witnesses[b]
            assert a1 != a2
            assert bc.color(a1, b) == bc.color(a2, b) == subset.color


class TestMatchablePairVia:
    def test_monochromatic(self):
        bc = constant_bipartite(3, 5)
        subset = popular_subset(bc, 2, 2)
        a1, a2, orientation = matchable_pair_via(subset, 4, 5)
        assert a1 != a2
        assert orientation.left == (a1, a2)
        assert orientation.right == (4, 5)

    def test_forced_avoidance(self):
        subset = PopularSubset(1, (10, 11), {10: (1, 2), 11: (1, 3)})
        a1, a2, _ = matchable_pair_via(subset, 10, 11)
        assert (a1, a2) == (1, 3)

    def test_outside_subset_rejected(self):
        bc = constant_bipartite(3, 5)
        subset = popular_subset(bc, 2, 2)
        with pytest.raises(ValueError):
            matchable_pair_via(subset, 4, 99)

    @given(seed=st.integers(0, 10**9))
    @settings(max_examples=40, deadline=None)
    def test_output_is_c_matching(self, seed):
        c = random_coloring(10, 2, seed)
        bc = BipartiteColoring.from_coloring(c, (1, 2, 3), (4, 5, 6, 7, 8, 9, 10))
        subset = popular_subset(bc, 2, 3)
        members = subset.members
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a1, a2, orientation = matchable_pair_via(subset, members[i], members[j])
                assert a1 != a2
                assert c.color(orientation.left[0], orientation.right[0]) == c.color(
                    orientation.left[1], orientation.right[1]
                )


class TestGeneralBuilder:
    def test_monochromatic_r1(self):
        c = EdgeColoring.monochromatic(10)
        twin = build_twin_general(c, check=True)
        assert validate_twin(c, twin).ok
        assert twin.size == 5

    def test_tiny(self):
        assert build_twin_general(EdgeColoring.monochromatic(1)) == EMPTY_TWIN
        assert build_twin_general(EdgeColoring.monochromatic(2, 1, 2)) == TwinPair((1,), (2,))

    @given(seed=st.integers(0, 10**9))
    @settings(max_examples=60, deadline=None)
    def test_seeded_bound_r2(self, seed):
        c = random_coloring(25, 2, seed)
        twin = build_twin_general(c)
        assert validate_twin(c, twin).ok
        assert twin.size >= 5

    @given(seed=st.integers(0, 10**9))
    @settings(max_examples=25, deadline=None)
    def test_seeded_bound_r3_with_ladder_check(self, seed):
        c = random_coloring(31, 3, seed)
        twin = build_twin_general(c, check=True)
        assert validate_twin(c, twin).ok
        assert twin.size >= 3

    def test_interval_geometry(self):
        c = random_coloring(40, 2, 123)
        state = build_general_ladder(c)
        span = 2 * 2 + 1
        for level in state.levels[1:]:
            t = level.level
            interval_lo = t * span - 4
            assert min(level.members) >= interval_lo
            assert max(state.levels[t - 2].members) < interval_lo

    def test_exhaustive_k6(self):
        for colors in product((1, 2), repeat=15):
            c = EdgeColoring(6, 2, colors)
            twin = build_twin_general(c)
            assert validate_twin(c, twin).ok
            assert twin.size >= 1


class TestBinaryBuilder:
    def test_all_one_color(self):
        c = EdgeColoring.monochromatic(16, 1, 2)
        twin = build_twin_binary(c, check=True)
        assert validate_twin(c, twin).ok
        assert twin.size >= 4

    def test_all_second_color(self):
        c = EdgeColoring.monochromatic(16, 2, 2)
        twin = build_twin_binary(c, check=True)
        assert validate_twin(c, twin).ok
        assert twin.size >= 4

    def test_palette_guard(self):
        with pytest.raises(ValueError):
            build_twin_binary(EdgeColoring.monochromatic(8, 1, 3))

    def test_tiny(self):
        assert build_twin_binary(EdgeColoring.monochromatic(3, 1, 2)).size == 1
        assert build_twin_binary(EdgeColoring.monochromatic(1, 1, 2)) == EMPTY_TWIN

    def test_split_class_case(self):
        # exactly one split vertex in the first window: the step must take
        # two class vertices plus the split one (the middle case)
        def color(i, j):
            if (i, j) == (1, 3):
                return 2
            return 1

        c = EdgeColoring.from_function(8, 2, color)
        twin = build_twin_binary(c, check=True)
        assert validate_twin(c, twin).ok
        assert twin.size >= 2

    def test_many_splits_case(self):
        # x-edges color 1, y-edges color 2 beyond the triangle: every window
        # vertex is split, driving the last case
        def color(i, j):
            if i == 1 and j >= 3:
                return 1
            if i == 2 and j >= 4:
                return 2
            return 1

        c = EdgeColoring.from_function(12, 2, color)
        twin = build_twin_binary(c, check=True)
        assert validate_twin(c, twin).ok
        assert twin.size >= 3

    @given(seed=st.integers(0, 10**9))
    @settings(max_examples=60, deadline=None)
    def test_seeded_bound(self, seed):
        c = random_coloring(60, 2, seed)
        twin = build_twin_binary(c)
        assert validate_twin(c, twin).ok
        assert twin.size >= 15

    @given(seed=st.integers(0, 10**9))
    @settings(max_examples=25, deadline=None)
    def test_ladder_soundness_and_geometry(self, seed):
        c = random_coloring(30, 2, seed)
        state = build_binary_ladder(c, check=True)
        for prev, level in zip(state.levels, state.levels[1:]):
            assert max(level.members) <= max(prev.members) + 4

    def test_exhaustive_k6(self):
        for colors in product((1, 2), repeat=15):
            c = EdgeColoring(6, 2, colors)
            twin = build_twin_binary(c)
            assert validate_twin(c, twin).ok
            assert twin.size >= 1
