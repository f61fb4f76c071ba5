import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import brute_monochromatic_paths, nx_k_edge_connected
from mckec.coloring import (
    ColoringError,
    EdgeColoring,
    classes_feasible,
    color_classes,
    count_monochromatic_paths,
    is_mc_k,
    is_umc_k,
    normalize,
    parse_coloring,
    verify,
)
from mckec.graph import complete, cycle

# K_4 edges in order: 01 02 03 12 13 23.  Cycle 0-1-2-3-0 is color 0, chord 02 color 1, chord 13 color 2.
K4_THREE = EdgeColoring((0, 1, 0, 0, 2, 0))


@st.composite
def colored_graphs(draw, max_n=6, max_m=8, max_t=3):
    g = draw(graphs(min_n=2, max_n=max_n, max_m=max_m))
    assume(g.m > 0)
    raw = draw(st.lists(st.integers(0, max_t - 1), min_size=g.m, max_size=g.m))
    return g, EdgeColoring.from_colors(raw)


class TestEdgeColoring:
    def test_normalization(self):
        assert normalize([3, 3, 1, 7, 1]) == (0, 0, 1, 2, 1)
        assert EdgeColoring.from_colors([5, 2, 5]).assignment == (0, 1, 0)
        with pytest.raises(ColoringError):
            EdgeColoring((1, 0))
        with pytest.raises(ColoringError):
            EdgeColoring(())

    def test_from_classes(self):
        c = EdgeColoring.from_classes(4, [[2, 3], [0, 1]])
        assert c.assignment == (0, 0, 1, 1)
        with pytest.raises(ColoringError):
            EdgeColoring.from_classes(3, [[0, 1]])
        with pytest.raises(ColoringError):
            EdgeColoring.from_classes(2, [[0, 1], [1]])

    def test_parse_renormalizes_with_warning(self):
        seen = []
        c = parse_coloring("2 2 0\n", m=3, warn=seen.append)
        assert c.assignment == (0, 0, 1) and len(seen) == 1
        assert parse_coloring("0 1 0", m=3, warn=seen.append).assignment == (0, 1, 0)
        assert len(seen) == 1

    @pytest.mark.parametrize("text, m", [("0 1", 3), ("0 -1 0", 3), ("a b", 2), ("", None)])
    def test_parse_errors(self, text, m):
        with pytest.raises(ColoringError):
            parse_coloring(text, m)


class TestColorClasses:
    def test_examples(self):
        k4 = complete(4)
        mono = color_classes(k4, EdgeColoring.monochromatic(6))
        assert len(mono) == 1 and len(mono[0].edges) == 6 and not mono[0].trivial
        rainbow = color_classes(k4, EdgeColoring.rainbow(6))
        assert len(rainbow) == 6 and all(c.trivial for c in rainbow)
        c4 = color_classes(cycle(4), EdgeColoring((0, 0, 1, 1)))
        assert [len(c.edges) for c in c4] == [2, 2]

    def test_length_mismatch(self):
        with pytest.raises(ColoringError):
            color_classes(complete(4), EdgeColoring.monochromatic(5))

    @given(colored_graphs(max_m=12, max_t=5))
    def test_partition_law(self, gc):
        g, c = gc
        cls = color_classes(g, c)
        assert sum(len(x.edges) for x in cls) == g.m
        assert set().union(*(x.edges for x in cls)) == set(range(g.m))
        assert all(x.trivial == (len(x.edges) == 1) for x in cls)


class TestPathCounting:
    def test_examples(self):
        assert count_monochromatic_paths(cycle(4), EdgeColoring.monochromatic(4), 0, 2)[0] == 2
        assert count_monochromatic_paths(complete(4), K4_THREE, 0, 2) == (3, [2, 1, 0])
        assert count_monochromatic_paths(complete(4), EdgeColoring.rainbow(6), 0, 1)[0] == 1

    def test_same_vertex(self):
        with pytest.raises(Exception):
            count_monochromatic_paths(cycle(4), EdgeColoring.monochromatic(4), 1, 1)

    @settings(max_examples=200, deadline=None)
    @given(colored_graphs(), st.data())
    def test_oracle_equivalence(self, gc, data):
        g, c = gc
        u, v = data.draw(st.sampled_from(list(itertools.combinations(range(g.n), 2))))
        assert count_monochromatic_paths(g, c, u, v)[0] == brute_monochromatic_paths(g, c.assignment, u, v)


class TestVerifiers:
    def test_mc_examples(self):
        k4 = complete(4)
        assert is_mc_k(k4, K4_THREE, 2).passed
        r = is_mc_k(k4, EdgeColoring.rainbow(6), 2)
        assert not r.passed and r.witness == (0, 1) and r.total == 1
        assert is_mc_k(cycle(5), EdgeColoring.monochromatic(5), 2).passed

    def test_umc_examples(self):
        k4 = complete(4)
        assert is_umc_k(k4, K4_THREE, 2).passed
        r = is_umc_k(k4, K4_THREE, 3)
        assert not r.passed and max(r.per_color) < 3

    def test_witness_is_first_failing_pair(self):
        g = cycle(5)
        c = EdgeColoring((0, 0, 1, 1, 1))
        r = is_mc_k(g, c, 2)
        first = next(p for p in itertools.combinations(range(5), 2)
                     if count_monochromatic_paths(g, c, *p)[0] < 2)
        assert r.witness == first
        assert r.to_dict()["pass"] is False

    def test_summaries(self):
        r = is_mc_k(complete(3), EdgeColoring.monochromatic(3), 2, summaries=True)
        assert r.passed and len(r.pair_summaries) == 3
        assert r.to_dict()["pairs"][0] == {"pair": [0, 1], "per_color": [2], "total": 2}

    def test_unknown_mode(self):
        with pytest.raises(ColoringError):
            verify(complete(3), EdgeColoring.monochromatic(3), 2, "both")

    @settings(max_examples=150, deadline=None)
    @given(colored_graphs(max_n=6, max_m=10, max_t=4), st.integers(1, 3))
    def test_umc_implies_mc(self, gc, k):
        g, c = gc
        umc = is_umc_k(g, c, k)
        mc = is_mc_k(g, c, k)
        if umc.passed:
            assert mc.passed
        for r, agg in ((umc, max), (mc, sum)):
            if not r.passed and r.per_color:
                assert agg(r.per_color) < k
        assert classes_feasible(g, c.classes(), k, "mc") == mc.passed
        assert classes_feasible(g, c.classes(), k, "umc") == umc.passed

    @settings(max_examples=100, deadline=None)
    @given(graphs(min_n=2, max_n=7), st.integers(1, 4))
    def test_monochromatic_of_kec_graph_passes(self, g, k):
        assume(g.m > 0)
        mono = EdgeColoring.monochromatic(g.m)
        expected = nx_k_edge_connected(g, k)
        assert is_mc_k(g, mono, k).passed == expected
        assert is_umc_k(g, mono, k).passed == expected

    @given(graphs(min_n=2, max_n=7))
    def test_rainbow_k1_iff_complete(self, g):
        assume(g.m > 0)
        complete_graph = g.m == g.n * (g.n - 1) // 2
        assert is_mc_k(g, EdgeColoring.rainbow(g.m), 1).passed == complete_graph
