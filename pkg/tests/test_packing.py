import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import brute_psi, disjoint_spanning_trees_exist, set_partitions
from mckec.coloring import is_mc_k
from mckec.graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    is_connected,
    path,
    random_connected,
)
from mckec.kecss import BudgetExceeded
from mckec.packing import (
    packing_coloring,
    psi_oracle,
    restricted_growth_strings,
    shrink_ratio,
    tree_packing_number,
)

connected = graphs(min_n=2, max_n=7).filter(is_connected)


class TestTreePacking:
    @pytest.mark.parametrize("g, k", [(cycle(5), 1), (complete(4), 2), (complete(6), 3), (complete_bipartite(4, 4), 2)])
    def test_examples(self, g, k):
        number, packing = tree_packing_number(g)
        assert number == k == packing.k
        packing.validate(g)

    def test_k4_has_two_trees_by_search(self):
        assert disjoint_spanning_trees_exist(complete(4), 2)
        assert not disjoint_spanning_trees_exist(complete(4), 3)

    def test_disconnected(self):
        with pytest.raises(GraphError):
            tree_packing_number(Graph(4, ((0, 1), (2, 3))))

    @settings(max_examples=80, deadline=None)
    @given(connected)
    def test_nash_williams_tutte(self, g):
        number, packing = tree_packing_number(g)
        packing.validate(g)
        assert number == psi_oracle(g).Psi == brute_psi(g).numerator // brute_psi(g).denominator

    @settings(max_examples=60, deadline=None)
    @given(connected, st.data())
    def test_adding_an_edge_never_hurts(self, g, data):
        missing = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if not g.has_edge(i, j)]
        assume(missing)
        extra = data.draw(st.sampled_from(missing))
        bigger = Graph(g.n, tuple(sorted(g.edges + (extra,))))
        assert tree_packing_number(bigger)[0] >= tree_packing_number(g)[0]

    def test_certificate_against_search_on_small_graphs(self):
        rng = random.Random(3)
        for _ in range(15):
            g = random_connected(rng.randint(3, 5), rng, 0.7)
            k, _ = tree_packing_number(g)
            assert disjoint_spanning_trees_exist(g, k)
            assert not disjoint_spanning_trees_exist(g, k + 1)


class TestPsi:
    def test_examples(self):
        r = psi_oracle(complete(4))
        assert r.psi == 2 and r.witness.to_list() == [[0], [1], [2], [3]]
        r = psi_oracle(cycle(5))
        assert r.psi == Fraction(5, 4) and r.Psi == 1
        assert r.to_dict()["psi"] == "5/4"
        assert psi_oracle(path(6)).psi == 1

    def test_witness_achieves_value(self):
        for g in (complete_bipartite(2, 3), cycle(6), complete(5)):
            r = psi_oracle(g)
            assert shrink_ratio(g, r.witness) == r.psi == brute_psi(g)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            psi_oracle(path(5), max_n=4)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_rgs_count_and_order(self, n):
        rgs = list(restricted_growth_strings(n))
        assert rgs == sorted(rgs)
        assert len(rgs) == sum(1 for _ in set_partitions(list(range(n))))


class TestPackingColoring:
    @pytest.mark.parametrize("g, k, colors", [(complete(4), 2, 2), (complete(6), 2, 7), (complete(6), 3, 3)])
    def test_examples(self, g, k, colors):
        c = packing_coloring(g, k)
        assert c.num_colors == colors == g.m - k * (g.n - 2)
        assert is_mc_k(g, c, k).passed

    def test_rejects_too_few_trees(self):
        with pytest.raises(GraphError):
            packing_coloring(cycle(5), 2)

    @settings(max_examples=50, deadline=None)
    @given(connected)
    def test_formula_and_verifier(self, g):
        number, _ = tree_packing_number(g)
        for k in range(2, number + 1):
            c = packing_coloring(g, k)
            assert c.num_colors == g.m - k * (g.n - 2)
            assert is_mc_k(g, c, k).passed
