import random
from fractions import Fraction

import pytest

from hcs import (
    FOUND,
    LEAF_SMALL,
    SEPARABLE,
    SEPARATED,
    BudgetExceededError,
    SimpleGraph,
    brute_force_hcs,
    build_extremal,
    check_density_implication,
    extract,
    get_alternative,
    induced_subgraph,
    is_k1_connected,
    size_threshold,
    validate_decomposition,
)
from hcs.extractor import result_to_json_dict
from hcs.enclosure import sqrt_enclosure
from conftest import random_graph


class TestSizeThreshold:
    def test_exact_rational(self):
        assert size_threshold(2, Fraction(1, 5)) == 2
        assert size_threshold(5, Fraction(1, 5)) == 6
        assert size_threshold(2, 1) == 4

    def test_enclosure(self):
        sigma1 = (sqrt_enclosure(2) + 1) / sqrt_enclosure(3)
        assert size_threshold(2, sigma1) == 4  # (1+sigma)*2 ~ 4.787

    def test_float_accepted(self):
        assert size_threshold(2, 0.2) == 2

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            size_threshold(2, 0)
        with pytest.raises(ValueError):
            size_threshold(0, Fraction(1, 5))


class TestExtract:
    def test_complete_graph_found_whole(self):
        res = extract(SimpleGraph.complete(7), 2, Fraction(1, 5))
        assert res.outcome == FOUND
        assert res.subgraph == frozenset(range(7))

    def test_glued_finds_one_copy(self, glued_k4s):
        res = extract(glued_k4s, 2, Fraction(1, 5))
        assert res.outcome == FOUND
        assert res.subgraph == frozenset({0, 1, 2, 3})

    def test_diamond_small(self, diamond):
        res = extract(diamond, 2, 1)
        assert res.outcome == SEPARABLE
        assert res.tree.kind == LEAF_SMALL

    def test_cycle_separable_tree(self):
        g = SimpleGraph.cycle(8)
        res = extract(g, 2, Fraction(1, 5))
        assert res.outcome == SEPARABLE
        assert res.tree.kind == SEPARATED
        validate_decomposition(g, 2, Fraction(1, 5), res.tree)

    def test_every_large_node_is_separated(self):
        g = SimpleGraph.cycle(9)
        res = extract(g, 2, Fraction(1, 5))
        threshold = size_threshold(2, Fraction(1, 5))
        stack = [res.tree]
        while stack:
            node = stack.pop()
            if len(node.vertices) > max(threshold, 3):
                assert node.kind == SEPARATED
            stack.extend(node.children)

    def test_found_set_is_verified(self):
        rng = random.Random(4)
        for _ in range(30):
            g = random_graph(rng, rng.randint(5, 12), 0.6)
            res = extract(g, 2, Fraction(1, 5))
            if res.outcome == FOUND:
                sub = induced_subgraph(g, res.subgraph)
                assert is_k1_connected(sub.graph, 2)
                assert len(res.subgraph) >= 3

    def test_budget_error(self):
        g = SimpleGraph.cycle(12)
        with pytest.raises(BudgetExceededError):
            extract(g, 2, Fraction(1, 5), budget=3)

    def test_sigma_validation(self):
        with pytest.raises(ValueError):
            extract(SimpleGraph.complete(3), 2, 0)

    def test_empty_graph(self):
        res = extract(SimpleGraph.empty(0), 2, 1)
        assert res.outcome == SEPARABLE

    def test_petersen(self):
        # 3-regular and 3-connected: qualifies at k=2, never at k=3
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        petersen = SimpleGraph.from_edges(10, edges)
        res = extract(petersen, 2, Fraction(1, 5))
        assert res.outcome == FOUND and len(res.subgraph) == 10
        res = extract(petersen, 3, Fraction(1, 5))
        assert res.outcome == SEPARABLE
        assert brute_force_hcs(petersen, 3, Fraction(1, 5)) is None

    def test_complete_bipartite(self):
        k33 = SimpleGraph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
        assert extract(k33, 2, Fraction(1, 5)).outcome == FOUND
        assert extract(k33, 3, Fraction(1, 5)).outcome == SEPARABLE


class TestBruteForce:
    def test_glued(self, glued_k4s):
        assert brute_force_hcs(glued_k4s, 2, Fraction(1, 5)) == (0, 1, 2, 3)

    def test_cycle_has_none(self):
        assert brute_force_hcs(SimpleGraph.cycle(6), 2, Fraction(1, 5)) is None

    def test_complete_k3(self):
        assert brute_force_hcs(SimpleGraph.complete(5), 3, Fraction(1, 5)) == (0, 1, 2, 3, 4)

    def test_guard(self):
        with pytest.raises(ValueError):
            brute_force_hcs(SimpleGraph.empty(19), 2, Fraction(1, 5))

    def test_lexicographically_first(self):
        # two disjoint K4's: the one on lower labels wins
        edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
        edges += [(a + 4, b + 4) for a in range(4) for b in range(a + 1, 4)]
        g = SimpleGraph.from_edges(8, edges)
        assert brute_force_hcs(g, 2, Fraction(1, 5)) == (0, 1, 2, 3)

    def test_agreement_with_extract(self):
        rng = random.Random(99)
        for _ in range(60):
            g = random_graph(rng, rng.randint(4, 11), rng.choice([0.2, 0.5, 0.8]))
            for k, sigma in ((2, Fraction(1, 5)), (3, 1)):
                res = extract(g, k, sigma)
                hit = brute_force_hcs(g, k, sigma)
                assert (res.outcome == FOUND) == (hit is not None)
                if hit is not None:
                    ind = induced_subgraph(g, hit)
                    assert is_k1_connected(ind.graph, k)
                    assert len(hit) > size_threshold(k, sigma)


class TestDensityImplication:
    def test_complete_seven(self):
        report = check_density_implication(SimpleGraph.complete(7), 2, get_alternative(3))
        assert report.applicable
        assert report.average_degree == 6
        assert report.threshold[0] == Fraction(5218, 1000)
        assert report.outcome == FOUND
        assert report.subgraph_size == 7
        assert report.passed

    def test_extremal_below_alt1_threshold(self):
        g = build_extremal(2, 2, 2).graph
        report = check_density_implication(g, 2, get_alternative(1))
        assert not report.applicable
        assert report.passed
        # and the construction is indeed separable at sigma = 1
        assert extract(g, 2, 1).outcome == SEPARABLE

    def test_edgeless_never_applicable(self):
        for alt_id in (1, 2, 3):
            report = check_density_implication(
                SimpleGraph.empty(6), 3, get_alternative(alt_id)
            )
            assert not report.applicable and report.passed

    def test_empty_graph(self):
        report = check_density_implication(SimpleGraph.empty(0), 2, get_alternative(3))
        assert not report.applicable and report.passed


class TestSerialization:
    def test_found_json(self, glued_k4s):
        res = extract(glued_k4s, 2, Fraction(1, 5))
        data = result_to_json_dict(res)
        assert data == {"outcome": "FOUND", "subgraph": [0, 1, 2, 3]}

    def test_separable_json(self):
        res = extract(SimpleGraph.cycle(6), 2, 1)
        data = result_to_json_dict(res)
        assert data["outcome"] == "SEPARABLE"
        root = data["tree"]
        assert root["kind"] == "SEPARATED"
        assert len(root["separation"]["core"]) == 2
        assert {tuple(c["vertices"]) for c in root["children"]}
