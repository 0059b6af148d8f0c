from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import FIG10_MATRIX, all_graphs, random_graph
from sublinks.graphs import (
    EmptyMatrix,
    Graph,
    IndexOutOfRange,
    InvalidK,
    NonBinaryEntry,
    NonzeroDiagonal,
    NotSymmetric,
    TooLargeForExhaustive,
    VertexSubset,
    best_independent_set,
    clique_to_independent_instance,
    complement,
    is_clique,
    is_independent_set,
    parse_graph,
)


def adjacency(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    adj = [[0] * n for _ in range(n)]
    for i, j in edges:
        adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1
    return adj


class TestParseGraph:
    def test_worked_example(self):
        g = parse_graph(FIG10_MATRIX)
        assert g.n == 5
        assert g.edges() == [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]

    def test_single_vertex(self):
        g = parse_graph([[0]])
        assert g.n == 1 and g.edges() == []

    def test_round_trip(self):
        g = parse_graph(FIG10_MATRIX)
        assert g.to_wire() == {"n": 5, "adj": FIG10_MATRIX}
        assert Graph.from_wire(g.to_wire()) == g

    def test_not_symmetric_names_first_offender(self):
        with pytest.raises(NotSymmetric) as exc:
            parse_graph([[0, 1], [0, 0]])
        assert exc.value.index == (1, 2)

    def test_nonzero_diagonal(self):
        with pytest.raises(NonzeroDiagonal) as exc:
            parse_graph([[0, 1], [1, 1]])
        assert exc.value.index == (2, 2)

    def test_non_binary_entry(self):
        with pytest.raises(NonBinaryEntry) as exc:
            parse_graph([[0, 2], [2, 0]])
        assert exc.value.index == (1, 2)

    def test_empty_matrix(self):
        with pytest.raises(EmptyMatrix):
            parse_graph([])

    def test_ragged_rows(self):
        with pytest.raises(Exception):
            parse_graph([[0, 1], [1]])


class TestComplement:
    def test_edgeless_to_complete(self):
        g = parse_graph(adjacency(3, []))
        assert complement(g).edges() == [(1, 2), (1, 3), (2, 3)]

    def test_worked_example_complement(self):
        g = parse_graph(FIG10_MATRIX)
        assert complement(g).edges() == [(1, 3), (1, 4), (1, 5), (2, 5), (3, 5)]

    def test_involution(self):
        rng = random.Random(7)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 8))
            assert complement(complement(g)) == g


class TestIndependentSet:
    def test_worked_example_members(self):
        g = parse_graph(FIG10_MATRIX)
        assert is_independent_set(g, VertexSubset.of([1, 3, 5]))
        assert not is_independent_set(g, VertexSubset.of([2, 4]))

    def test_singletons_always_independent(self):
        rng = random.Random(3)
        g = random_graph(rng, 6)
        for v in range(1, 7):
            assert is_independent_set(g, VertexSubset.of([v]))

    def test_out_of_range(self):
        g = parse_graph([[0]])
        with pytest.raises(IndexOutOfRange):
            is_independent_set(g, VertexSubset.of([2]))

    def test_clique_duality_exhaustive_small(self):
        for g in all_graphs(4):
            gc = complement(g)
            for size in range(1, 5):
                for combo in itertools.combinations(range(1, 5), size):
                    s = VertexSubset.of(combo)
                    assert is_clique(g, s) == is_independent_set(gc, s)

    def test_clique_duality_random_n6(self):
        rng = random.Random(11)
        count = 0
        while count < 200:
            g = random_graph(rng, 6)
            gc = complement(g)
            count += 1
            for size in range(1, 7):
                for combo in itertools.combinations(range(1, 7), size):
                    s = VertexSubset.of(combo)
                    assert is_clique(g, s) == is_independent_set(gc, s)


class TestBestIndependentSet:
    def test_worked_example(self):
        g = parse_graph(FIG10_MATRIX)
        assert best_independent_set(g) == (3, VertexSubset.of([1, 3, 5]))

    def test_edgeless(self):
        g = parse_graph(adjacency(4, []))
        assert best_independent_set(g) == (4, VertexSubset.of([1, 2, 3, 4]))

    def test_complete(self):
        g = parse_graph(adjacency(3, [(1, 2), (1, 3), (2, 3)]))
        assert best_independent_set(g) == (1, VertexSubset.of([1]))

    def test_limit(self):
        g = parse_graph(adjacency(5, []))
        with pytest.raises(TooLargeForExhaustive):
            best_independent_set(g, limit=4)

    def test_agrees_with_second_enumeration(self):
        rng = random.Random(19)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 7))
            k, witness = best_independent_set(g)
            # ascending-size enumeration as the independent second order
            best = 0
            for size in range(1, g.n + 1):
                for combo in itertools.combinations(range(1, g.n + 1), size):
                    if is_independent_set(g, VertexSubset.of(combo)):
                        best = size
            assert k == best
            assert is_independent_set(g, witness) and witness.k == k


class TestKarpInstanceMap:
    def test_complete_graph(self):
        g = parse_graph(adjacency(3, [(1, 2), (1, 3), (2, 3)]))
        gc, k = clique_to_independent_instance(g, 3)
        assert gc.edges() == [] and k == 3

    def test_invalid_k(self):
        g = parse_graph([[0]])
        with pytest.raises(InvalidK):
            clique_to_independent_instance(g, 2)

    def test_subset_equivalence(self):
        rng = random.Random(23)
        for _ in range(20):
            g = random_graph(rng, 5)
            gc, _ = clique_to_independent_instance(g, 2)
            for size in range(1, 6):
                for combo in itertools.combinations(range(1, 6), size):
                    s = VertexSubset.of(combo)
                    assert is_clique(g, s) == is_independent_set(gc, s)


@given(st.integers(min_value=1, max_value=7), st.randoms(use_true_random=False))
def test_parse_accepts_exactly_valid_matrices(n, rnd):
    g = random_graph(rnd, n)
    matrix = [list(row) for row in g.adj]
    assert parse_graph(matrix).adj == g.adj
    # corrupt one entry and expect rejection
    i = rnd.randrange(n)
    j = rnd.randrange(n)
    bad = [list(row) for row in matrix]
    if i == j:
        bad[i][j] = 1
        with pytest.raises(NonzeroDiagonal):
            parse_graph(bad)
    else:
        bad[i][j] = 1 - bad[i][j]
        with pytest.raises(NotSymmetric):
            parse_graph(bad)
