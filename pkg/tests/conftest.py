from __future__ import annotations

import itertools
import random

import pytest

from sublinks import graphs

# The worked 5-vertex example: edges {12, 23, 24, 34, 45}.
FIG10_MATRIX = [
    [0, 1, 0, 0, 0],
    [1, 0, 1, 1, 0],
    [0, 1, 0, 1, 0],
    [0, 1, 1, 0, 1],
    [0, 0, 0, 1, 0],
]

FIG10_WORD = [1, 2, 3, 4, -4, -3, -2, 1, 2, 3, 4, -4, 3, 2, 3, 4, -4, 3, 4, 4]


@pytest.fixture
def fig10() -> graphs.Graph:
    return graphs.parse_graph(FIG10_MATRIX)


def random_graph(rng: random.Random, n: int) -> graphs.Graph:
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adj[i][j] = adj[j][i] = rng.randint(0, 1)
    return graphs.parse_graph(adj)


def all_graphs(n: int):
    """Every simple graph on n labeled vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(2 ** len(pairs)):
        adj = [[0] * n for _ in range(n)]
        for idx, (i, j) in enumerate(pairs):
            v = (bits >> idx) & 1
            adj[i][j] = adj[j][i] = v
        yield graphs.parse_graph(adj)


def random_braid(rng: random.Random, n: int, length: int):
    from sublinks import braids

    letters = []
    for _ in range(length):
        gen = rng.randint(1, n - 1)
        letters.append(gen if rng.random() < 0.5 else -gen)
    return braids.parse_braid(n, letters)
