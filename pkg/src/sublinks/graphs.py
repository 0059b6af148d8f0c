"""Simple graphs as 0/1 adjacency matrices, with brute-force clique and
independent-set oracles.

Vertices are 1-indexed throughout; the adjacency matrix is stored row-major
with ``adj[i-1][j-1]`` giving the entry for the vertex pair (i, j).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

EXHAUSTIVE_LIMIT = 20


class GraphError(ValueError):
    pass


class EmptyMatrix(GraphError):
    pass


class NotSymmetric(GraphError):
    def __init__(self, i: int, j: int):
        super().__init__(f"matrix not symmetric at ({i},{j})")
        self.index = (i, j)


class NonzeroDiagonal(GraphError):
    def __init__(self, i: int):
        super().__init__(f"nonzero diagonal entry at ({i},{i})")
        self.index = (i, i)


class NonBinaryEntry(GraphError):
    def __init__(self, i: int, j: int, value):
        super().__init__(f"entry ({i},{j}) is {value!r}, expected 0 or 1")
        self.index = (i, j)


class IndexOutOfRange(GraphError):
    pass


class TooLargeForExhaustive(GraphError):
    pass


class InvalidK(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Validated simple graph: symmetric 0/1 matrix with zero diagonal."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def has_edge(self, i: int, j: int) -> bool:
        _check_vertex(self, i)
        _check_vertex(self, j)
        return self.adj[i - 1][j - 1] == 1

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if self.adj[i - 1][j - 1] == 1
        ]

    def to_wire(self) -> dict:
        return {"n": self.n, "adj": [list(row) for row in self.adj]}

    @staticmethod
    def from_wire(obj: dict) -> "Graph":
        return parse_graph(obj["adj"])


@dataclass(frozen=True)
class VertexSubset:
    """Sorted set of distinct vertex indices in 1..n."""

    members: tuple[int, ...]

    def __post_init__(self):
        if list(self.members) != sorted(set(self.members)):
            raise GraphError(f"subset members must be sorted and distinct: {self.members}")

    @property
    def k(self) -> int:
        return len(self.members)

    @staticmethod
    def of(indices: Iterable[int]) -> "VertexSubset":
        return VertexSubset(tuple(sorted(set(indices))))


def _check_vertex(g: Graph, v: int) -> None:
    if not 1 <= v <= g.n:
        raise IndexOutOfRange(f"vertex {v} not in 1..{g.n}")


def _check_subset(g: Graph, s: VertexSubset) -> None:
    for v in s.members:
        _check_vertex(g, v)


def parse_graph(matrix: Sequence[Sequence[int]]) -> Graph:
    """Validate a square matrix as an adjacency matrix.

    Reports the first offending index (row-major scan, 1-indexed) on failure.
    """
    n = len(matrix)
    if n == 0:
        raise EmptyMatrix("adjacency matrix must have at least one row")
    for i, row in enumerate(matrix, start=1):
        if len(row) != n:
            raise GraphError(f"row {i} has length {len(row)}, expected {n}")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = matrix[i - 1][j - 1]
            if v not in (0, 1):
                raise NonBinaryEntry(i, j, v)
            if i == j and v != 0:
                raise NonzeroDiagonal(i)
            if matrix[j - 1][i - 1] != v:
                raise NotSymmetric(i, j)
    return Graph(n=n, adj=tuple(tuple(row) for row in matrix))


def complement(g: Graph) -> Graph:
    """Flip every off-diagonal bit; the diagonal stays zero."""
    adj = tuple(
        tuple(0 if i == j else 1 - g.adj[i][j] for j in range(g.n))
        for i in range(g.n)
    )
    return Graph(n=g.n, adj=adj)


def is_independent_set(g: Graph, s: VertexSubset) -> bool:
    _check_subset(g, s)
    return all(
        g.adj[v - 1][w - 1] == 0 for v, w in itertools.combinations(s.members, 2)
    )


def is_clique(g: Graph, s: VertexSubset) -> bool:
    _check_subset(g, s)
    return all(
        g.adj[v - 1][w - 1] == 1 for v, w in itertools.combinations(s.members, 2)
    )


def best_independent_set(g: Graph, limit: int = EXHAUSTIVE_LIMIT) -> tuple[int, VertexSubset]:
    """Exhaustive maximum independent set.

    Ties break by lexicographically smallest member list.  Refuses graphs
    beyond `limit` vertices: this is a ground-truth oracle, not a solver.
    """
    if g.n > limit:
        raise TooLargeForExhaustive(f"n={g.n} exceeds exhaustive limit {limit}")
    best_k, best = 0, VertexSubset(())
    for k in range(g.n, 0, -1):
        for combo in itertools.combinations(range(1, g.n + 1), k):
            s = VertexSubset(combo)
            if is_independent_set(g, s):
                return k, s
    return best_k, best


def clique_to_independent_instance(g: Graph, k: int) -> tuple[Graph, int]:
    """Karp-style instance map: k-cliques of g are k-independent sets of its complement."""
    if not 1 <= k <= g.n:
        raise InvalidK(f"k={k} not in 1..{g.n}")
    return complement(g), k
