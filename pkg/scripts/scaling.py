"""Measure reduction build time against the n(n-1) word-length law.

Prints a table of n, word length, and min-of-3 build times for the braid
word and the full link diagram, plus the doubling ratios (quadratic growth
predicts a ratio of 4 for the word build).
"""

from __future__ import annotations

import argparse
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from sublinks.graphs import parse_graph
from sublinks.reduction import build_braid_word
from sublinks.diagrams import trace_closure


def random_graph(rng: random.Random, n: int):
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adj[i][j] = adj[j][i] = rng.randint(0, 1)
    return parse_graph(adj)


def best_of(repeats: int, fn) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sizes = [n for n in (25, 50, 100, 200, 400) if n <= args.max_n]
    print(f"{'n':>5} {'letters':>9} {'word (ms)':>10} {'closure (ms)':>13}")
    word_times = {}
    for n in sizes:
        g = random_graph(rng, n)
        w = build_braid_word(g)
        t_word = best_of(3, lambda: build_braid_word(g))
        t_closure = best_of(3, lambda: trace_closure(w))
        word_times[n] = t_word
        print(f"{n:>5} {len(w.letters):>9} {t_word * 1e3:>10.2f} {t_closure * 1e3:>13.2f}")
    for small, big in zip(sizes, sizes[1:]):
        ratio = word_times[big] / max(word_times[small], 1e-9)
        print(f"word-build ratio n={small}->{big}: {ratio:.1f} (quadratic predicts 4.0)")


if __name__ == "__main__":
    main()
