"""Independent test-side oracles.

These deliberately avoid the library's own code paths where possible:
the Kauffman bracket is a brute-force state sum over smoothings, and the
naive linking computation walks crossing records directly.  Both are used
to cross-check the production implementations and to certify fixtures.
"""

from __future__ import annotations

import itertools

from sublinks.diagrams import LinkDiagram

# Laurent polynomials in A as {exponent: coefficient} dicts.
Poly = dict


def _poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c != 0}


DELTA = {2: -1, -2: -1}  # -A^2 - A^-2


def _poly_pow(p: Poly, k: int) -> Poly:
    out: Poly = {0: 1}
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


def _state_loops(d: LinkDiagram, state: tuple[int, ...]) -> int:
    """Number of circles after smoothing each crossing per the state bits.

    Smoothings pair the crossing's arc slots: the A smoothing joins
    (0,3) and (1,2), the B smoothing (0,1) and (2,3); slot 0 is the
    incoming under-strand, so this is independent of orientation.  The
    assignment is calibrated so a positive kink contributes -A^3,
    matching the writhe normalization.
    """
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    ends = d.arc_ends()
    for a, e in ends.items():
        union(e["tail"], e["head"])
    for bit, (cid, x) in zip(state, sorted(d.crossings.items())):
        pairs = ((0, 3), (1, 2)) if bit == 0 else ((0, 1), (2, 3))
        for s1, s2 in pairs:
            union((cid, s1), (cid, s2))
    roots = {find((cid, s)) for cid in d.crossings for s in range(4)}
    return len(roots) + d.free_loops


def kauffman_bracket(d: LinkDiagram) -> Poly:
    c = len(d.crossings)
    if c == 0:
        loops = max(d.free_loops, 0)
        return _poly_pow(DELTA, loops - 1) if loops else {0: 1}
    total: Poly = {}
    for state in itertools.product((0, 1), repeat=c):
        a_count = state.count(0)
        weight = {a_count - (c - a_count): 1}
        loops = _state_loops(d, state)
        total = _poly_add(total, _poly_mul(weight, _poly_pow(DELTA, loops - 1)))
    return total


def writhe(d: LinkDiagram) -> int:
    return sum(x.sign for x in d.crossings.values())


def normalized_bracket(d: LinkDiagram) -> Poly:
    """(-A^3)^(-w) times the bracket: invariant under all three moves."""
    w = writhe(d)
    factor = {-3 * w: (-1) ** (w % 2)}
    return _poly_mul(factor, kauffman_bracket(d))


def unlink_poly(components: int) -> Poly:
    return _poly_pow(DELTA, components - 1)


def naive_linking(d: LinkDiagram) -> dict[tuple[int, int], int]:
    """Pairwise doubled linking sums straight off the crossing records."""
    sums: dict[tuple[int, int], int] = {}
    for cid in d.crossings:
        a, b = d.under_component(cid), d.over_component(cid)
        if a != b:
            key = (min(a, b), max(a, b))
            sums[key] = sums.get(key, 0) + d.crossings[cid].sign
    return sums
