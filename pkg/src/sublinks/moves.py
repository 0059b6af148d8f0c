"""Reidemeister moves, greedy crossing elimination, and the layered
splitting criterion.

Move sites reference crossing and arc ids; a site is only valid against the
exact diagram it was enumerated on (StaleSite otherwise).  Faces are taken
from the slot rotation system (orbits of rotate-after-flip on arc ends);
expansion moves between different connected pieces of the diagram are always
allowed, since split pieces can be embedded with any two faces adjacent.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .diagrams import (
    Crossing,
    DiagramError,
    EmptySubset,
    LinkDiagram,
    UNDER_IN,
    UNDER_OUT,
    UnknownComponent,
    splice_out,
    sublink,
)

ALL_KINDS = frozenset({"R1", "R2", "R3"})


class MoveError(DiagramError):
    pass


class StaleSite(MoveError):
    pass


@dataclass(frozen=True)
class MoveSite:
    kind: str  # R1 | R2 | R3
    direction: str  # reduce | expand (R3: slide)
    location: dict

    def to_wire(self) -> dict:
        return {"kind": self.kind, "direction": self.direction, "location": dict(self.location)}


class Verdict(enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SplitResult:
    order: Optional[tuple[int, ...]]  # full peel order on success
    residual: tuple[int, ...] = ()  # stuck subset on failure

    @property
    def success(self) -> bool:
        return self.order is not None


# ---------------------------------------------------------------------------
# faces and connectivity


def _dart_maps(d: LinkDiagram):
    """alpha: arc-end -> other end of the same arc; dart_arc: arc-end -> arc."""
    alpha: dict[tuple[int, int], tuple[int, int]] = {}
    dart_arc: dict[tuple[int, int], int] = {}
    for a, e in d.arc_ends().items():
        alpha[e["tail"]] = e["head"]
        alpha[e["head"]] = e["tail"]
        dart_arc[e["tail"]] = a
        dart_arc[e["head"]] = a
    return alpha, dart_arc


def _faces(d: LinkDiagram):
    """Orbits of the face permutation; returns (face id per dart, orbit list)."""
    alpha, _ = _dart_maps(d)
    face_id: dict[tuple[int, int], int] = {}
    orbits: list[list[tuple[int, int]]] = []
    for dart in sorted(alpha):
        if dart in face_id:
            continue
        orbit = []
        cur = dart
        while cur not in face_id:
            face_id[cur] = len(orbits)
            orbit.append(cur)
            c2, s2 = alpha[cur]
            cur = (c2, (s2 + 1) % 4)
        orbits.append(orbit)
    return face_id, orbits


def _piece_of(d: LinkDiagram) -> dict[int, int]:
    """Connected piece id per crossing (crossings joined by shared arcs)."""
    parent = {cid: cid for cid in d.crossings}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for e in d.arc_ends().values():
        ra, rb = find(e["tail"][0]), find(e["head"][0])
        if ra != rb:
            parent[ra] = rb
    return {cid: find(cid) for cid in d.crossings}


def _arc_faces(d: LinkDiagram) -> dict[int, set[int]]:
    face_id, _ = _faces(d)
    _, dart_arc = _dart_maps(d)
    out: dict[int, set[int]] = {a: set() for a in d.arc_component}
    for dart, a in dart_arc.items():
        out[a].add(face_id[dart])
    return out


def _expandable_pair(d: LinkDiagram, a: int, b: int) -> bool:
    """Can arc a be pushed over arc b?  Same piece requires a shared face."""
    if a == b:
        return False
    ends = d.arc_ends()
    piece = _piece_of(d)
    if piece[ends[a]["tail"][0]] != piece[ends[b]["tail"][0]]:
        return True
    faces = _arc_faces(d)
    return bool(faces[a] & faces[b])


# ---------------------------------------------------------------------------
# site enumeration


def _r1_reduce_sites(d: LinkDiagram) -> list[MoveSite]:
    sites = []
    for cid in sorted(d.crossings):
        x = d.crossings[cid]
        for s in range(4):
            if x.arcs[s] == x.arcs[(s + 1) % 4]:
                sites.append(
                    MoveSite("R1", "reduce", {"crossing": cid, "arc": x.arcs[s]})
                )
    return sites


def _r2_reduce_sites(d: LinkDiagram) -> list[MoveSite]:
    ends = d.arc_ends()
    by_pair: dict[tuple[int, int], list[int]] = {}
    for a, e in sorted(ends.items()):
        c1, c2 = e["tail"][0], e["head"][0]
        if c1 != c2:
            by_pair.setdefault((min(c1, c2), max(c1, c2)), []).append(a)
    sites = []
    for (c1, c2), arcs in sorted(by_pair.items()):
        if d.crossings[c1].sign + d.crossings[c2].sign != 0:
            continue
        overs = [a for a in arcs if all(ends[a][k][1] not in (0, 2) for k in ("tail", "head"))]
        unders = [a for a in arcs if all(ends[a][k][1] in (0, 2) for k in ("tail", "head"))]
        for a, b in itertools.product(overs, unders):
            sites.append(
                MoveSite(
                    "R2",
                    "reduce",
                    {"crossings": [c1, c2], "over_arc": a, "under_arc": b},
                )
            )
    return sites


def _r1_expand_sites(d: LinkDiagram) -> list[MoveSite]:
    sites = []
    for a in sorted(d.arc_component):
        for sign in (1, -1):
            sites.append(MoveSite("R1", "expand", {"arc": a, "sign": sign}))
    for i in range(d.free_loops):
        for sign in (1, -1):
            sites.append(MoveSite("R1", "expand", {"loop_index": i, "sign": sign}))
    return sites


def _r2_expand_sites(d: LinkDiagram) -> list[MoveSite]:
    sites = []
    arcs = sorted(d.arc_component)
    if arcs:
        ends = d.arc_ends()
        piece = _piece_of(d)
        faces = _arc_faces(d)
        for a, b in itertools.permutations(arcs, 2):
            same_piece = piece[ends[a]["tail"][0]] == piece[ends[b]["tail"][0]]
            if same_piece and not (faces[a] & faces[b]):
                continue
            sites.append(MoveSite("R2", "expand", {"over_arc": a, "under_arc": b}))
    for i in range(d.free_loops):
        for a in arcs:
            sites.append(MoveSite("R2", "expand", {"over_loop": i, "under_arc": a}))
            sites.append(MoveSite("R2", "expand", {"over_arc": a, "under_loop": i}))
    for i, j in itertools.permutations(range(d.free_loops), 2):
        sites.append(MoveSite("R2", "expand", {"over_loop": i, "under_loop": j}))
    return sites


def _r3_sites(d: LinkDiagram) -> list[MoveSite]:
    _, orbits = _faces(d)
    _, dart_arc = _dart_maps(d)
    ends = d.arc_ends()
    sites = []
    for orbit in orbits:
        if len(orbit) != 3:
            continue
        crossings = sorted({c for c, _ in orbit})
        if len(crossings) != 3:
            continue
        tri_arcs = sorted({dart_arc[dart] for dart in orbit})
        if len(tri_arcs) != 3:
            continue
        for p in tri_arcs:
            slots = (ends[p]["tail"][1], ends[p]["head"][1])
            unders = [s in (0, 2) for s in slots]
            if unders[0] == unders[1]:  # over at both ends, or under at both
                sites.append(
                    MoveSite(
                        "R3",
                        "reduce",
                        {"crossings": crossings, "arcs": tri_arcs, "slide_arc": p},
                    )
                )
    return sites


def enumerate_moves(
    d: LinkDiagram,
    kinds: Iterable[str] = ALL_KINDS,
    directions: Iterable[str] = ("reduce", "expand"),
) -> list[MoveSite]:
    kinds = set(kinds)
    directions = set(directions)
    sites: list[MoveSite] = []
    if "R1" in kinds and "reduce" in directions:
        sites += _r1_reduce_sites(d)
    if "R2" in kinds and "reduce" in directions:
        sites += _r2_reduce_sites(d)
    if "R1" in kinds and "expand" in directions:
        sites += _r1_expand_sites(d)
    if "R2" in kinds and "expand" in directions:
        sites += _r2_expand_sites(d)
    if "R3" in kinds and "reduce" in directions:
        sites += _r3_sites(d)
    return sites


# ---------------------------------------------------------------------------
# move application


def _next_ids(d: LinkDiagram) -> tuple[int, int]:
    next_c = max(d.crossings, default=-1) + 1
    next_a = max(d.arc_component, default=-1) + 1
    return next_c, next_a


def _apply_r1_reduce(d: LinkDiagram, loc: dict) -> LinkDiagram:
    cid = loc["crossing"]
    x = d.crossings.get(cid)
    if x is None or not any(
        x.arcs[s] == x.arcs[(s + 1) % 4] == loc["arc"] for s in range(4)
    ):
        raise StaleSite(f"no R1 monogon {loc} in this diagram")
    return splice_out(d, {cid})


def _apply_r2_reduce(d: LinkDiagram, loc: dict) -> LinkDiagram:
    c1, c2 = loc["crossings"]
    for site in _r2_reduce_sites(d):
        if site.location == loc:
            return splice_out(d, {c1, c2})
    raise StaleSite(f"no R2 bigon {loc} in this diagram")


def _replace_end(
    crossings: dict[int, Crossing], end: tuple[int, int], new_arc: int
) -> None:
    cid, slot = end
    x = crossings[cid]
    arcs = list(x.arcs)
    arcs[slot] = new_arc
    crossings[cid] = Crossing(arcs=tuple(arcs), over_in=x.over_in)


def _apply_r1_expand(d: LinkDiagram, loc: dict) -> LinkDiagram:
    sign = loc["sign"]
    if sign not in (1, -1):
        raise StaleSite(f"bad R1 expansion sign {sign}")
    crossings = dict(d.crossings)
    comp = dict(d.arc_component)
    loops = list(d.loop_components)
    cid, na = _next_ids(d)
    if "arc" in loc:
        a = loc["arc"]
        if a not in comp:
            raise StaleSite(f"no arc {a} in this diagram")
        head = d.arc_ends()[a]["head"]
        kink, tail_out = na, na + 1
        if sign == 1:
            crossings[cid] = Crossing(arcs=(a, kink, kink, tail_out), over_in=1)
        else:
            crossings[cid] = Crossing(arcs=(a, tail_out, kink, kink), over_in=3)
        comp[kink] = comp[tail_out] = comp[a]
        _replace_end(crossings, head, tail_out)
    else:
        i = loc["loop_index"]
        if not 0 <= i < d.free_loops:
            raise StaleSite(f"no free loop at index {i}")
        label = loops.pop(i)
        kink, ring = na, na + 1
        if sign == 1:
            crossings[cid] = Crossing(arcs=(ring, kink, kink, ring), over_in=1)
        else:
            crossings[cid] = Crossing(arcs=(ring, ring, kink, kink), over_in=3)
        comp[kink] = comp[ring] = label
    return LinkDiagram(crossings, comp, tuple(loops))


def _apply_r2_expand(d: LinkDiagram, loc: dict) -> LinkDiagram:
    crossings = dict(d.crossings)
    comp = dict(d.arc_component)
    loops = list(d.loop_components)
    ends = d.arc_ends()
    c_left, na = _next_ids(d)
    c_right = c_left + 1

    def check_arc(a):
        if a not in comp:
            raise StaleSite(f"no arc {a} in this diagram")

    def check_loop(i):
        if not 0 <= i < d.free_loops:
            raise StaleSite(f"no free loop at index {i}")

    # over strand: either an arc split into (a, m_a, a2) or a loop opened
    # into (m_a, ring_a); likewise for the under strand.
    if "over_arc" in loc:
        a = loc["over_arc"]
        check_arc(a)
        if loc.get("under_arc") == a:
            raise StaleSite("cannot push an arc over itself")
        if "under_arc" in loc and not _expandable_pair(d, a, loc["under_arc"]):
            raise StaleSite(f"arcs {a} and {loc['under_arc']} share no face")
        m_a, a2 = na, na + 1
        na += 2
        over_label = comp[a]
        over_first, over_last = a, a2
        over_head = ends[a]["head"]
    else:
        i = loc["over_loop"]
        check_loop(i)
        over_label = loops[i]
        m_a, ring_a = na, na + 1
        na += 2
        over_first, over_last = ring_a, ring_a
        over_head = None
    if "under_arc" in loc:
        b = loc["under_arc"]
        check_arc(b)
        m_b, b2 = na, na + 1
        na += 2
        under_label = comp[b]
        under_first, under_last = b, b2
        under_head = ends[b]["head"]
    else:
        j = loc["under_loop"]
        check_loop(j)
        if "over_loop" in loc and loc["over_loop"] == j:
            raise StaleSite("cannot push a free loop over itself")
        under_label = loops[j]
        m_b, ring_b = na, na + 1
        na += 2
        under_first, under_last = ring_b, ring_b
        under_head = None

    # drop opened loops (higher index first so positions stay valid)
    for i in sorted(
        [loc[k] for k in ("over_loop", "under_loop") if k in loc], reverse=True
    ):
        loops.pop(i)

    crossings[c_left] = Crossing(arcs=(under_first, m_a, m_b, over_first), over_in=3)
    crossings[c_right] = Crossing(arcs=(m_b, m_a, under_last, over_last), over_in=1)
    if over_head is not None:
        _replace_end(crossings, over_head, over_last)
    if under_head is not None:
        _replace_end(crossings, under_head, under_last)
    comp[m_a] = over_label
    comp[m_b] = under_label
    if over_head is not None:
        comp[over_last] = over_label
    else:
        comp[over_first] = over_label  # ring arc
    if under_head is not None:
        comp[under_last] = under_label
    else:
        comp[under_first] = under_label
    return LinkDiagram(crossings, comp, tuple(loops))


def _apply_r3(d: LinkDiagram, loc: dict) -> LinkDiagram:
    if not any(site.location == loc for site in _r3_sites(d)):
        raise StaleSite(f"no R3 triangle {loc} in this diagram")
    tri = list(loc["crossings"])
    tri_arcs = set(loc["arcs"])
    ends = d.arc_ends()

    # per crossing, the triangle boundary arc on each of its two strands
    partner: dict[tuple[int, str], tuple[int, int]] = {}
    for a in tri_arcs:
        for end_name, other in (("tail", "head"), ("head", "tail")):
            c, s = ends[a][end_name]
            c2, s2 = ends[a][other]
            side = "under" if s in (0, 2) else "over"
            partner[(c, side)] = (c2, s2)

    crossings = dict(d.crossings)
    for c in tri:
        x = d.crossings[c]
        arcs = []
        for s in range(4):
            side = "under" if s in (0, 2) else "over"
            role_in = s in x.in_slots()
            c2, s2_hint = partner[(c, side)]
            x2 = d.crossings[c2]
            if s2_hint in (0, 2):  # this strand runs under at the partner
                s2 = UNDER_IN if role_in else UNDER_OUT
            else:
                s2 = x2.over_in if role_in else x2.over_out
            arcs.append(x2.arcs[s2])
        crossings[c] = Crossing(arcs=tuple(arcs), over_in=x.over_in)
    return LinkDiagram(crossings, dict(d.arc_component), d.loop_components)


def apply_move(d: LinkDiagram, site: MoveSite) -> LinkDiagram:
    if site.kind == "R1":
        if site.direction == "reduce":
            return _apply_r1_reduce(d, site.location)
        return _apply_r1_expand(d, site.location)
    if site.kind == "R2":
        if site.direction == "reduce":
            return _apply_r2_reduce(d, site.location)
        return _apply_r2_expand(d, site.location)
    if site.kind == "R3":
        return _apply_r3(d, site.location)
    raise MoveError(f"unknown move kind {site.kind!r}")


def random_applicable_move(
    d: LinkDiagram,
    rng,
    kinds: Iterable[str] = ALL_KINDS,
    directions: Iterable[str] = ("reduce", "expand"),
) -> Optional[MoveSite]:
    """Sample one currently-applicable move without full enumeration.

    R2 expansions are sampled by rejection over random arc pairs rather than
    enumerated, keeping this usable for fuzzing on large diagrams.  Picks a
    category (kind, direction) uniformly among the nonempty ones, then a site
    within it.  Returns None when nothing applies.
    """
    kinds = set(kinds)
    directions = set(directions)
    categories: list[list[MoveSite]] = []
    if "reduce" in directions:
        if "R1" in kinds:
            categories.append(_r1_reduce_sites(d))
        if "R2" in kinds:
            categories.append(_r2_reduce_sites(d))
    if "R3" in kinds:
        categories.append(_r3_sites(d))
    if "expand" in directions:
        if "R1" in kinds:
            categories.append(_r1_expand_sites(d))
        if "R2" in kinds:
            categories.append(_sample_r2_expand_sites(d, rng))
    categories = [c for c in categories if c]
    if not categories:
        return None
    return rng.choice(rng.choice(categories))


def _sample_r2_expand_sites(d: LinkDiagram, rng, tries: int = 40) -> list[MoveSite]:
    arcs = sorted(d.arc_component)
    loops = list(range(d.free_loops))
    if len(arcs) + len(loops) < 2:
        return []
    if not arcs:
        i, j = rng.sample(loops, 2)
        return [MoveSite("R2", "expand", {"over_loop": i, "under_loop": j})]
    ends = d.arc_ends()
    piece = _piece_of(d)
    faces = _arc_faces(d)
    found: list[MoveSite] = []
    for _ in range(tries):
        if loops and rng.random() < 0.25:
            i = rng.choice(loops)
            a = rng.choice(arcs)
            key = rng.choice(("over_loop", "under_loop"))
            other = "under_arc" if key == "over_loop" else "over_arc"
            found.append(MoveSite("R2", "expand", {key: i, other: a}))
            break
        a, b = rng.choice(arcs), rng.choice(arcs)
        if a == b:
            continue
        same_piece = piece[ends[a]["tail"][0]] == piece[ends[b]["tail"][0]]
        if same_piece and not (faces[a] & faces[b]):
            continue
        found.append(MoveSite("R2", "expand", {"over_arc": a, "under_arc": b}))
        break
    return found


# ---------------------------------------------------------------------------
# greedy simplification


def reduce_sites(d: LinkDiagram) -> list[MoveSite]:
    """Crossing-removing R1/R2 sites in the deterministic scan order."""
    return _r1_reduce_sites(d) + _r2_reduce_sites(d)


def greedy_simplify(d: LinkDiagram) -> LinkDiagram:
    """Apply reduce-direction R1/R2 moves (first site in scan order) to a
    fixed point.  Monotone in crossing count, so terminates."""
    while True:
        sites = reduce_sites(d)
        if not sites:
            return d
        d = apply_move(d, sites[0])


# ---------------------------------------------------------------------------
# layered splitting


def _check_component_subset(d: LinkDiagram, s: Iterable[int]) -> list[int]:
    members = sorted(set(s))
    if not members:
        raise EmptySubset("component subset must be nonempty")
    labels = set(d.component_labels())
    for c in members:
        if c not in labels:
            raise UnknownComponent(f"no component labeled {c}")
    return members


def layered_split_order(d: LinkDiagram, s: Iterable[int]) -> SplitResult:
    """Greedy peel: repeatedly split off a member that only crosses over the
    remaining members.  Ties break by smallest component label."""
    remaining = _check_component_subset(d, s)
    inter = [
        (d.under_component(cid), d.over_component(cid)) for cid in sorted(d.crossings)
    ]
    order: list[int] = []
    while remaining:
        rest = set(remaining)
        pick = None
        for x in remaining:
            others = rest - {x}
            blocked = any(
                under == x and over in others for under, over in inter
            )
            if not blocked:
                pick = x
                break
        if pick is None:
            return SplitResult(order=None, residual=tuple(remaining))
        order.append(pick)
        remaining.remove(pick)
    return SplitResult(order=tuple(order))


def _is_zero_crossing_unknot(d: LinkDiagram) -> bool:
    return not d.crossings and d.free_loops == 1


def is_trivial_layered(d: LinkDiagram, s: Iterable[int]) -> Verdict:
    """Three-valued triviality for the sublink on component subset s.

    TRUE: the layered peel succeeds and every member alone simplifies to a
    crossing-free circle.  FALSE: some pairwise linking number inside s is
    nonzero (sound by invariance of the linking matrix).  UNKNOWN otherwise;
    diagrams built by the reduction never land here.
    """
    members = _check_component_subset(d, s)
    peel = layered_split_order(d, members)
    if peel.success:
        if all(
            _is_zero_crossing_unknot(greedy_simplify(sublink(d, [m])))
            for m in members
        ):
            return Verdict.TRUE
        return Verdict.UNKNOWN
    # pairwise linking inside s, straight from the crossing list
    sums: dict[tuple[int, int], int] = {}
    in_s = set(members)
    for cid in sorted(d.crossings):
        a, b = d.under_component(cid), d.over_component(cid)
        if a != b and a in in_s and b in in_s:
            key = (min(a, b), max(a, b))
            sums[key] = sums.get(key, 0) + d.crossings[cid].sign
    if any(v != 0 for v in sums.values()):
        return Verdict.FALSE
    return Verdict.UNKNOWN
