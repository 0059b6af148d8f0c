"""Oriented link diagrams as combinatorial PD-style data.

A crossing holds four arc ids in counterclockwise slot order.  Slot 0 is the
incoming under-strand end and slot 2 the outgoing under-strand end; slots 1
and 3 carry the over-strand, with ``over_in`` naming the incoming one.  The
slot rotation carries the plane embedding implicitly; planarity is never
re-verified globally (all diagrams here come from braid closures, fixture
files, or valid moves).

Arcs are directed edges between crossing slots.  Crossing-free circles are
first-class: ``loop_components`` lists one component label per free loop.
Component labels are 1..c.

Crossing sign: +1 when ``over_in == 1``, -1 when ``over_in == 3``.  This is
calibrated so a braid letter +i produces a +1 crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .braids import BraidWord, permutation_of


class DiagramError(ValueError):
    pass


class UnknownCrossing(DiagramError):
    pass


class UnknownComponent(DiagramError):
    pass


class EmptySubset(DiagramError):
    pass


class OddCrossingParity(DiagramError):
    pass


UNDER_IN, UNDER_OUT = 0, 2


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]  # arc ids at slots 0..3, counterclockwise
    over_in: int  # 1 or 3

    @property
    def over_out(self) -> int:
        return 4 - self.over_in

    @property
    def sign(self) -> int:
        return 1 if self.over_in == 1 else -1

    def in_slots(self) -> tuple[int, int]:
        return (UNDER_IN, self.over_in)

    def out_slots(self) -> tuple[int, int]:
        return (UNDER_OUT, self.over_out)


@dataclass
class LinkDiagram:
    """Treated as immutable; operations return fresh diagrams."""

    crossings: dict[int, Crossing]
    arc_component: dict[int, int]
    loop_components: tuple[int, ...] = ()

    @property
    def free_loops(self) -> int:
        return len(self.loop_components)

    def component_labels(self) -> list[int]:
        return sorted(set(self.arc_component.values()) | set(self.loop_components))

    def component_count(self) -> int:
        return len(self.component_labels())

    def crossing(self, cid: int) -> Crossing:
        try:
            return self.crossings[cid]
        except KeyError:
            raise UnknownCrossing(f"no crossing with id {cid}") from None

    def arc_ends(self) -> dict[int, dict[str, tuple[int, int]]]:
        """arc id -> {"tail": (crossing, slot), "head": (crossing, slot)}."""
        ends: dict[int, dict[str, tuple[int, int]]] = {}
        for cid, x in sorted(self.crossings.items()):
            for slot in x.in_slots():
                ends.setdefault(x.arcs[slot], {})["head"] = (cid, slot)
            for slot in x.out_slots():
                ends.setdefault(x.arcs[slot], {})["tail"] = (cid, slot)
        return ends

    def under_component(self, cid: int) -> int:
        x = self.crossing(cid)
        return self.arc_component[x.arcs[UNDER_IN]]

    def over_component(self, cid: int) -> int:
        x = self.crossing(cid)
        return self.arc_component[x.arcs[x.over_in]]


def validate(d: LinkDiagram) -> None:
    """Check the structural invariants; raises DiagramError on the first failure."""
    for cid, x in d.crossings.items():
        if x.over_in not in (1, 3):
            raise DiagramError(f"crossing {cid}: over_in must be 1 or 3, got {x.over_in}")
    ends = d.arc_ends()
    for arc, e in ends.items():
        if "head" not in e or "tail" not in e:
            raise DiagramError(f"arc {arc} does not have exactly one head and one tail")
    # double ends would have been overwritten; count occurrences explicitly
    seen: dict[int, int] = {}
    for x in d.crossings.values():
        for arc in x.arcs:
            seen[arc] = seen.get(arc, 0) + 1
    for arc, count in seen.items():
        if count != 2:
            raise DiagramError(f"arc {arc} has {count} crossing ends, expected 2")
    if set(seen) != set(d.arc_component):
        raise DiagramError("arc_component keys do not match the arcs present")
    labels = set(d.arc_component.values()) | set(d.loop_components)
    if d.crossings or d.loop_components:
        c = len(labels)
        if labels != set(range(1, c + 1)):
            raise DiagramError(f"component labels {sorted(labels)} are not 1..{c}")
    # the labeling must be exactly the partition generated by opposite pairs
    parts = _arc_partition(d)
    part_labels = []
    for part in parts:
        plabels = {d.arc_component[a] for a in part}
        if len(plabels) > 1:
            raise DiagramError(f"arcs {sorted(part)} span component labels {sorted(plabels)}")
        part_labels.append(plabels.pop())
    all_labels = part_labels + list(d.loop_components)
    if len(set(all_labels)) != len(all_labels):
        raise DiagramError("distinct components share a label")


def _arc_partition(d: LinkDiagram) -> list[set[int]]:
    """Partition of arcs generated by 'meets at opposite sides of a crossing'."""
    parent: dict[int, int] = {a: a for a in d.arc_component}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for x in d.crossings.values():
        union(x.arcs[UNDER_IN], x.arcs[UNDER_OUT])
        union(x.arcs[x.over_in], x.arcs[x.over_out])
    groups: dict[int, set[int]] = {}
    for a in parent:
        groups.setdefault(find(a), set()).add(a)
    return sorted(groups.values(), key=min)


def components_of(d: LinkDiagram) -> tuple[int, dict[int, int]]:
    """Component count and the per-arc labeling (free loops via loop_components).

    Validates that the stored labels agree with the generated partition.
    """
    validate(d)
    return d.component_count(), dict(d.arc_component)


def crossing_sign(d: LinkDiagram, cid: int) -> int:
    return d.crossing(cid).sign


def diagram_size(d: LinkDiagram) -> int:
    return len(d.crossings) + d.component_count()


def trace_closure(w: BraidWord) -> LinkDiagram:
    """Closure of a braid word: one crossing per letter, closure arcs add none.

    Components are labeled by the smallest strand index in their permutation
    cycle, in increasing order of that index.
    """
    n = w.strands
    perm = permutation_of(w)
    cycles = perm.cycles()
    comp_of_strand: dict[int, int] = {}
    for label, cyc in enumerate(sorted(cycles, key=min), start=1):
        for s in cyc:
            comp_of_strand[s] = label

    # passages[s] = ordered (crossing id, in_slot, out_slot) for strand s
    passages: dict[int, list[tuple[int, int, int]]] = {s: [] for s in range(1, n + 1)}
    pos_to_strand = list(range(1, n + 1))
    over_ins: dict[int, int] = {}
    for t, letter in enumerate(w.letters):
        p = abs(letter) - 1
        a, b = pos_to_strand[p], pos_to_strand[p + 1]
        if letter > 0:
            # left strand over: slots 0=NE(b in), 1=NW(a in), 2=SW(b out), 3=SE(a out)
            over_ins[t] = 1
            passages[a].append((t, 1, 3))
            passages[b].append((t, 0, 2))
        else:
            # right strand over: slots 0=NW(a in), 1=SW(b out), 2=SE(a out), 3=NE(b in)
            over_ins[t] = 3
            passages[a].append((t, 0, 2))
            passages[b].append((t, 3, 1))
        pos_to_strand[p], pos_to_strand[p + 1] = b, a

    slot_arc: dict[tuple[int, int], int] = {}
    arc_component: dict[int, int] = {}
    loop_components: list[int] = []
    next_arc = 0
    for s in range(1, n + 1):
        ps = passages[s]
        if not ps:
            # a letterless fixed strand closes into a crossing-free circle
            loop_components.append(comp_of_strand[s])
            continue
        for k in range(len(ps) - 1):
            _, _, out_slot = ps[k]
            slot_arc[(ps[k][0], out_slot)] = next_arc
            slot_arc[(ps[k + 1][0], ps[k + 1][1])] = next_arc
            arc_component[next_arc] = comp_of_strand[s]
            next_arc += 1
        # closure arc: bottom of this strand around to the top of its successor
        succ = perm(s)
        last = ps[-1]
        first_of_next = passages[succ][0]  # nonempty: succ is in the same cycle
        slot_arc[(last[0], last[2])] = next_arc
        slot_arc[(first_of_next[0], first_of_next[1])] = next_arc
        arc_component[next_arc] = comp_of_strand[s]
        next_arc += 1

    crossings = {
        t: Crossing(
            arcs=tuple(slot_arc[(t, slot)] for slot in range(4)),
            over_in=over_ins[t],
        )
        for t in range(len(w.letters))
    }
    return LinkDiagram(
        crossings=crossings,
        arc_component=arc_component,
        loop_components=tuple(sorted(loop_components)),
    )


def linking_matrix(d: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    """Half the signed sum of inter-component crossings, per component pair."""
    c = d.component_count()
    sums = [[0] * c for _ in range(c)]
    for cid in sorted(d.crossings):
        a, b = d.under_component(cid), d.over_component(cid)
        if a != b:
            s = crossing_sign(d, cid)
            sums[a - 1][b - 1] += s
            sums[b - 1][a - 1] += s
    for i in range(c):
        for j in range(c):
            if sums[i][j] % 2 != 0:
                raise OddCrossingParity(
                    f"components ({i+1},{j+1}) have odd signed crossing sum {sums[i][j]}"
                )
    return tuple(tuple(v // 2 for v in row) for row in sums)


def splice_out(
    d: LinkDiagram,
    remove: Iterable[int],
    drop_components: Iterable[int] = (),
) -> LinkDiagram:
    """Delete the given crossings, splicing kept strands straight through them.

    Arcs of ``drop_components`` are discarded entirely (as are their free
    loops); kept strands whose arcs chain into a closed cycle through removed
    crossings become free loops.  Component labels are preserved verbatim.
    """
    remove = set(remove)
    dropped = set(drop_components)
    for cid in remove:
        d.crossing(cid)

    succ: dict[int, int] = {}
    for cid in remove:
        x = d.crossings[cid]
        for in_slot, out_slot in ((UNDER_IN, UNDER_OUT), (x.over_in, x.over_out)):
            a_in, a_out = x.arcs[in_slot], x.arcs[out_slot]
            if d.arc_component[a_in] in dropped:
                continue
            succ[a_in] = a_out

    kept_arcs = {a: c for a, c in d.arc_component.items() if c not in dropped}
    survivors = {cid: x for cid, x in d.crossings.items() if cid not in remove}

    consumed_tails = set(succ.values())
    replace: dict[int, int] = {}
    dead: set[int] = set()
    new_loops = [c for c in d.loop_components if c not in dropped]
    visited: set[int] = set()
    for a in sorted(kept_arcs):
        if a in consumed_tails or a not in succ:
            continue
        # chain starts at a surviving tail and walks through removed crossings
        cur = a
        while cur in succ:
            visited.add(cur)
            cur = succ[cur]
            dead.add(cur)
        visited.add(cur)
        replace[cur] = a
    # remaining succ members are closed cycles: each becomes a free loop
    for a in sorted(succ):
        if a in visited or a in dead:
            continue
        cur, cyc = a, []
        while cur not in cyc:
            cyc.append(cur)
            cur = succ[cur]
        for x in cyc:
            visited.add(x)
            dead.add(x)
        new_loops.append(kept_arcs[a])

    new_crossings = {
        cid: Crossing(
            arcs=tuple(replace.get(a, a) for a in x.arcs),
            over_in=x.over_in,
        )
        for cid, x in survivors.items()
    }
    new_arc_component = {
        a: c for a, c in kept_arcs.items() if a not in dead and a not in replace
    }
    return LinkDiagram(
        crossings=new_crossings,
        arc_component=new_arc_component,
        loop_components=tuple(sorted(new_loops)),
    )


def sublink(d: LinkDiagram, components: Iterable[int]) -> LinkDiagram:
    """Forget every component outside ``components``; relabel to 1..k keeping order."""
    keep = sorted(set(components))
    if not keep:
        raise EmptySubset("sublink requires a nonempty component subset")
    labels = set(d.component_labels())
    for c in keep:
        if c not in labels:
            raise UnknownComponent(f"no component labeled {c}")
    dropped = labels - set(keep)
    remove = {
        cid
        for cid in d.crossings
        if d.under_component(cid) in dropped or d.over_component(cid) in dropped
    }
    out = splice_out(d, remove, drop_components=dropped)
    relabel = {old: new for new, old in enumerate(keep, start=1)}
    return LinkDiagram(
        crossings=out.crossings,
        arc_component={a: relabel[c] for a, c in out.arc_component.items()},
        loop_components=tuple(sorted(relabel[c] for c in out.loop_components)),
    )


# ---------------------------------------------------------------------------
# wire format


def to_wire(d: LinkDiagram) -> dict:
    ends = d.arc_ends()
    return {
        "crossings": [
            {"id": cid, "slots": list(d.crossings[cid].arcs), "under": 0}
            for cid in sorted(d.crossings)
        ],
        "orientations": [
            {"edge": a, "from": list(ends[a]["tail"]), "to": list(ends[a]["head"])}
            for a in sorted(ends)
        ],
        "free_loops": d.free_loops,
        "components": {
            "edges": [
                {"edge": a, "component": d.arc_component[a]}
                for a in sorted(d.arc_component)
            ],
            "loops": list(d.loop_components),
        },
    }


def from_wire(obj: dict) -> LinkDiagram:
    heads: dict[tuple[int, int], int] = {}
    tails: dict[tuple[int, int], int] = {}
    for rec in obj["orientations"]:
        tails[tuple(rec["from"])] = rec["edge"]
        heads[tuple(rec["to"])] = rec["edge"]
    crossings: dict[int, Crossing] = {}
    for rec in obj["crossings"]:
        cid, slots = rec["id"], list(rec["slots"])
        under = rec.get("under", 0)
        if under not in (0, 1):
            raise DiagramError(f"crossing {cid}: under pair index must be 0 or 1")
        over_a, over_b = 1 - under, 3 - under  # over pair in the file's slot order
        if heads.get((cid, over_a)) == slots[over_a]:
            over_in = over_a
        elif heads.get((cid, over_b)) == slots[over_b]:
            over_in = over_b
        else:
            raise DiagramError(f"crossing {cid}: no incoming over-strand end")
        if heads.get((cid, under)) != slots[under]:
            raise DiagramError(f"crossing {cid}: under pair has no incoming end")
        if tails.get((cid, under + 2)) != slots[under + 2]:
            raise DiagramError(f"crossing {cid}: under pair has no outgoing end")
        if under == 1:  # rotate so the under pair sits at slots (0, 2)
            slots = slots[1:] + slots[:1]
            over_in = (over_in - 1) % 4
        crossings[cid] = Crossing(arcs=tuple(slots), over_in=over_in)
    comps = obj["components"]
    d = LinkDiagram(
        crossings=crossings,
        arc_component={rec["edge"]: rec["component"] for rec in comps["edges"]},
        loop_components=tuple(comps["loops"]),
    )
    if d.free_loops != obj.get("free_loops", d.free_loops):
        raise DiagramError("free_loops count disagrees with component loop labels")
    validate(d)
    return d


def load_fixture(name: str) -> LinkDiagram:
    """Load one of the bundled fixture diagrams: hopf, whitehead, borromean."""
    import importlib.resources
    import json

    ref = importlib.resources.files("sublinks") / "fixtures" / f"{name}.json"
    return from_wire(json.loads(ref.read_text()))
