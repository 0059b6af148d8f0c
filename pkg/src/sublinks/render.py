"""Deterministic layout and SVG emission for braid closures.

Rows correspond to letters, columns to strand positions; closure arcs route
on the right with nesting depth n - i so they never intersect each other or
the braid.  Under-strand gaps are rendered as a background-colored casing
under each over-strand segment: exactly one per crossing, so the gap count
in the output equals the crossing count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .braids import BraidWord, permutation_of
from .diagrams import UnknownComponent

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
    "#aec7e8",
    "#ffbb78",
)

MARGIN = 24.0
COL_SPACING = 40.0
ROW_SPACING = 40.0
ARC_SPACING = 12.0
ARC_CLEARANCE = 14.0
STROKE = 2.4
DIM_OPACITY = 0.22
GAP_WIDTH = 9.0

Point = tuple[float, float]


@dataclass(frozen=True)
class CrossingMark:
    letter_index: int
    over_strand: int
    under_strand: int
    over_segment: tuple[Point, Point]


@dataclass(frozen=True)
class ClosureLayout:
    word: BraidWord
    component_of_strand: tuple[int, ...]  # index s-1 -> component label
    strand_vertices: dict[int, tuple[Point, ...]]
    crossings: tuple[CrossingMark, ...]
    arcs: dict[int, tuple[Point, ...]]  # column index -> routed closure arc
    arc_strand: dict[int, int]  # column index -> strand starting there (itself)
    width: float
    height: float


def _x(col: int) -> float:
    return MARGIN + (col - 1) * COL_SPACING


def _y(row: int) -> float:
    return MARGIN + ARC_CLEARANCE + row * ROW_SPACING


def layout_closure(w: BraidWord) -> ClosureLayout:
    n = w.strands
    rows = len(w.letters)
    cycles = permutation_of(w).cycles()
    component_of_strand = [0] * n
    for label, cyc in enumerate(sorted(cycles, key=min), start=1):
        for s in cyc:
            component_of_strand[s - 1] = label

    pos_to_strand = list(range(1, n + 1))
    vertices: dict[int, list[Point]] = {
        s: [(_x(s), _y(0))] for s in range(1, n + 1)
    }
    marks: list[CrossingMark] = []
    for t, letter in enumerate(w.letters):
        p = abs(letter) - 1
        a, b = pos_to_strand[p], pos_to_strand[p + 1]
        y0, y1 = _y(t), _y(t + 1)
        for s in range(1, n + 1):
            col = pos_to_strand.index(s) + 1
            if s == a:
                col = p + 2
            elif s == b:
                col = p + 1
            vertices[s].append((_x(col), y1))
        over = a if letter > 0 else b
        under = b if letter > 0 else a
        over_from = _x(p + 1) if over == a else _x(p + 2)
        over_to = _x(p + 2) if over == a else _x(p + 1)
        marks.append(
            CrossingMark(
                letter_index=t,
                over_strand=over,
                under_strand=under,
                over_segment=(((over_from), y0), ((over_to), y1)),
            )
        )
        pos_to_strand[p], pos_to_strand[p + 1] = b, a

    if rows == 0:  # letterless strands still get a visible vertical run
        for s in range(1, n + 1):
            vertices[s].append((_x(s), _y(1)))
    y_top, y_bot = _y(0), _y(max(rows, 1))
    arcs: dict[int, tuple[Point, ...]] = {}
    arc_strand: dict[int, int] = {}
    rail_base = _x(n) + 2 * ARC_SPACING
    for i in range(1, n + 1):
        depth = n - i
        rail_x = rail_base + depth * ARC_SPACING
        drop = ARC_CLEARANCE + 0.5 * depth * ARC_SPACING / max(n, 1)
        arcs[i] = (
            (_x(i), y_bot),
            (_x(i), y_bot + drop + depth * 2.0),
            (rail_x, y_bot + drop + depth * 2.0),
            (rail_x, y_top - drop - depth * 2.0),
            (_x(i), y_top - drop - depth * 2.0),
            (_x(i), y_top),
        )
        arc_strand[i] = i
    width = rail_base + (n - 1) * ARC_SPACING + MARGIN
    height = y_bot + ARC_CLEARANCE + (n - 1) * 2.0 + ARC_CLEARANCE + MARGIN
    return ClosureLayout(
        word=w,
        component_of_strand=tuple(component_of_strand),
        strand_vertices={s: tuple(v) for s, v in vertices.items()},
        crossings=tuple(marks),
        arcs=arcs,
        arc_strand=arc_strand,
        width=width,
        height=height,
    )


def _fmt(v: float) -> str:
    return f"{v:.1f}"


def _polyline(points: Sequence[Point], color: str, width: float, cls: str = "") -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    cls_attr = f' class="{cls}"' if cls else ""
    return (
        f'<polyline{cls_attr} points="{pts}" fill="none" stroke="{color}"'
        f' stroke-width="{_fmt(width)}" stroke-linejoin="round" stroke-linecap="round"/>'
    )


def _arrow(a: Point, b: Point, color: str) -> str:
    """Small arrowhead at the midpoint of segment a->b, pointing along it."""
    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    dx, dy = b[0] - a[0], b[1] - a[1]
    length = (dx * dx + dy * dy) ** 0.5 or 1.0
    ux, uy = dx / length, dy / length
    px, py = -uy, ux
    size = 5.0
    tip = (mx + ux * size, my + uy * size)
    left = (mx - ux * size + px * size, my - uy * size + py * size)
    right = (mx - ux * size - px * size, my - uy * size - py * size)
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (tip, left, right))
    return f'<polygon class="orientation" points="{pts}" fill="{color}"/>'


def component_color(label: int) -> str:
    return PALETTE[(label - 1) % len(PALETTE)]


def to_svg(
    layout: ClosureLayout,
    highlight: Iterable[int] = (),
    show_orientation: bool = True,
    scale: float = 1.0,
) -> str:
    highlight = set(highlight)
    labels = set(layout.component_of_strand)
    for c in highlight:
        if c not in labels:
            raise UnknownComponent(f"no component labeled {c}")

    def opacity(label: int) -> float:
        if not highlight or label in highlight:
            return 1.0
        return DIM_OPACITY

    w, h = layout.width * scale, layout.height * scale
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w)}" height="{_fmt(h)}"'
        f' viewBox="0 0 {_fmt(layout.width)} {_fmt(layout.height)}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]
    n = layout.word.strands
    for label in sorted(labels):
        color = component_color(label)
        parts.append(
            f'<g id="component-{label}" opacity="{_fmt(opacity(label))}">'
        )
        for s in range(1, n + 1):
            if layout.component_of_strand[s - 1] != label:
                continue
            pts = layout.strand_vertices[s]
            parts.append(_polyline(pts, color, STROKE, cls=f"strand strand-{s}"))
            parts.append(_polyline(layout.arcs[s], color, STROKE, cls=f"closure closure-{s}"))
            if show_orientation and len(pts) >= 2:
                mid = (len(pts) - 1) // 2
                parts.append(_arrow(pts[mid], pts[mid + 1], color))
        parts.append("</g>")
    parts.append('<g id="crossings">')
    for mark in layout.crossings:
        a, b = mark.over_segment
        over_label = layout.component_of_strand[mark.over_strand - 1]
        color = component_color(over_label)
        parts.append(f'<g class="crossing" id="crossing-{mark.letter_index}">')
        parts.append(_polyline((a, b), "#ffffff", STROKE + GAP_WIDTH, cls="under-gap"))
        parts.append(
            f'<g opacity="{_fmt(opacity(over_label))}">'
            + _polyline((a, b), color, STROKE, cls="over-strand")
            + "</g>"
        )
        parts.append("</g>")
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts)


def render_closure(
    w: BraidWord,
    highlight: Iterable[int] = (),
    show_orientation: bool = True,
    scale: float = 1.0,
) -> str:
    return to_svg(
        layout_closure(w),
        highlight=highlight,
        show_orientation=show_orientation,
        scale=scale,
    )
