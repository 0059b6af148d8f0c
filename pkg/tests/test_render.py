from __future__ import annotations

import random
import xml.etree.ElementTree as ET

import pytest

from conftest import FIG10_WORD, random_braid
from sublinks.braids import parse_braid
from sublinks.diagrams import UnknownComponent
from sublinks.render import layout_closure, render_closure, to_svg


class TestLayout:
    def test_empty_word_three_circles(self):
        layout = layout_closure(parse_braid(3, []))
        assert len(layout.strand_vertices) == 3
        assert len(layout.arcs) == 3
        assert layout.crossings == ()

    def test_hopf_word(self):
        layout = layout_closure(parse_braid(2, [1, 1]))
        assert len(layout.crossings) == 2
        # both strands change column at each crossing row
        for s in (1, 2):
            xs = [p[0] for p in layout.strand_vertices[s]]
            assert xs[0] != xs[1] and xs[1] != xs[2]

    def test_worked_example_dimensions(self):
        layout = layout_closure(parse_braid(5, FIG10_WORD))
        assert len(layout.crossings) == 20
        assert len(layout.strand_vertices) == 5
        assert all(len(v) == 21 for v in layout.strand_vertices.values())

    def test_arc_nesting_is_disjoint(self):
        layout = layout_closure(parse_braid(4, []))
        rails = [max(p[0] for p in arc) for arc in layout.arcs.values()]
        assert len(set(rails)) == 4  # one rail per nesting depth

    def test_uninvolved_strands_stay_put(self):
        layout = layout_closure(parse_braid(4, [1]))
        for s in (3, 4):
            xs = {p[0] for p in layout.strand_vertices[s]}
            assert len(xs) == 1


class TestSvg:
    def test_well_formed_xml(self):
        svg = render_closure(parse_braid(5, FIG10_WORD))
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")

    def test_deterministic(self):
        w = parse_braid(5, FIG10_WORD)
        assert render_closure(w) == render_closure(w)
        assert render_closure(w, highlight=[1, 3, 5]) == render_closure(w, highlight=[1, 3, 5])

    def test_gap_count_equals_crossing_count(self):
        rng = random.Random(5)
        for _ in range(10):
            w = random_braid(rng, rng.randint(2, 5), rng.randint(0, 15))
            svg = render_closure(w)
            assert svg.count('class="under-gap"') == len(w.letters)

    def test_empty_highlight_means_no_dimming(self):
        svg = render_closure(parse_braid(2, [1, 1]))
        assert 'opacity="0.2"' not in svg
        assert svg.count('opacity="1.0"') >= 2

    def test_highlight_dims_others(self):
        svg = render_closure(parse_braid(5, FIG10_WORD), highlight=[1, 3, 5])
        root = ET.fromstring(svg)
        dimmed = {
            g.get("id")
            for g in root.iter("{http://www.w3.org/2000/svg}g")
            if g.get("id", "").startswith("component-") and g.get("opacity") != "1.0"
        }
        assert dimmed == {"component-2", "component-4"}

    def test_unknown_highlight_rejected(self):
        layout = layout_closure(parse_braid(2, [1, 1]))
        with pytest.raises(UnknownComponent):
            to_svg(layout, highlight=[7])

    def test_orientation_arrows_togglable(self):
        w = parse_braid(3, [])
        with_arrows = render_closure(w, show_orientation=True)
        without = render_closure(w, show_orientation=False)
        assert 'class="orientation"' in with_arrows
        assert 'class="orientation"' not in without

    def test_scale_changes_outer_size_only(self):
        w = parse_braid(2, [1, 1])
        small = to_svg(layout_closure(w), scale=1.0)
        big = to_svg(layout_closure(w), scale=2.0)
        assert small != big
        assert ET.fromstring(big).get("viewBox") == ET.fromstring(small).get("viewBox")
