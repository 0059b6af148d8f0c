"""Regenerate the bundled fixture diagrams from braid-closure presentations.

Hopf link: closure of s1 s1 (linking number +1).
Whitehead link: closure of s1 s2^-1 s1 s2^-1 s1 on 3 strands (two
components, linking number 0, five crossings).
Borromean rings: closure of (s1 s2^-1)^3 on 3 strands (pure, three
components, zero linking matrix, cyclic over/under pattern).
"""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from sublinks.braids import parse_braid
from sublinks.diagrams import to_wire, trace_closure, validate

FIXTURES = {
    "hopf": (2, [1, 1]),
    "whitehead": (3, [1, -2, 1, -2, 1]),
    "borromean": (3, [1, -2, 1, -2, 1, -2]),
}


def main() -> None:
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "src" / "sublinks" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, (n, letters) in FIXTURES.items():
        d = trace_closure(parse_braid(n, letters))
        validate(d)
        path = out_dir / f"{name}.json"
        path.write_text(json.dumps(to_wire(d), indent=2, sort_keys=True) + "\n")
        print(f"wrote {path} ({len(d.crossings)} crossings, {d.component_count()} components)")


if __name__ == "__main__":
    main()
