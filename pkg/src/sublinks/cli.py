"""Command-line entry point for the reduction pipeline.

Exit codes: 0 success/YES, 1 NO, 2 usage error, 3 internal oracle
disagreement (a bug signal, never an input property).
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from typing import Optional, Sequence

from . import braids, diagrams, graphs, moves, reduction, render

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3


def _load_payload(value: str):
    """Inline JSON if the value looks like JSON, else a file path."""
    text = value
    if not value.lstrip().startswith(("{", "[")):
        with open(value) as fh:
            text = fh.read()
    return json.loads(text)


def _load_graph(value: str) -> graphs.Graph:
    obj = _load_payload(value)
    matrix = obj["adj"] if isinstance(obj, dict) else obj
    return graphs.parse_graph(matrix)


def _load_braid(value: str) -> braids.BraidWord:
    obj = _load_payload(value)
    return braids.BraidWord.from_wire(obj)


def _parse_subset(value: str) -> list[int]:
    return [int(part) for part in value.split(",") if part.strip()]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        print(text)


def _dump(obj, out: Optional[str]) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True), out)


def _cmd_reduce(args) -> int:
    g = _load_graph(args.graph)
    inst = reduction.build_instance(g, args.k if args.k else 1)
    _dump(inst.to_wire(), args.out)
    return EXIT_YES


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    if args.k is None:
        raise argparse.ArgumentTypeError("solve requires -k")
    k = args.k
    if not 1 <= k <= g.n:
        raise graphs.InvalidK(f"k={k} not in 1..{g.n}")
    best_k, witness = graphs.best_independent_set(g)
    oracle_yes = best_k >= k
    oracle_witness = list(witness.members[:k]) if oracle_yes else None

    link = reduction.build_link(g)
    link_witness = None
    for combo in itertools.combinations(range(1, g.n + 1), k):
        if moves.is_trivial_layered(link, combo) is moves.Verdict.TRUE:
            link_witness = list(combo)
            break
    link_yes = link_witness is not None

    report = {
        "k": k,
        "independent_set_route": {"answer": oracle_yes, "witness": oracle_witness},
        "trivial_sublink_route": {"answer": link_yes, "witness": link_witness},
    }
    _dump(report, args.out)
    if oracle_yes != link_yes:
        print("oracle disagreement between routes", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_YES if oracle_yes else EXIT_NO


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    ok = reduction.verify_linking_identity(g)
    _dump({"linking_identity": ok}, args.out)
    if not ok:
        print("linking identity failed: this is a build bug", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_YES


def _cmd_sublink(args) -> int:
    g = _load_graph(args.graph)
    if not args.subset:
        raise argparse.ArgumentTypeError("sublink requires --subset")
    subset = _parse_subset(args.subset)
    link = reduction.build_link(g)
    verdict = moves.is_trivial_layered(link, subset)
    independent = graphs.is_independent_set(g, graphs.VertexSubset.of(subset))
    peel = moves.layered_split_order(link, subset)
    report = {
        "subset": sorted(set(subset)),
        "independent": independent,
        "trivial": verdict.value,
    }
    if peel.success:
        report["peel_order"] = list(peel.order)
    else:
        report["failure_residual"] = list(peel.residual)
    _dump(report, args.out)
    if (verdict is moves.Verdict.TRUE) != independent or verdict is moves.Verdict.UNKNOWN:
        print("oracle disagreement between verdicts", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_YES if verdict is moves.Verdict.TRUE else EXIT_NO


def _cmd_simplify(args) -> int:
    if args.braid:
        d = diagrams.trace_closure(_load_braid(args.braid))
    elif args.graph:
        d = reduction.build_link(_load_graph(args.graph))
    else:
        raise argparse.ArgumentTypeError("simplify requires --braid or --graph")
    simplified = moves.greedy_simplify(d)
    _dump(diagrams.to_wire(simplified), args.out)
    return EXIT_YES


def _cmd_render(args) -> int:
    if args.braid:
        w = _load_braid(args.braid)
    elif args.graph:
        w = reduction.build_braid_word(_load_graph(args.graph))
    else:
        raise argparse.ArgumentTypeError("render requires --braid or --graph")
    highlight = _parse_subset(args.subset) if args.subset else ()
    svg = render.render_closure(w, highlight=highlight)
    _emit(svg, args.out)
    return EXIT_YES


def _random_graph(rng: random.Random, n: int) -> graphs.Graph:
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adj[i][j] = adj[j][i] = rng.randint(0, 1)
    return graphs.parse_graph(adj)


def _cmd_oracle_check(args) -> int:
    max_n = args.max_n or 4
    rng = random.Random(args.seed or 0)
    checked, disagreements = 0, []
    for n in range(1, max_n + 1):
        if n <= 4:
            pairs = list(itertools.combinations(range(n), 2))
            graph_iter = (
                _bits_to_graph(n, pairs, bits) for bits in range(2 ** len(pairs))
            )
        else:
            graph_iter = (_random_graph(rng, n) for _ in range(30))
        for g in graph_iter:
            link = reduction.build_link(g)
            for size in range(1, n + 1):
                for combo in itertools.combinations(range(1, n + 1), size):
                    verdict = moves.is_trivial_layered(link, combo)
                    expected = graphs.is_independent_set(g, graphs.VertexSubset.of(combo))
                    checked += 1
                    if verdict is moves.Verdict.UNKNOWN or (
                        verdict is moves.Verdict.TRUE
                    ) != expected:
                        disagreements.append(
                            {
                                "adj": [list(r) for r in g.adj],
                                "subset": list(combo),
                                "independent": expected,
                                "trivial": verdict.value,
                            }
                        )
    report = {"checked": checked, "disagreements": disagreements}
    _dump(report, args.out)
    return EXIT_DISAGREEMENT if disagreements else EXIT_YES


def _bits_to_graph(n: int, pairs, bits: int) -> graphs.Graph:
    adj = [[0] * n for _ in range(n)]
    for idx, (i, j) in enumerate(pairs):
        v = (bits >> idx) & 1
        adj[i][j] = adj[j][i] = v
    return graphs.parse_graph(adj)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sublinks",
        description="Independent sets as trivial sublinks: reduction pipeline tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "reduce": _cmd_reduce,
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "sublink": _cmd_sublink,
        "simplify": _cmd_simplify,
        "render": _cmd_render,
        "oracle-check": _cmd_oracle_check,
    }
    for name, handler in handlers.items():
        p = sub.add_parser(name)
        p.add_argument("--graph", help="graph wire JSON (inline or file path)")
        p.add_argument("--braid", help="braid wire JSON (inline or file path)")
        p.add_argument("--subset", help="comma-separated 1-indexed subset")
        p.add_argument("-k", type=int, default=None, help="target subset size")
        p.add_argument("--seed", type=int, default=None, help="RNG seed")
        p.add_argument("--max-n", type=int, default=None, help="exhaustive scale bound")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--format", choices=["json", "svg", "text"], default=None)
        p.set_defaults(handler=handler)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (
        argparse.ArgumentTypeError,
        graphs.GraphError,
        braids.BraidError,
        diagrams.DiagramError,
        FileNotFoundError,
        json.JSONDecodeError,
        KeyError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
