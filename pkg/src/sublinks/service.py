"""Stateless HTTP facade over the reduction pipeline.

POST /api/reduce   graph -> word, diagram, linking matrix, SVG, stats
POST /api/sublink  graph + subset -> independent/trivial verdicts, peel order
GET  /api/health   liveness plus the crossing-convention identifier

Configuration via environment: PORT, RENDER_LIMIT (default 30: SVG output is
refused above this vertex count, computation is not), ALLOWED_ORIGIN.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware

from . import diagrams, graphs, moves, reduction, render
from .braids import CONVENTION

DEFAULT_RENDER_LIMIT = 30


def _error(status: int, name: str, detail: str) -> HTTPException:
    return HTTPException(status_code=status, detail={"error": name, "detail": detail})


def _parse_graph_field(body: dict) -> graphs.Graph:
    obj = body.get("graph")
    if obj is None:
        raise _error(400, "MissingGraph", "request body needs a 'graph' field")
    matrix = obj.get("adj") if isinstance(obj, dict) else obj
    if not isinstance(matrix, list):
        raise _error(400, "MalformedGraph", "graph must carry an 'adj' matrix")
    try:
        return graphs.parse_graph(matrix)
    except graphs.GraphError as exc:
        raise _error(400, type(exc).__name__, str(exc)) from exc


def create_app() -> FastAPI:
    render_limit = int(os.environ.get("RENDER_LIMIT", DEFAULT_RENDER_LIMIT))
    allowed_origin = os.environ.get("ALLOWED_ORIGIN", "*")
    app = FastAPI(title="sublinks", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[allowed_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok", "convention": CONVENTION}

    @app.post("/api/reduce")
    async def handle_reduce(request: Request) -> dict:
        body = await request.json()
        g = _parse_graph_field(body)
        want_svg = bool(body.get("svg", True))
        if want_svg and g.n > render_limit:
            raise _error(
                422,
                "RenderLimitExceeded",
                f"n={g.n} exceeds the render limit {render_limit};"
                " pass svg=false for computation only",
            )
        word = reduction.build_braid_word(g)
        link = diagrams.trace_closure(word)
        if not reduction.verify_linking_identity(g, link):
            raise _error(500, "LinkingIdentityFailed", "lk(L_A) != A: build bug")
        svg = render.render_closure(word) if want_svg else None
        return {
            "word": word.to_wire(),
            "pd": diagrams.to_wire(link),
            "linking": [list(row) for row in diagrams.linking_matrix(link)],
            "svg": svg,
            "stats": {
                "letters": len(word.letters),
                "crossings": len(link.crossings),
                "components": link.component_count(),
                "size": diagrams.diagram_size(link),
            },
        }

    @app.post("/api/sublink")
    async def handle_sublink(request: Request) -> dict:
        body = await request.json()
        g = _parse_graph_field(body)
        subset = body.get("subset")
        if (
            not isinstance(subset, list)
            or not subset
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in subset)
        ):
            raise _error(400, "EmptySubset", "subset must be a nonempty integer array")
        for v in subset:
            if not 1 <= v <= g.n:
                raise _error(422, "IndexOutOfRange", f"subset member {v} not in 1..{g.n}")
        members = sorted(set(subset))
        word = reduction.build_braid_word(g)
        link = diagrams.trace_closure(word)
        independent = graphs.is_independent_set(g, graphs.VertexSubset.of(members))
        verdict = moves.is_trivial_layered(link, members)
        if verdict is moves.Verdict.UNKNOWN or (verdict is moves.Verdict.TRUE) != independent:
            raise _error(
                500,
                "OracleDisagreement",
                f"independent={independent} but trivial={verdict.value}: build bug",
            )
        peel = moves.layered_split_order(link, members)
        out = {
            "independent": independent,
            "trivial": verdict.value,
        }
        if peel.success:
            out["peel_order"] = list(peel.order)
        else:
            out["failure_residual"] = list(peel.residual)
        if bool(body.get("svg", True)) and g.n <= render_limit:
            out["svg_highlighted"] = render.render_closure(word, highlight=members)
        return out

    return app


app = create_app()


def main() -> None:
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=int(os.environ.get("PORT", 8000)))


if __name__ == "__main__":
    main()
