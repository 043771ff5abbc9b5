"""Stateless JSON-over-HTTP service exposing the analyzer and the solver.

All state lives in the request: every call carries the full graph (and
configuration where relevant), so the service can be scaled or restarted
freely.  A bounded LRU cache keyed by the request content memoizes solver
runs; it is an optimization, not state a client may rely on.

Status codes: 400 for requests that cannot be understood (bad shapes, bad
graphs, bad configurations), 422 for well-formed requests whose answer is
out of scope (enumeration cap exceeded, classification asked of a graph the
theory does not cover).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Union

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, model_validator

from .classify import OutOfScopeError, classify_graph, orbit_class
from .game import (
    DEFAULT_CAP,
    CapExceededError,
    Configuration,
    apply_move,
    solve,
)
from .graphs import (
    Graph,
    GraphError,
    generate_graph,
    parse_graph,
    parse_graph_json,
    structural_report,
)

__all__ = ["create_app"]


class GraphPayload(BaseModel):
    """A graph, either inline as n/edges or as the plain text format."""

    n: Optional[int] = None
    edges: Optional[list[tuple[int, int]]] = None
    text: Optional[str] = None

    @model_validator(mode="after")
    def _one_form(self) -> "GraphPayload":
        inline = self.n is not None or self.edges is not None
        if self.text is not None and inline:
            raise ValueError("give either text or n/edges, not both")
        if self.text is None and (self.n is None or self.edges is None):
            raise ValueError("graph needs either text or both n and edges")
        return self


class AnalyzeRequest(BaseModel):
    graph: GraphPayload


class MoveRequest(BaseModel):
    graph: GraphPayload
    configuration: Union[str, list[int]]
    vertex: int


class HintRequest(BaseModel):
    graph: GraphPayload
    configuration: Union[str, list[int]]


def _build_graph(payload: GraphPayload) -> Graph:
    if payload.text is not None:
        if payload.text.lstrip().startswith("{"):
            return parse_graph_json(payload.text)
        return parse_graph(payload.text)
    assert payload.n is not None and payload.edges is not None
    return parse_graph_json({"n": payload.n, "edges": [list(e) for e in payload.edges]})


def _build_config(raw: Union[str, list[int]], n: int) -> Configuration:
    if isinstance(raw, str):
        if len(raw) != n:
            raise ValueError(
                f"configuration bitstring has length {len(raw)}, graph has {n} vertices"
            )
        return Configuration.from_bitstring(raw)
    return Configuration.from_on_vertices(n, raw)


def _class_of(g: Graph, f: Configuration) -> Optional[str]:
    try:
        return orbit_class(g, f).value
    except OutOfScopeError:
        return None


@lru_cache(maxsize=1024)
def _solve_cached(
    n: int, adj: tuple[int, ...], bits: int, cap: int
) -> tuple[int, tuple[int, ...]]:
    result = solve(Graph(n, adj), Configuration(n, bits), cap=cap)
    return result.target.bits, result.moves.moves


def create_app(orbit_cap: int = DEFAULT_CAP) -> FastAPI:
    app = FastAPI(title="litsigma", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def bad_shape(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc.errors())})

    @app.exception_handler(GraphError)
    async def bad_graph(request: Request, exc: GraphError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(CapExceededError)
    async def cap_hit(request: Request, exc: CapExceededError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"detail": str(exc), "verdict": "cap-exceeded"},
        )

    @app.exception_handler(OutOfScopeError)
    async def out_of_scope(request: Request, exc: OutOfScopeError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"detail": str(exc), "verdict": "out-of-scope"},
        )

    @app.post("/api/v1/analyze")
    async def analyze(req: AnalyzeRequest) -> dict:
        g = _build_graph(req.graph)
        struct = structural_report(g)
        report = classify_graph(g)
        return {
            "graph": g.to_json_dict(),
            "structure": struct.to_json_dict(),
            "classification": report.to_json_dict(),
        }

    @app.post("/api/v1/move")
    async def move(req: MoveRequest) -> dict:
        g = _build_graph(req.graph)
        try:
            before = _build_config(req.configuration, g.n)
            after = apply_move(g, before, req.vertex)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return {
            "configuration": after.to_bitstring(),
            "on": list(after.on_vertices()),
            "legal": before.is_lit(req.vertex),
            "changed": after.bits != before.bits,
            "orbit_class": _class_of(g, after),
        }

    @app.post("/api/v1/hint")
    async def hint(req: HintRequest) -> dict:
        g = _build_graph(req.graph)
        try:
            start = _build_config(req.configuration, g.n)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        target_bits, moves = _solve_cached(g.n, g.adj, start.bits, orbit_cap)
        target = Configuration(g.n, target_bits)
        return {
            "already_minimal": not moves,
            "move": moves[0] if moves else None,
            "moves_remaining": len(moves),
            "target": target.to_bitstring(),
            "target_weight": target.weight(),
            "orbit_class": _class_of(g, start),
        }

    @app.get("/api/v1/generate")
    async def generate(kind: str, params: str, seed: Optional[int] = None) -> dict:
        try:
            values = [int(p) for p in params.split(",") if p.strip() != ""]
            g = generate_graph(kind, values, seed=seed)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return g.to_json_dict()

    return app
