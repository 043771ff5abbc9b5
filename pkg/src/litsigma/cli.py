"""Command line front end: analyze, solve, orbits, generate, serve.

Exit codes: 0 success, 2 unusable input (bad graph text, bad configuration),
3 enumeration cap exceeded.  Vertex labels are 0-based unless --one-indexed
is given, which shifts every vertex id on the way in and out; bitstrings are
positional and unaffected.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import click

from .classify import Applicability, OutOfScopeError, classify_graph, orbit_class
from .game import (
    DEFAULT_CAP,
    CapExceededError,
    Configuration,
    enumerate_orbits,
    replay,
    solve,
)
from .graphs import (
    GENERATOR_KINDS,
    Graph,
    GraphError,
    generate_graph,
    parse_graph,
    parse_graph_json,
    structural_report,
)

__all__ = ["main"]

EXIT_BAD_INPUT = 2
EXIT_CAP = 3


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_graph(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        _fail(str(exc), EXIT_BAD_INPUT)
    try:
        if text.lstrip().startswith("{"):
            return parse_graph_json(text)
        return parse_graph(text)
    except GraphError as exc:
        _fail(str(exc), EXIT_BAD_INPUT)
    raise AssertionError("unreachable")


def _parse_config(text: str, n: int, one_indexed: bool) -> Configuration:
    """A configuration is either a full bitstring or a comma list of lit
    vertices; a pure 0/1 string of exactly length n counts as a bitstring."""
    text = text.strip()
    if len(text) == n and set(text) <= {"0", "1"}:
        return Configuration.from_bitstring(text)
    try:
        on = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(
            f"configuration must be an n-bit string or comma-separated "
            f"vertices, got {text!r}"
        ) from None
    if one_indexed:
        on = [s - 1 for s in on]
    return Configuration.from_on_vertices(n, on)


def _shift(ids: Sequence[int], one_indexed: bool) -> list[int]:
    return [s + 1 for s in ids] if one_indexed else list(ids)


def _shift_json(report: dict, one_indexed: bool) -> dict:
    if not one_indexed:
        return report
    out = dict(report)
    for key in ("witness_q1", "witness_q0"):
        if out.get(key) is not None:
            out[key] = [s + 1 for s in out[key]]
    return out


def _vertices_label(ids: Sequence[int], one_indexed: bool) -> str:
    shown = _shift(ids, one_indexed)
    if not shown:
        return "(none)"
    return " ".join(str(s) for s in shown)


@click.group()
def main() -> None:
    """Analyze and play the lit-only sigma-game on simple connected graphs."""


@main.command()
@click.argument("graph_path")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
)
@click.option("--one-indexed", is_flag=True, help="Use 1-based vertex labels.")
def analyze(graph_path: str, fmt: str, one_indexed: bool) -> None:
    """Structural facts and the closed-form orbit classification."""
    g = _read_graph(graph_path)
    struct = structural_report(g)
    report = classify_graph(g)
    if fmt == "json":
        struct_json = struct.to_json_dict()
        if one_indexed:
            struct_json["cut_vertices"] = _shift(struct.cut_vertices, True)
            struct_json["blocks"] = [_shift(b, True) for b in struct.blocks]
            if struct.bipartition is not None:
                struct_json["bipartition"] = [
                    _shift(side, True) for side in struct.bipartition
                ]
        payload = {
            "graph": g.to_json_dict(),
            "structure": struct_json,
            "classification": _shift_json(report.to_json_dict(), one_indexed),
        }
        click.echo(json.dumps(payload, indent=2))
        return
    lines = [
        f"vertices: {g.n}",
        f"edges: {g.m}",
        f"degrees: {' '.join(str(d) for d in struct.degrees)}",
        f"bipartite: {'yes' if struct.bipartition is not None else 'no'}",
        f"claw-free: {'yes' if struct.claw_free else 'no'}",
        f"block graph: {'yes' if struct.block_graph else 'no'}",
        f"cut vertices: {_vertices_label(struct.cut_vertices, one_indexed)}",
        f"nondegenerate: {'yes' if report.nondegenerate else 'no'}"
        + ("" if report.nondegenerate else f" (rank {report.rank} of {g.n})"),
        f"regime: {report.applicable.value}",
    ]
    if report.applicable is Applicability.ORBIT_THEORY:
        assert report.orbit_sizes is not None
        lines += [
            f"half dimension: {report.half_dim}",
            f"arf invariant: {report.arf}",
            f"dual Q values: {' '.join(str(v) for v in report.dual_q_values)}",
            "orbit sizes: 1 (all-off) / "
            f"{report.orbit_sizes.q0_nonzero} (Q0) / {report.orbit_sizes.q1} (Q1)",
            f"move group order: {report.group_order}",
            f"min_light: {report.min_light}",
            f"1-lit: {'yes' if report.one_lit else 'no'}",
            f"witness Q1: {_vertices_label(report.witness_q1, one_indexed)}",
        ]
        if report.witness_q0 is not None:
            lines.append(
                f"witness Q0: {_vertices_label(report.witness_q0, one_indexed)}"
            )
    elif report.applicable is Applicability.LINE_GRAPH:
        lines.append(
            "note: nondegenerate line graph (claw-free block graph of even "
            "order); orbit classification out of scope"
        )
    else:
        lines.append(
            f"note: degenerate (rank {report.rank} of {g.n}); orbit "
            "classification out of scope"
        )
    click.echo("\n".join(lines))


@main.command(name="solve")
@click.argument("graph_path")
@click.argument("config")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
)
@click.option("--one-indexed", is_flag=True, help="Use 1-based vertex labels.")
def solve_cmd(graph_path: str, config: str, cap: int, fmt: str, one_indexed: bool) -> None:
    """Shortest move sequence to a minimum-weight configuration."""
    g = _read_graph(graph_path)
    try:
        start = _parse_config(config, g.n, one_indexed)
    except ValueError as exc:
        _fail(str(exc), EXIT_BAD_INPUT)
    try:
        result = solve(g, start, cap=cap)
    except CapExceededError as exc:
        _fail(str(exc), EXIT_CAP)
    check = replay(g, start, result.moves)
    assert check.legal and check.final == result.target
    try:
        cls: Optional[str] = orbit_class(g, start).value
    except OutOfScopeError:
        cls = None
    if fmt == "json":
        payload = {
            "start": start.to_bitstring(),
            "target": result.target.to_bitstring(),
            "target_weight": result.target.weight(),
            "moves": _shift(result.moves.moves, one_indexed),
            "orbit_class": cls,
        }
        click.echo(json.dumps(payload, indent=2))
        return
    lines = [
        f"start:  {start.to_bitstring()} (weight {start.weight()})",
        f"target: {result.target.to_bitstring()} (weight {result.target.weight()})",
    ]
    if result.moves.moves:
        lines.append(f"moves:  {_vertices_label(result.moves.moves, one_indexed)}")
    else:
        lines.append("already minimal, 0 moves")
    if cls is not None:
        lines.append(f"orbit class: {cls}")
    click.echo("\n".join(lines))


@main.command()
@click.argument("graph_path")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
)
def orbits(graph_path: str, cap: int, fmt: str) -> None:
    """Brute-force orbit table of all 2^n configurations."""
    g = _read_graph(graph_path)
    try:
        table = enumerate_orbits(g, cap=cap)
    except CapExceededError as exc:
        _fail(str(exc), EXIT_CAP)
    if fmt == "json":
        payload = {
            "orbit_count": table.orbit_count,
            "min_light_number": table.max_min_weight(),
            "orbits": [
                {
                    "id": oid,
                    "size": table.sizes[oid],
                    "min_weight": table.min_weights[oid],
                    "witness": Configuration(g.n, table.witnesses[oid]).to_bitstring(),
                }
                for oid in range(table.orbit_count)
            ],
        }
        click.echo(json.dumps(payload, indent=2))
        return
    lines = [f"orbits: {table.orbit_count}"]
    for oid in range(table.orbit_count):
        witness = Configuration(g.n, table.witnesses[oid]).to_bitstring()
        lines.append(
            f"  orbit {oid}: size {table.sizes[oid]}, "
            f"min weight {table.min_weights[oid]}, witness {witness}"
        )
    lines.append(f"min light number: {table.max_min_weight()}")
    click.echo("\n".join(lines))


@main.command()
@click.argument("kind", type=click.Choice(GENERATOR_KINDS))
@click.argument("params", nargs=-1, type=int)
@click.option("--seed", type=int, default=None, help="Seed for random kinds.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
)
def generate(kind: str, params: tuple[int, ...], seed: Optional[int], fmt: str) -> None:
    """Emit a named graph in the plain text or JSON input format."""
    try:
        g = generate_graph(kind, list(params), seed=seed)
    except ValueError as exc:
        _fail(str(exc), EXIT_BAD_INPUT)
    if fmt == "json":
        click.echo(json.dumps(g.to_json_dict()))
    else:
        click.echo(g.to_text(), nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
def serve(host: str, port: int, cap: int) -> None:
    """Run the JSON-over-HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(orbit_cap=cap), host=host, port=port)
