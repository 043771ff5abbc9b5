"""Simple connected graphs: parsing, generators, and structural predicates.

A Graph stores its adjacency as one int per vertex (bit t of row s set iff
st is an edge).  Construction validates simplicity and connectivity, so every
Graph in the rest of the package is a simple connected graph on n >= 1
vertices labeled 0..n-1.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .f2 import F2Matrix, iter_bits

__all__ = [
    "GraphError",
    "GraphFormatError",
    "Graph",
    "StructuralReport",
    "adjacency_matrix",
    "parse_graph",
    "parse_graph_json",
    "generate_graph",
    "bipartition",
    "structural_report",
    "is_nondegenerate_line_graph",
    "line_graph_of",
    "GENERATOR_KINDS",
]


class GraphError(ValueError):
    """A graph violates the simple-connected contract."""


class GraphFormatError(GraphError):
    """Input text or JSON does not describe a valid graph."""


def _connected(n: int, adj: Sequence[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for s in iter_bits(frontier):
            nxt |= adj[s]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


@dataclass(frozen=True, slots=True)
class Graph:
    """A simple connected graph with bit-packed adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for s, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(f"adjacency row {s} mentions vertices >= {self.n}")
            if row >> s & 1:
                raise GraphError(f"loop at vertex {s}")
        for s in range(self.n):
            for t in iter_bits(self.adj[s]):
                if not self.adj[t] >> s & 1:
                    raise GraphError(f"edge {s}-{t} is not symmetric")
        if not _connected(self.n, self.adj):
            raise GraphError("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        adj = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"loop edge {u}-{v}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {u}-{v}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def degree(self, s: int) -> int:
        return self.adj[s].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.adj)

    def neighbors(self, s: int) -> Iterator[int]:
        return iter_bits(self.adj[s])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [
            (u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v
        ]

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}


def adjacency_matrix(g: Graph) -> F2Matrix:
    """The adjacency rows of g as a matrix over GF(2); the Gram matrix of the
    game's alternating form."""
    return F2Matrix(g.n, g.adj)


def parse_graph(text: str) -> Graph:
    """Parse the plain text format: header line "n m", then m lines "u v".

    Blank lines are skipped and lines starting with '#' are comments.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise GraphFormatError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}") from None
    if n < 1:
        raise GraphFormatError(f"graph needs at least one vertex, got n={n}")
    if m < 0:
        raise GraphFormatError(f"negative edge count {m}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"declared {m} edges, {len(body)} given")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"edge line must be 'u v', got {line!r}") from None
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def parse_graph_json(data: str | dict) -> Graph:
    """Parse {"n": int, "edges": [[u, v], ...]} from a dict or a JSON string."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    if "n" not in data or "edges" not in data:
        raise GraphFormatError("graph JSON needs keys 'n' and 'edges'")
    n = data["n"]
    raw_edges = data["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError(f"'n' must be an integer, got {n!r}")
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be a list of [u, v] pairs")
    edges = []
    for item in raw_edges:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise GraphFormatError(f"bad edge entry {item!r}")
        edges.append((item[0], item[1]))
    if n < 1:
        raise GraphFormatError(f"graph needs at least one vertex, got n={n}")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


GENERATOR_KINDS = ("path", "cycle", "complete", "star", "grid", "tree")


def generate_graph(
    kind: str, params: Sequence[int], seed: Optional[int] = None
) -> Graph:
    """Build a named graph family member.

    path/cycle/complete/star take one parameter n; grid takes rows and cols;
    tree takes n and draws a uniformly random labeled tree from the seed
    (default seed 0), decoded from a Pruefer sequence.
    """
    params = list(params)

    def need(count: int) -> None:
        if len(params) != count:
            raise ValueError(
                f"{kind} takes {count} parameter(s), got {len(params)}"
            )

    if kind == "path":
        need(1)
        n = params[0]
        if n < 1:
            raise ValueError(f"path needs n >= 1, got {n}")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        need(1)
        n = params[0]
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        need(1)
        n = params[0]
        if n < 1:
            raise ValueError(f"complete needs n >= 1, got {n}")
        return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))
    if kind == "star":
        need(1)
        n = params[0]
        if n < 1:
            raise ValueError(f"star needs n >= 1, got {n}")
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if kind == "grid":
        need(2)
        rows, cols = params
        if rows < 1 or cols < 1:
            raise ValueError(f"grid needs positive dimensions, got {rows}x{cols}")
        edges = []
        for i in range(rows):
            for j in range(cols):
                v = i * cols + j
                if j + 1 < cols:
                    edges.append((v, v + 1))
                if i + 1 < rows:
                    edges.append((v, v + cols))
        return Graph.from_edges(rows * cols, edges)
    if kind == "tree":
        need(1)
        n = params[0]
        if n < 1:
            raise ValueError(f"tree needs n >= 1, got {n}")
        if n <= 2:
            return generate_graph("path", [n])
        rng = random.Random(0 if seed is None else seed)
        pruefer = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for x in pruefer:
            degree[x] += 1
        edges = []
        for x in pruefer:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (v for v in range(n) if degree[v] == 1)
        edges.append((u, v))
        return Graph.from_edges(n, edges)
    raise ValueError(f"unknown graph kind {kind!r}; known: {', '.join(GENERATOR_KINDS)}")


@dataclass(frozen=True, slots=True)
class StructuralReport:
    """Structure facts used by the scope routing and the text reports."""

    degrees: tuple[int, ...]
    bipartition: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    cut_vertices: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    claw_free: bool
    block_graph: bool

    def to_json_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "bipartition": None
            if self.bipartition is None
            else [list(self.bipartition[0]), list(self.bipartition[1])],
            "cut_vertices": list(self.cut_vertices),
            "blocks": [list(b) for b in self.blocks],
            "claw_free": self.claw_free,
            "block_graph": self.block_graph,
        }


def bipartition(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The two color classes (side of vertex 0 first), or None if an odd
    cycle makes two-coloring impossible."""
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        u = queue.pop()
        for v in g.neighbors(u):
            if color[v] == -1:
                color[v] = color[u] ^ 1
                queue.append(v)
            elif color[v] == color[u]:
                return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def _blocks_and_cuts(
    g: Graph,
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Biconnected components and cut vertices, iterative Hopcroft-Tarjan."""
    n = g.n
    if n == 1:
        return ((0,),), ()
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    root = 0
    root_children = 0
    stack: list[tuple[int, int, Iterator[int]]] = []
    disc[root] = low[root] = counter
    counter += 1
    stack.append((root, -1, g.neighbors(root)))
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for v in it:
            if v == parent:
                continue
            if disc[v] == -1:
                edge_stack.append((u, v))
                disc[v] = low[v] = counter
                counter += 1
                if u == root:
                    root_children += 1
                stack.append((v, u, g.neighbors(v)))
                advanced = True
                break
            if disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                # The block consists of the edges pushed since the tree edge
                # (p, u), that edge included; pop until it comes off.
                members: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    members.add(a)
                    members.add(b)
                    if (a, b) == (p, u):
                        break
                blocks.append(tuple(sorted(members)))
                if p != root:
                    cuts.add(p)
    if root_children > 1:
        cuts.add(root)
    blocks.sort()
    return tuple(blocks), tuple(sorted(cuts))


def _claw_free(g: Graph) -> bool:
    for u in range(g.n):
        nbrs = list(g.neighbors(u))
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def _is_block_graph(g: Graph, blocks: Sequence[tuple[int, ...]]) -> bool:
    """Every biconnected component induces a complete graph."""
    for members in blocks:
        mask = 0
        for v in members:
            mask |= 1 << v
        for v in members:
            if g.adj[v] & mask != mask ^ (1 << v):
                return False
    return True


def structural_report(g: Graph) -> StructuralReport:
    blocks, cuts = _blocks_and_cuts(g)
    return StructuralReport(
        degrees=g.degrees(),
        bipartition=bipartition(g),
        cut_vertices=cuts,
        blocks=blocks,
        claw_free=_claw_free(g),
        block_graph=_is_block_graph(g, blocks),
    )


def is_nondegenerate_line_graph(g: Graph) -> bool:
    """True exactly for claw-free block graphs of even order.

    These are the line graphs of odd-order trees, the only line graphs whose
    adjacency matrix is invertible over GF(2); they get routed out of the
    orbit classification.
    """
    if g.n & 1:
        return False
    blocks, _ = _blocks_and_cuts(g)
    return _claw_free(g) and _is_block_graph(g, blocks)


def line_graph_of(g: Graph) -> Graph:
    """The line graph: one vertex per edge of g, adjacency = shared endpoint.

    Edge i is the i-th edge of g.edges() (sorted (u, v), u < v).  The input
    must have at least one edge, otherwise there is nothing to build on.
    """
    edges = g.edges()
    if not edges:
        raise GraphError("line graph needs a graph with at least one edge")
    out = []
    for i, (u, v) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            x, y = edges[j]
            if u in (x, y) or v in (x, y):
                out.append((i, j))
    return Graph.from_edges(len(edges), out)
