"""The lit-only sigma-game: configurations, moves, orbits, and the solver.

A configuration assigns on/off to every vertex (bit s on means vertex s is
lit).  The only legal move picks a lit vertex and toggles all of its
neighbors; picking an unlit vertex is permitted but does nothing.  Each move
is an involution, so reachability is symmetric and the configuration space
splits into orbits.

The orbit enumerator is shared with the transvection machinery: both group
actions consist of maps  v -> v ^ flip  applied exactly when a parity test
against a fixed mask fires, so one BFS engine serves both.
"""

from __future__ import annotations

import logging
from array import array
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .f2 import parity
from .graphs import Graph

__all__ = [
    "CapExceededError",
    "Configuration",
    "MoveSequence",
    "ReplayResult",
    "SolveResult",
    "OrbitTable",
    "DEFAULT_CAP",
    "apply_move",
    "replay",
    "involution_orbits",
    "enumerate_orbits",
    "min_light_number_bruteforce",
    "solve",
]

logger = logging.getLogger(__name__)

DEFAULT_CAP = 20
_ESTIMATE_FROM = 18


class CapExceededError(ValueError):
    """Exhaustive enumeration was asked for more vertices than the cap allows."""


@dataclass(frozen=True, slots=True)
class Configuration:
    """An on/off assignment to the vertices of an n-vertex graph."""

    dim: int
    bits: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"configuration needs dim >= 1, got {self.dim}")
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(
                f"bits 0x{self.bits:x} out of range for {self.dim} vertices"
            )

    @classmethod
    def from_bitstring(cls, text: str) -> "Configuration":
        """Parse '110000'; index 0 is the leftmost character."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad configuration character {ch!r}")
        return cls(len(text), bits)

    @classmethod
    def from_on_vertices(cls, dim: int, on: Sequence[int]) -> "Configuration":
        bits = 0
        for s in on:
            if not 0 <= s < dim:
                raise ValueError(f"vertex {s} out of range for n={dim}")
            bits |= 1 << s
        return cls(dim, bits)

    def to_bitstring(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.dim))

    def on_vertices(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.dim) if self.bits >> s & 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_lit(self, s: int) -> bool:
        return bool(self.bits >> s & 1)


@dataclass(frozen=True, slots=True)
class MoveSequence:
    """An ordered list of vertex choices; legality depends on the run context."""

    moves: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.moves)


def apply_move(g: Graph, f: Configuration, s: int) -> Configuration:
    """Play vertex s: toggles the neighborhood when s is lit, identity when not."""
    if f.dim != g.n:
        raise ValueError(f"configuration is on {f.dim} vertices, graph on {g.n}")
    if not 0 <= s < g.n:
        raise ValueError(f"vertex {s} out of range for n={g.n}")
    if f.bits >> s & 1:
        return Configuration(g.n, f.bits ^ g.adj[s])
    return f


@dataclass(frozen=True, slots=True)
class ReplayResult:
    final: Configuration
    legal: bool
    illegal_at: Optional[int]


def replay(
    g: Graph, start: Configuration, seq: MoveSequence, strict: bool = True
) -> ReplayResult:
    """Run a move sequence from start.

    With strict=True a move at an unlit vertex counts as illegal and the
    replay stops there, reporting its index; otherwise such moves are applied
    as identities.
    """
    if start.dim != g.n:
        raise ValueError(f"configuration is on {start.dim} vertices, graph on {g.n}")
    bits = start.bits
    for k, s in enumerate(seq.moves):
        if not 0 <= s < g.n:
            raise ValueError(f"move {k} plays vertex {s}, out of range for n={g.n}")
        if bits >> s & 1:
            bits ^= g.adj[s]
        elif strict:
            return ReplayResult(Configuration(g.n, bits), False, k)
    return ReplayResult(Configuration(g.n, bits), True, None)


@dataclass(frozen=True, slots=True)
class OrbitTable:
    """Orbit decomposition of all 2^dim bit vectors under a set of involutions.

    orbit_id[v] is the orbit of vector v; orbits are numbered in increasing
    order of their smallest member.  sizes, min_weights and witnesses are
    indexed by orbit id; the witness is the smallest member realizing the
    orbit's minimum weight.
    """

    dim: int
    orbit_id: array
    sizes: tuple[int, ...]
    min_weights: tuple[int, ...]
    witnesses: tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        return len(self.sizes)

    def orbit_of(self, bits: int) -> int:
        return self.orbit_id[bits]

    def members(self, oid: int) -> list[int]:
        return [v for v in range(1 << self.dim) if self.orbit_id[v] == oid]

    def max_min_weight(self) -> int:
        """The worst orbit minimum: every orbit contains a configuration at
        most this heavy, and some orbit needs exactly this much."""
        return max(self.min_weights)


def involution_orbits(
    dim: int,
    toggles: Sequence[tuple[int, int]],
    cap: int = DEFAULT_CAP,
) -> OrbitTable:
    """Orbits of {0,1}^dim under the maps v -> v ^ flip if parity(v & test).

    Each (test, flip) pair must define an involution, which holds whenever
    parity(test & flip) == 0.  Both the game moves (test = vertex bit,
    flip = its neighborhood row) and the transvections (test = Gram row
    image, flip = the vector) have this shape.
    """
    if dim > cap:
        raise CapExceededError(
            f"2^{dim} configurations exceed the enumeration cap (n <= {cap})"
        )
    for test, flip in toggles:
        if parity(test & flip):
            raise ValueError("toggle (test, flip) is not an involution")
    total = 1 << dim
    if dim >= _ESTIMATE_FROM:
        logger.info(
            "enumerating 2^%d = %d vectors; orbit table needs about %.0f MiB",
            dim,
            total,
            total * 4 / 2**20,
        )
    orbit_id = array("i", [-1]) * total
    sizes: list[int] = []
    min_weights: list[int] = []
    witnesses: list[int] = []
    for seed in range(total):
        if orbit_id[seed] != -1:
            continue
        oid = len(sizes)
        orbit_id[seed] = oid
        frontier = [seed]
        size = 0
        best_w = dim + 1
        best_v = seed
        while frontier:
            nxt: list[int] = []
            for v in frontier:
                size += 1
                w = v.bit_count()
                if w < best_w or (w == best_w and v < best_v):
                    best_w = w
                    best_v = v
                for test, flip in toggles:
                    if parity(v & test):
                        u = v ^ flip
                        if orbit_id[u] == -1:
                            orbit_id[u] = oid
                            nxt.append(u)
            frontier = nxt
        sizes.append(size)
        min_weights.append(best_w)
        witnesses.append(best_v)
    return OrbitTable(
        dim=dim,
        orbit_id=orbit_id,
        sizes=tuple(sizes),
        min_weights=tuple(min_weights),
        witnesses=tuple(witnesses),
    )


def _game_toggles(g: Graph) -> list[tuple[int, int]]:
    return [(1 << s, g.adj[s]) for s in range(g.n)]


def enumerate_orbits(g: Graph, cap: int = DEFAULT_CAP) -> OrbitTable:
    """Brute-force orbit decomposition of all 2^n configurations of g."""
    return involution_orbits(g.n, _game_toggles(g), cap=cap)


def min_light_number_bruteforce(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """The smallest k such that every configuration can reach weight <= k."""
    return enumerate_orbits(g, cap=cap).max_min_weight()


class SolveResult(NamedTuple):
    target: Configuration
    moves: MoveSequence


def solve(g: Graph, start: Configuration, cap: int = DEFAULT_CAP) -> SolveResult:
    """Shortest move sequence from start to a minimum-weight configuration
    of its orbit; among shortest solutions the lexicographically smallest
    vertex sequence wins.

    BFS in FIFO order with moves tried in ascending vertex order discovers
    each configuration through its lexicographically smallest shortest path,
    so the first minimum-weight configuration discovered is the answer.
    """
    if start.dim != g.n:
        raise ValueError(f"configuration is on {start.dim} vertices, graph on {g.n}")
    if g.n > cap:
        raise CapExceededError(
            f"2^{g.n} configurations exceed the enumeration cap (n <= {cap})"
        )
    adj = g.adj
    prev: dict[int, tuple[int, int]] = {start.bits: (-1, -1)}
    order = [start.bits]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        rest = v
        while rest:
            low = rest & -rest
            rest ^= low
            u = v ^ adj[low.bit_length() - 1]
            if u not in prev:
                prev[u] = (v, low.bit_length() - 1)
                order.append(u)
    best_w = min(v.bit_count() for v in order)
    target = next(v for v in order if v.bit_count() == best_w)
    path: list[int] = []
    v = target
    while v != start.bits:
        v, s = prev[v]
        path.append(s)
    path.reverse()
    return SolveResult(
        target=Configuration(g.n, target), moves=MoveSequence(tuple(path))
    )
