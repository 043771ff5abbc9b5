"""Exhaustive graph corpora: enumeration up to isomorphism and graph6 I/O.

Connected graphs are enumerated by augmentation: every connected graph on
k+1 vertices arises from a connected graph on k vertices by adding vertex k
joined to a nonempty subset (drop a non-cut vertex and relabel to see why),
so extending every k-vertex class by every nonempty subset and deduplicating
up to isomorphism is complete.  The same scheme restricted to single-vertex
subsets yields trees, and filtering candidates keeps bipartite families.

Isomorphism testing is color refinement for the invariant plus a backtracking
search within refinement classes; fine at the sizes used here (n <= 10).

The shipped corpora live as graph6 files under litsigma/data and are
regenerated by scripts/gen_corpus.py; loaders check the known counts of
connected graphs (1, 1, 2, 6, 21, 112, 853, 11117 for n = 1..8) so silent
corpus corruption fails loudly.
"""

from __future__ import annotations

import itertools
from importlib import resources
from typing import Callable, Iterable, Optional, Sequence

from .f2 import iter_bits
from .graphs import Graph

__all__ = [
    "CONNECTED_COUNTS",
    "TREE_COUNTS",
    "graph6_encode",
    "graph6_decode",
    "refinement_colors",
    "invariant_key",
    "are_isomorphic",
    "IsoDeduper",
    "enumerate_connected",
    "enumerate_trees",
    "enumerate_connected_bipartite",
    "load_graph6_lines",
    "connected_graphs_up_to_8",
    "nondegenerate_bipartite_10",
]

# Connected simple graphs up to isomorphism, n = 1..8 (a classical table).
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
# Trees up to isomorphism, n = 1..10.
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def graph6_encode(n: int, rows: Sequence[int]) -> str:
    """Encode adjacency rows in graph6 (short form, n <= 62)."""
    if not 0 <= n <= 62:
        raise ValueError(f"graph6 short form covers 0 <= n <= 62, got {n}")
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(rows[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def graph6_decode(text: str) -> tuple[int, tuple[int, ...]]:
    """Decode a graph6 line back to (n, adjacency rows)."""
    if not text:
        raise ValueError("empty graph6 string")
    n = ord(text[0]) - 63
    if not 0 <= n <= 62:
        raise ValueError(f"unsupported graph6 header {text[0]!r}")
    need = (n * (n - 1) // 2 + 5) // 6
    payload = text[1:]
    if len(payload) != need:
        raise ValueError(f"graph6 payload length {len(payload)}, expected {need}")
    bits: list[int] = []
    for ch in payload:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"bad graph6 character {ch!r}")
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return n, tuple(rows)


def refinement_colors(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    """Stable vertex coloring: iterated degree-of-color refinement."""
    colors = [0] * n
    classes = 1
    while True:
        sigs = [
            (colors[u], tuple(sorted(colors[v] for v in iter_bits(rows[u]))))
            for u in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == classes:
            return tuple(new)
        colors = new
        classes = len(order)


def invariant_key(n: int, rows: Sequence[int]) -> tuple:
    """Isomorphism-invariant hash key; equal for isomorphic graphs."""
    colors = refinement_colors(n, rows)
    per_vertex = sorted(
        (colors[u], tuple(sorted(colors[v] for v in iter_bits(rows[u]))))
        for u in range(n)
    )
    return n, sum(r.bit_count() for r in rows) // 2, tuple(per_vertex)


def are_isomorphic(n: int, rows_a: Sequence[int], rows_b: Sequence[int]) -> bool:
    """Exact isomorphism test via backtracking inside refinement classes."""
    ca = refinement_colors(n, rows_a)
    cb = refinement_colors(n, rows_b)
    if sorted(ca) != sorted(cb):
        return False
    # Map the most constrained vertices first: rarest color, then adjacency
    # to already-placed vertices prunes early.
    order = sorted(range(n), key=lambda u: (ca.count(ca[u]), ca[u], u))
    candidates = [
        [v for v in range(n) if cb[v] == ca[u]] for u in order
    ]
    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in candidates[pos]:
            if used[v]:
                continue
            ok = True
            for w in iter_bits(rows_a[u]):
                mw = mapping[w]
                if mw != -1 and not rows_b[v] >> mw & 1:
                    ok = False
                    break
            if ok:
                for w in range(n):
                    mw = mapping[w]
                    if mw != -1 and not rows_a[u] >> w & 1 and rows_b[v] >> mw & 1:
                        ok = False
                        break
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(pos + 1):
                    return True
                mapping[u] = -1
                used[v] = False
        return False

    return extend(0)


class IsoDeduper:
    """Collects graphs, keeping one representative per isomorphism class."""

    def __init__(self, n: int) -> None:
        self.n = n
        self._buckets: dict[tuple, list[tuple[int, ...]]] = {}
        self.count = 0

    def add(self, rows: tuple[int, ...]) -> bool:
        """True when rows is a new class; False when already represented."""
        key = invariant_key(self.n, rows)
        bucket = self._buckets.setdefault(key, [])
        for rep in bucket:
            if are_isomorphic(self.n, rows, rep):
                return False
        bucket.append(rows)
        self.count += 1
        return True

    def representatives(self) -> list[tuple[int, ...]]:
        out = [rows for bucket in self._buckets.values() for rows in bucket]
        out.sort()
        return out


def _extensions(k: int, rows: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    """All graphs on k+1 vertices made by joining new vertex k to a nonempty
    subset of the old ones."""
    for mask in range(1, 1 << k):
        child = [rows[u] | ((mask >> u & 1) << k) for u in range(k)]
        child.append(mask)
        yield tuple(child)


def _enumerate_by_augmentation(
    max_n: int,
    keep: Optional[Callable[[int, tuple[int, ...]], bool]] = None,
    leaf_only: bool = False,
) -> dict[int, list[tuple[int, ...]]]:
    levels: dict[int, list[tuple[int, ...]]] = {1: [(0,)]}
    for k in range(1, max_n):
        dedup = IsoDeduper(k + 1)
        for rows in levels[k]:
            for child in _extensions(k, rows):
                if leaf_only and child[k].bit_count() != 1:
                    continue
                if keep is not None and not keep(k + 1, child):
                    continue
                dedup.add(child)
        levels[k + 1] = dedup.representatives()
    return levels


def enumerate_connected(max_n: int) -> dict[int, list[tuple[int, ...]]]:
    """Adjacency rows of every connected graph class for n = 1..max_n."""
    return _enumerate_by_augmentation(max_n)


def enumerate_trees(max_n: int) -> dict[int, list[tuple[int, ...]]]:
    """Tree classes only: augmentation restricted to pendant vertices."""
    return _enumerate_by_augmentation(max_n, leaf_only=True)


def _rows_bipartite(n: int, rows: Sequence[int]) -> bool:
    color = [-1] * n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in iter_bits(rows[u]):
            if color[v] == -1:
                color[v] = color[u] ^ 1
                stack.append(v)
            elif color[v] == color[u]:
                return False
    return True


def enumerate_connected_bipartite(max_n: int) -> dict[int, list[tuple[int, ...]]]:
    """Connected bipartite classes; deleting a non-cut vertex preserves both
    properties, so filtered augmentation stays complete."""
    return _enumerate_by_augmentation(max_n, keep=_rows_bipartite)


def load_graph6_lines(text: str) -> list[Graph]:
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, rows = graph6_decode(line)
        graphs.append(Graph(n, rows))
    return graphs


def _load_data(name: str) -> str:
    return resources.files("litsigma.data").joinpath(name).read_text()


def connected_graphs_up_to_8() -> list[Graph]:
    """Every connected graph class with 1 <= n <= 8, from the shipped corpus."""
    graphs = load_graph6_lines(_load_data("connected_upto8.g6"))
    by_n: dict[int, int] = {}
    for g in graphs:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    if by_n != CONNECTED_COUNTS:
        raise RuntimeError(f"corpus counts {by_n} do not match {CONNECTED_COUNTS}")
    return graphs


def nondegenerate_bipartite_10() -> list[Graph]:
    """All connected bipartite classes on 10 vertices whose adjacency matrix
    is invertible over GF(2), from the shipped corpus."""
    return load_graph6_lines(_load_data("bipartite10_nondeg.g6"))
