#!/usr/bin/env python3
"""Regenerate the shipped graph corpora under src/litsigma/data/.

Produces:
  connected_upto8.g6     every connected graph class, n = 1..8
  bipartite10_nondeg.g6  every connected bipartite class on 10 vertices whose
                         adjacency matrix is invertible over GF(2)

The 10-vertex file is built the fast way (extend the balanced-part 9-vertex
bipartite classes) and cross-checked against the slow way (full bipartite
enumeration to n=10, then filter), so a bug in either route shows up as a
count mismatch.  Known class counts are asserted throughout.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from litsigma.corpus import (
    CONNECTED_COUNTS,
    TREE_COUNTS,
    IsoDeduper,
    enumerate_connected,
    enumerate_connected_bipartite,
    enumerate_trees,
    graph6_decode,
    graph6_encode,
)
from litsigma.f2 import F2Matrix, invert
from litsigma.graphs import Graph, bipartition

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "litsigma" / "data"

# Connected bipartite graph classes, n = 1..10 (a classical table).
BIPARTITE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 3, 5: 5, 6: 17, 7: 44, 8: 182, 9: 730, 10: 4032}


def nondegenerate(n: int, rows: tuple[int, ...]) -> bool:
    return invert(F2Matrix(n, rows)).inverse is not None


def build_connected() -> None:
    t0 = time.time()
    levels = enumerate_connected(8)
    for n, want in CONNECTED_COUNTS.items():
        got = len(levels[n])
        assert got == want, f"connected n={n}: {got} classes, expected {want}"
    lines = []
    for n in range(1, 9):
        lines.extend(sorted(graph6_encode(n, rows) for rows in levels[n]))
    (DATA_DIR / "connected_upto8.g6").write_text("\n".join(lines) + "\n")
    print(f"connected_upto8.g6: {len(lines)} classes in {time.time() - t0:.1f}s")


def check_trees() -> None:
    levels = enumerate_trees(10)
    for n, want in TREE_COUNTS.items():
        got = len(levels[n])
        assert got == want, f"trees n={n}: {got} classes, expected {want}"
    print("tree counts 1..10 ok")


def build_bipartite10() -> None:
    t0 = time.time()
    levels = enumerate_connected_bipartite(9)
    for n in range(1, 10):
        got = len(levels[n])
        assert got == BIPARTITE_COUNTS[n], (
            f"bipartite n={n}: {got} classes, expected {BIPARTITE_COUNTS[n]}"
        )
    # A 10-vertex nondegenerate bipartite graph has balanced parts (5, 5):
    # an alternating form has even rank on each part pairing, so unbalanced
    # parts force a singular biadjacency block.  Removing a non-cut vertex
    # leaves parts (4, 5), so those classes are the only parents needed, and
    # the new vertex (making the 4-side five strong) attaches inside the
    # 5-side.
    dedup = IsoDeduper(10)
    for rows in levels[9]:
        parts = bipartition(Graph(9, rows))
        assert parts is not None
        sides = sorted(parts, key=len)
        if len(sides[0]) != 4:
            continue
        big = list(sides[1])
        for mask in range(1, 1 << 5):
            nb = 0
            for i in range(5):
                if mask >> i & 1:
                    nb |= 1 << big[i]
            child = tuple(r | ((nb >> u & 1) << 9) for u, r in enumerate(rows)) + (nb,)
            if nondegenerate(10, child):
                dedup.add(child)
    fast = dedup.representatives()
    print(
        f"bipartite10 nondegenerate (balanced-extension route): {len(fast)} "
        f"classes in {time.time() - t0:.1f}s"
    )

    t1 = time.time()
    full = enumerate_connected_bipartite(10)
    assert len(full[10]) == BIPARTITE_COUNTS[10], (
        f"bipartite n=10: {len(full[10])} classes, expected {BIPARTITE_COUNTS[10]}"
    )
    slow = sorted(rows for rows in full[10] if nondegenerate(10, rows))
    print(
        f"bipartite10 nondegenerate (full-enumeration route): {len(slow)} "
        f"classes in {time.time() - t1:.1f}s"
    )
    assert len(fast) == len(slow), (
        f"route disagreement: {len(fast)} vs {len(slow)} classes"
    )
    lines = sorted(graph6_encode(10, rows) for rows in slow)
    (DATA_DIR / "bipartite10_nondeg.g6").write_text("\n".join(lines) + "\n")
    print(f"bipartite10_nondeg.g6: {len(lines)} classes")


def crosscheck_graph6() -> None:
    """Round-trip plus, when networkx is importable, an external check."""
    levels = enumerate_connected(6)
    for n, classes in levels.items():
        for rows in classes:
            enc = graph6_encode(n, rows)
            back_n, back_rows = graph6_decode(enc)
            assert (back_n, back_rows) == (n, rows), f"round-trip failed for {enc}"
    try:
        import networkx as nx
    except ImportError:
        print("graph6 round-trip ok (networkx not available for cross-check)")
        return
    for n, classes in levels.items():
        for rows in classes:
            enc = graph6_encode(n, rows)
            gnx = nx.from_graph6_bytes(enc.encode())
            assert sorted(gnx.edges()) == sorted(
                (u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1
            ), f"networkx disagrees on {enc}"
    print("graph6 round-trip and networkx cross-check ok")


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    crosscheck_graph6()
    check_trees()
    build_connected()
    build_bipartite10()
    print("done")


if __name__ == "__main__":
    main()
