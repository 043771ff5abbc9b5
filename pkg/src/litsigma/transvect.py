"""Transvections, t-moves on vector tuples, and the kappa/tau duality checks.

For a vector a with B(a, a) = 0 the transvection tau_a sends v to
v + B(v, a) a.  The game move at vertex s acts on configurations by the
transpose of tau_{e_s}, and conjugating through the Gram matrix A turns one
into the other: A tau_s = kappa_s A.  That identity, checked here both
symbolically on matrices and in bulk on random words, is what lets orbit
questions about configurations be answered inside the vector space.

A VectorSet is an ordered tuple of independent vectors; the elementary
t-move replaces member j by tau_{p_i}(p_j).  These moves preserve the span
and, more to the point, the multiset of transvection orbits, so searching
over them can simplify a generating set (for instance down to one whose
induced Gram graph is a tree) without changing anything the game cares
about.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .f2 import (
    DegenerateFormError,
    F2Matrix,
    F2Vector,
    QuadraticSpace,
    identity_matrix,
    invert,
    iter_bits,
    parity,
)
from .game import DEFAULT_CAP, OrbitTable, involution_orbits
from .graphs import Graph

__all__ = [
    "VectorSet",
    "TreeReduction",
    "transvection_apply",
    "tau_matrix",
    "kappa_matrix",
    "word_matrix",
    "verify_kappa_tau_duality",
    "duality_word_sweep",
    "tv_orbits",
    "elementary_t_move",
    "span_echelon",
    "induced_gram_rows",
    "reduce_to_tree_search",
]


def transvection_apply(space: QuadraticSpace, a: F2Vector, v: F2Vector) -> F2Vector:
    """tau_a(v) = v + B(v, a) a."""
    if a.dim != space.dim or v.dim != space.dim:
        raise ValueError("dimension mismatch between space and vectors")
    if parity(v.bits & space.gram.mat_vec(a.bits)):
        return F2Vector(v.dim, v.bits ^ a.bits)
    return v


def span_echelon(dim: int, vectors: Sequence[int]) -> tuple[int, ...]:
    """Canonical reduced echelon basis of the span; equal spans give equal
    tuples."""
    rows: list[int] = []
    for v in vectors:
        w = v
        for r in rows:
            if w >> (r.bit_length() - 1) & 1:
                w ^= r
        if w:
            rows.append(w)
            rows.sort(key=int.bit_length, reverse=True)
    # Back-substitute to make leading bits unique across rows.
    for i in range(len(rows)):
        for j in range(len(rows)):
            if i != j and rows[j] >> (rows[i].bit_length() - 1) & 1:
                rows[j] ^= rows[i]
    return tuple(sorted(rows, reverse=True))


@dataclass(frozen=True, slots=True)
class VectorSet:
    """An ordered tuple of linearly independent vectors in a quadratic space."""

    space: QuadraticSpace
    vectors: tuple[F2Vector, ...]

    def __post_init__(self) -> None:
        for v in self.vectors:
            if v.dim != self.space.dim:
                raise ValueError("vector dimension does not match the space")
            if not v.bits:
                raise ValueError("zero vector not allowed in a VectorSet")
        if len(span_echelon(self.space.dim, [v.bits for v in self.vectors])) != len(
            self.vectors
        ):
            raise ValueError("vectors are linearly dependent")

    def __len__(self) -> int:
        return len(self.vectors)

    @classmethod
    def standard_basis(cls, space: QuadraticSpace) -> "VectorSet":
        return cls(
            space, tuple(F2Vector.unit(space.dim, s) for s in range(space.dim))
        )


def induced_gram_rows(p: VectorSet) -> tuple[int, ...]:
    """Adjacency rows of the graph on p's members with edges where B is 1.

    Unlike a Graph this may be disconnected, so it stays a raw row tuple.
    """
    k = len(p)
    gram = p.space.gram
    images = [gram.mat_vec(v.bits) for v in p.vectors]
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if parity(p.vectors[i].bits & images[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def _rows_connected(k: int, rows: Sequence[int]) -> bool:
    if k == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for s in iter_bits(frontier):
            nxt |= rows[s]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << k) - 1


def _rows_tree(k: int, rows: Sequence[int]) -> bool:
    edges = sum(r.bit_count() for r in rows) // 2
    return _rows_connected(k, rows) and edges == k - 1


def tau_matrix(space: QuadraticSpace, s: int) -> F2Matrix:
    """Matrix of tau_{e_s} on coordinate columns: identity except row s,
    which picks up the Gram row of s."""
    if not 0 <= s < space.dim:
        raise ValueError(f"vertex {s} out of range for dim {space.dim}")
    rows = list(identity_matrix(space.dim).rows)
    rows[s] ^= space.gram.rows[s]
    return F2Matrix(space.dim, tuple(rows))


def kappa_matrix(g: Graph, s: int) -> F2Matrix:
    """Matrix of the game move at s on configuration columns: the transpose
    of tau_matrix, i.e. column s picks up the adjacency row of s."""
    if not 0 <= s < g.n:
        raise ValueError(f"vertex {s} out of range for n={g.n}")
    rows = [
        (1 << t) ^ ((g.adj[s] >> t & 1) << s) for t in range(g.n)
    ]
    return F2Matrix(g.n, tuple(rows))


def word_matrix(factors: Sequence[F2Matrix], word: Sequence[int]) -> F2Matrix:
    """Product for applying word left to right: factors[word[-1]] @ ... @
    factors[word[0]]."""
    if not factors:
        raise ValueError("need at least one factor matrix")
    acc = identity_matrix(factors[0].dim)
    for s in word:
        acc = factors[s] @ acc
    return acc


def _require_nondegenerate(g: Graph) -> None:
    res = invert(F2Matrix(g.n, g.adj))
    if res.inverse is None:
        raise DegenerateFormError(
            f"adjacency matrix is singular (rank {res.rank} of {g.n}); the "
            "duality check is stated for nondegenerate graphs"
        )


def verify_kappa_tau_duality(g: Graph, word: Sequence[int]) -> bool:
    """Check A * tau_word == kappa_word * A exactly, as matrices."""
    _require_nondegenerate(g)
    a = F2Matrix(g.n, g.adj)
    space = QuadraticSpace(a)
    taus = [tau_matrix(space, s) for s in range(g.n)]
    kappas = [kappa_matrix(g, s) for s in range(g.n)]
    t = word_matrix(taus, word)
    k = word_matrix(kappas, word)
    return a @ t == k @ a


def duality_word_sweep(
    g: Graph,
    n_words: int = 1000,
    max_len: int = 8,
    seed: int = 0,
) -> bool:
    """verify_kappa_tau_duality over many random words at once.

    Runs all words in parallel with numpy on bit-packed uint16 rows, so it
    only supports n <= 16; that covers the exhaustive corpora this backs.
    Word lengths are drawn uniformly from 0..max_len.
    """
    n = g.n
    if n > 16:
        raise ValueError(f"vectorized sweep is limited to n <= 16, got {n}")
    _require_nondegenerate(g)
    rng = np.random.default_rng(seed)
    lengths = rng.integers(0, max_len + 1, size=n_words)
    letters = rng.integers(0, n, size=(n_words, max_len))

    adj = np.array(g.adj, dtype=np.uint16)
    # adj_bool[s, t] says t is a neighbor of s.
    adj_bool = (adj[:, None] >> np.arange(n)[None, :]) & 1
    sel = np.where(adj_bool.astype(bool), np.uint16(0xFFFF), np.uint16(0))

    ident = (np.uint16(1) << np.arange(n, dtype=np.uint16))[None, :]
    t_rows = np.repeat(ident, n_words, axis=0)  # (words, n), row i of tau product
    k_rows = t_rows.copy()
    widx = np.arange(n_words)
    for step in range(max_len):
        active = lengths > step
        s = letters[:, step]
        # tau_s @ acc: row s of acc gains the XOR of acc rows over neighbors.
        mask = sel[s]  # (words, n)
        contrib = np.bitwise_xor.reduce(t_rows & mask, axis=1)
        upd = t_rows[widx, s] ^ contrib
        t_rows[widx, s] = np.where(active, upd, t_rows[widx, s])
        # kappa_s @ acc: every neighbor row gains row s of acc.
        row_s = k_rows[widx, s]
        k_next = k_rows ^ (mask & row_s[:, None])
        k_rows = np.where(active[:, None], k_next, k_rows)

    # Compare A @ T with K @ A, one output row at a time.
    for i in range(n):
        left = np.bitwise_xor.reduce(t_rows & sel[i][None, :], axis=1)
        right = np.zeros(n_words, dtype=np.uint16)
        for t in range(n):
            hit = (k_rows[:, i] >> t) & 1
            right ^= np.where(hit.astype(bool), adj[t], np.uint16(0))
        if not np.array_equal(left, right):
            return False
    return True


def tv_orbits(p: VectorSet, cap: int = DEFAULT_CAP) -> OrbitTable:
    """Orbit decomposition of the whole space under {tau_a : a in p}."""
    gram = p.space.gram
    toggles = [(gram.mat_vec(v.bits), v.bits) for v in p.vectors]
    return involution_orbits(p.space.dim, toggles, cap=cap)


def elementary_t_move(p: VectorSet, i: int, j: int) -> VectorSet:
    """Replace p_j by tau_{p_i}(p_j), leaving everything else alone."""
    k = len(p)
    if not (0 <= i < k and 0 <= j < k):
        raise ValueError(f"indices ({i}, {j}) out of range for {k} vectors")
    if i == j:
        raise ValueError("t-move needs two distinct positions")
    new = list(p.vectors)
    new[j] = transvection_apply(p.space, p.vectors[i], p.vectors[j])
    return VectorSet(p.space, tuple(new))


@dataclass(frozen=True, slots=True)
class TreeReduction:
    """A successful search outcome: the moves and where they lead."""

    moves: tuple[tuple[int, int], ...]
    result: VectorSet


def reduce_to_tree_search(
    p: VectorSet, max_depth: int = 6
) -> Optional[TreeReduction]:
    """Breadth-first search for a t-move sequence whose endpoint has a tree
    as its induced Gram graph.

    The state space explodes with set size, so the input is limited to 8
    vectors; the induced Gram graph must be connected, otherwise no sequence
    of t-moves can ever produce a tree.  Returns None when no reduction
    exists within max_depth moves.
    """
    k = len(p)
    if k > 8:
        raise ValueError(f"search supports at most 8 vectors, got {k}")
    start_rows = induced_gram_rows(p)
    if not _rows_connected(k, start_rows):
        raise ValueError("induced Gram graph is disconnected; no tree is reachable")
    if _rows_tree(k, start_rows):
        return TreeReduction(moves=(), result=p)

    def key(vs: VectorSet) -> tuple[int, ...]:
        return tuple(sorted(v.bits for v in vs.vectors))

    seen = {key(p)}
    queue: deque[tuple[VectorSet, tuple[tuple[int, int], ...]]] = deque()
    queue.append((p, ()))
    while queue:
        cur, moves = queue.popleft()
        if len(moves) >= max_depth:
            continue
        for i in range(k):
            for j in range(k):
                if i == j:
                    continue
                nxt = elementary_t_move(cur, i, j)
                kk = key(nxt)
                if kk in seen:
                    continue
                seen.add(kk)
                nmoves = moves + ((i, j),)
                if _rows_tree(k, induced_gram_rows(nxt)):
                    return TreeReduction(moves=nmoves, result=nxt)
                queue.append((nxt, nmoves))
    return None
