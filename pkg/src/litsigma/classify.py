"""Closed-form orbit classification for graphs with invertible adjacency.

Over GF(2) the adjacency matrix A of a graph is the Gram matrix of an
alternating form B on V = GF(2)^n, and the lit-only game moves act on
configurations (covectors) as the transposes of the transvections in the
standard basis directions.  When A is invertible and the graph is not a
claw-free block graph of even order, the move group realizes the full
orthogonal group of the companion quadratic form Q, and the orbits of
configurations correspond under A^-1 to the three O(V)-orbits of vectors:

    {0},   the nonzero zeros of Q,   the ones of Q.

That correspondence turns orbit questions into evaluations of Q at A^-1 f,
which is what this module does.  Everything degenerate, and every claw-free
block graph of even order (the line graphs of odd-order trees), is routed
out of scope instead of being given a wrong answer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .f2 import (
    F2Matrix,
    F2Vector,
    QuadraticSpace,
    invert,
    quadratic,
    symplectic_basis_and_arf,
)
from .game import Configuration
from .graphs import Graph, bipartition, is_nondegenerate_line_graph

__all__ = [
    "OutOfScopeError",
    "OrbitClass",
    "Applicability",
    "OrbitSizes",
    "ClassReport",
    "adjacency_space",
    "classify_graph",
    "orbit_class",
    "dual_graph",
    "predicted_orbit_sizes",
    "bipartite_one_lit",
]


class OutOfScopeError(ValueError):
    """The requested result is only defined for graphs the theory covers."""


class OrbitClass(enum.Enum):
    """The three configuration orbits of an in-scope graph."""

    ZERO = "ZERO"
    Q0 = "Q0"
    Q1 = "Q1"


class Applicability(enum.Enum):
    """Which regime a graph falls into."""

    ORBIT_THEORY = "orbit-theory"
    LINE_GRAPH = "line-graph-out-of-scope"
    DEGENERATE = "degenerate-out-of-scope"


@dataclass(frozen=True, slots=True)
class OrbitSizes:
    zero: int
    q0_nonzero: int
    q1: int


@dataclass(frozen=True, slots=True)
class ClassReport:
    """Everything the closed-form theory says about one graph.

    Fields from half_dim onward are None unless applicable is ORBIT_THEORY.
    group_order can exceed 2^53, so JSON carries it as a string.
    """

    n: int
    nondegenerate: bool
    rank: int
    line_graph: bool
    applicable: Applicability
    half_dim: Optional[int] = None
    arf: Optional[int] = None
    dual_q_values: Optional[tuple[int, ...]] = None
    min_light: Optional[int] = None
    one_lit: Optional[bool] = None
    witness_q1: Optional[tuple[int, ...]] = None
    witness_q0: Optional[tuple[int, ...]] = None
    orbit_sizes: Optional[OrbitSizes] = None
    group_order: Optional[int] = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "nondegenerate": self.nondegenerate,
            "rank": self.rank,
            "line_graph": self.line_graph,
            "applicable": self.applicable.value,
            "half_dim": self.half_dim,
            "arf": self.arf,
            "dual_q_values": None
            if self.dual_q_values is None
            else list(self.dual_q_values),
            "min_light": self.min_light,
            "one_lit": self.one_lit,
            "witness_q1": None if self.witness_q1 is None else list(self.witness_q1),
            "witness_q0": None if self.witness_q0 is None else list(self.witness_q0),
            "orbit_sizes": None
            if self.orbit_sizes is None
            else {
                "zero": self.orbit_sizes.zero,
                "q0_nonzero": self.orbit_sizes.q0_nonzero,
                "q1": self.orbit_sizes.q1,
            },
            "group_order": None if self.group_order is None else str(self.group_order),
        }


def adjacency_space(g: Graph) -> QuadraticSpace:
    """The quadratic space whose Gram matrix is the adjacency matrix of g."""
    return QuadraticSpace(F2Matrix(g.n, g.adj))


@lru_cache(maxsize=4096)
def _inverse_rows(n: int, adj: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    res = invert(F2Matrix(n, adj))
    return None if res.inverse is None else res.inverse.rows


@lru_cache(maxsize=4096)
def _line_graph_cached(n: int, adj: tuple[int, ...]) -> bool:
    return is_nondegenerate_line_graph(Graph(n, adj))


def predicted_orbit_sizes(m: int, arf: int) -> tuple[int, int, int]:
    """Exact orbit and group sizes for dimension 2m and the given Arf value.

    Returns (size of the Q=1 orbit, size of the nonzero Q=0 orbit, order of
    the orthogonal group O(Q)).  All figures are exact integers however large.
    """
    if m < 1:
        raise ValueError(f"half dimension must be >= 1, got {m}")
    if arf not in (0, 1):
        raise ValueError(f"Arf invariant must be 0 or 1, got {arf}")
    half = 1 << (2 * m - 1)
    offset = 1 << (m - 1)
    if arf == 0:
        q1 = half - offset
        q0_nonzero = half + offset - 1
        group = (
            (1 << (m * m - m + 1))
            * ((1 << m) - 1)
            * math.prod((1 << (2 * i)) - 1 for i in range(1, m))
        )
    else:
        q1 = half + offset
        q0_nonzero = half - offset - 1
        group = (
            (1 << (m * m - m + 1))
            * ((1 << m) + 1)
            * math.prod((1 << (2 * i)) - 1 for i in range(1, m))
        )
    return q1, q0_nonzero, group


def _scope_check(g: Graph) -> QuadraticSpace:
    """Shared precondition: invertible adjacency, not a tree line graph."""
    if _inverse_rows(g.n, g.adj) is None:
        raise OutOfScopeError(
            "adjacency matrix is singular over GF(2); orbit classification "
            "does not apply"
        )
    if _line_graph_cached(g.n, g.adj):
        raise OutOfScopeError(
            "graph is a claw-free block graph of even order (a line graph of "
            "an odd tree); its move group is smaller and the three-orbit "
            "classification does not apply"
        )
    return adjacency_space(g)


def _dual_vectors(g: Graph) -> list[F2Vector]:
    inv_rows = _inverse_rows(g.n, g.adj)
    assert inv_rows is not None
    inv = F2Matrix(g.n, inv_rows)
    return [F2Vector(g.n, inv.column(s)) for s in range(g.n)]


def orbit_class(g: Graph, f: Configuration) -> OrbitClass:
    """Which of the three orbits holds configuration f.

    Pulls f back through the adjacency matrix and evaluates the quadratic
    form there: the orbit of f is determined by Q(A^-1 f).
    """
    if f.dim != g.n:
        raise ValueError(f"configuration is on {f.dim} vertices, graph on {g.n}")
    space = _scope_check(g)
    if f.bits == 0:
        return OrbitClass.ZERO
    inv_rows = _inverse_rows(g.n, g.adj)
    assert inv_rows is not None
    pre = F2Matrix(g.n, inv_rows).mat_vec(f.bits)
    return OrbitClass.Q1 if quadratic(space, F2Vector(g.n, pre)) else OrbitClass.Q0


def dual_graph(g: Graph) -> Graph:
    """The graph whose adjacency matrix is A^-1.

    The inverse of a symmetric matrix is symmetric, and its diagonal entries
    are the values B(d_s, d_s) of the alternating form on the dual basis, so
    they vanish; both facts are re-checked here because a failure would mean
    corrupted arithmetic, not bad input.  The result is connected whenever g
    is, since a block-diagonal inverse would force A itself apart.
    """
    inv_rows = _inverse_rows(g.n, g.adj)
    if inv_rows is None:
        raise OutOfScopeError(
            "adjacency matrix is singular over GF(2); no dual graph"
        )
    inv = F2Matrix(g.n, inv_rows)
    if not inv.is_symmetric() or inv.diagonal():
        raise RuntimeError(
            "inverse adjacency is not a zero-diagonal symmetric matrix; "
            "inconsistent arithmetic"
        )
    return Graph(g.n, inv_rows)


def _pair_witness(duals: list[F2Vector], space: QuadraticSpace, want: int) -> tuple[int, int]:
    """Lexicographically first pair (s, t) with Q(d_s + d_t) == want."""
    n = len(duals)
    for s in range(n):
        for t in range(s + 1, n):
            if quadratic(space, duals[s] ^ duals[t]) == want:
                return s, t
    raise RuntimeError(f"no vertex pair with dual quadratic value {want}")


def classify_graph(g: Graph) -> ClassReport:
    """Full closed-form report for g; never enumerates configurations."""
    res = invert(F2Matrix(g.n, g.adj))
    nondeg = res.inverse is not None
    line = is_nondegenerate_line_graph(g)
    if not nondeg:
        return ClassReport(
            n=g.n,
            nondegenerate=False,
            rank=res.rank,
            line_graph=line,
            applicable=Applicability.DEGENERATE,
        )
    if line:
        return ClassReport(
            n=g.n,
            nondegenerate=True,
            rank=g.n,
            line_graph=True,
            applicable=Applicability.LINE_GRAPH,
        )
    space = _scope_check(g)
    duals = _dual_vectors(g)
    dual_q = tuple(quadratic(space, d) for d in duals)
    _, arf = symplectic_basis_and_arf(space)
    m = g.n // 2
    q1, q0_nonzero, group = predicted_orbit_sizes(m, arf)

    ones = [s for s in range(g.n) if dual_q[s]]
    zeros = [s for s in range(g.n) if not dual_q[s]]
    if ones:
        witness_q1: tuple[int, ...] = (ones[0],)
    else:
        witness_q1 = _pair_witness(duals, space, 1)
    witness_q0: Optional[tuple[int, ...]]
    if q0_nonzero == 0:
        witness_q0 = None
    elif zeros:
        witness_q0 = (zeros[0],)
    else:
        witness_q0 = _pair_witness(duals, space, 0)

    q1_min = 1 if ones else 2
    q0_min = None if q0_nonzero == 0 else (1 if zeros else 2)
    min_light = q1_min if q0_min is None else max(q1_min, q0_min)
    return ClassReport(
        n=g.n,
        nondegenerate=True,
        rank=g.n,
        line_graph=False,
        applicable=Applicability.ORBIT_THEORY,
        half_dim=m,
        arf=arf,
        dual_q_values=dual_q,
        min_light=min_light,
        one_lit=min_light == 1,
        witness_q1=witness_q1,
        witness_q0=witness_q0,
        orbit_sizes=OrbitSizes(zero=1, q0_nonzero=q0_nonzero, q1=q1),
        group_order=group,
    )


def bipartite_one_lit(g: Graph) -> bool:
    """For a nondegenerate bipartite graph: is every configuration reducible
    to a single lit vertex?

    Holds exactly when some vertex has even degree, with the single edge K2
    as the one even-degree-free exception.  K2 is a line graph, so it is out
    of the classification's scope but still covered here.
    """
    if bipartition(g) is None:
        raise OutOfScopeError("graph is not bipartite")
    if _inverse_rows(g.n, g.adj) is None:
        raise OutOfScopeError(
            "adjacency matrix is singular over GF(2); the even-degree "
            "criterion does not apply"
        )
    if g.n == 2:
        return True
    return any(d % 2 == 0 for d in g.degrees())
