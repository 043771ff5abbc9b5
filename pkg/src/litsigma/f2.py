"""Linear algebra over GF(2) with bit-packed vectors and matrices.

Vectors of dimension n are ints whose bit s is coordinate s; matrices are
tuples of n row ints.  Everything here is exact integer arithmetic, no numpy.

The quadratic-space machinery models the alternating bilinear form whose Gram
matrix is a graph adjacency matrix, together with the quadratic form that
assigns 1 to every standard basis vector and refines the bilinear form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

__all__ = [
    "F2Vector",
    "F2Matrix",
    "InversionResult",
    "QuadraticSpace",
    "SymplecticBasis",
    "DegenerateFormError",
    "parity",
    "iter_bits",
    "identity_matrix",
    "invert",
    "bilinear",
    "quadratic",
    "dual_basis",
    "symplectic_basis_and_arf",
    "count_quadratic_ones",
]


def parity(x: int) -> int:
    """Parity of the popcount of x."""
    return x.bit_count() & 1


def iter_bits(x: int) -> Iterator[int]:
    """Indices of the set bits of x, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class DegenerateFormError(ValueError):
    """Raised when an operation needs an invertible Gram matrix and got none."""


@dataclass(frozen=True, slots=True)
class F2Vector:
    """A vector in GF(2)^dim, coordinates packed into the bits of an int."""

    dim: int
    bits: int

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError(f"negative dimension {self.dim}")
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"bits 0x{self.bits:x} out of range for dim {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> "F2Vector":
        return cls(dim, 0)

    @classmethod
    def unit(cls, dim: int, s: int) -> "F2Vector":
        if not 0 <= s < dim:
            raise ValueError(f"coordinate {s} out of range for dim {dim}")
        return cls(dim, 1 << s)

    @classmethod
    def from_support(cls, dim: int, support: Sequence[int]) -> "F2Vector":
        bits = 0
        for s in support:
            if not 0 <= s < dim:
                raise ValueError(f"coordinate {s} out of range for dim {dim}")
            bits |= 1 << s
        return cls(dim, bits)

    @classmethod
    def from_bitstring(cls, text: str) -> "F2Vector":
        """Parse '011010' with index 0 leftmost."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad bitstring character {ch!r}")
        return cls(len(text), bits)

    def to_bitstring(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.dim))

    def support(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.dim) if self.bits >> s & 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "F2Vector") -> "F2Vector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return F2Vector(self.dim, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0


@dataclass(frozen=True, slots=True)
class F2Matrix:
    """A square matrix over GF(2); rows[i] has bit j set iff entry (i, j) is 1."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.dim:
                raise ValueError(f"row 0x{r:x} out of range for dim {self.dim}")

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def column(self, j: int) -> int:
        c = 0
        for i, r in enumerate(self.rows):
            c |= (r >> j & 1) << i
        return c

    def transpose(self) -> "F2Matrix":
        return F2Matrix(self.dim, tuple(self.column(i) for i in range(self.dim)))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i] >> j & 1 == self.rows[j] >> i & 1
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def diagonal(self) -> int:
        d = 0
        for i, r in enumerate(self.rows):
            d |= (r >> i & 1) << i
        return d

    def mat_vec(self, v: int) -> int:
        """Matrix times column vector, both bit-packed."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= parity(r & v) << i
        return out

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        rows = []
        for r in self.rows:
            acc = 0
            for j in iter_bits(r):
                acc ^= other.rows[j]
            rows.append(acc)
        return F2Matrix(self.dim, tuple(rows))


def identity_matrix(dim: int) -> F2Matrix:
    return F2Matrix(dim, tuple(1 << i for i in range(dim)))


@dataclass(frozen=True, slots=True)
class InversionResult:
    """Outcome of Gauss-Jordan elimination: the inverse, or the rank if singular."""

    inverse: Optional[F2Matrix]
    rank: int


def invert(m: F2Matrix) -> InversionResult:
    """Invert over GF(2), choosing the lowest-index pivot at every step.

    Returns InversionResult(inverse=None, rank=r) when the matrix is singular;
    a singular input is an answer here, not an error.
    """
    n = m.dim
    work = list(m.rows)
    aug = [1 << i for i in range(n)]
    rank = 0
    for col in range(n):
        pivot = next(
            (r for r in range(rank, n) if work[r] >> col & 1),
            None,
        )
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        for r in range(n):
            if r != rank and work[r] >> col & 1:
                work[r] ^= work[rank]
                aug[r] ^= aug[rank]
        rank += 1
    if rank < n:
        return InversionResult(inverse=None, rank=rank)
    # Rows ended up sorted by pivot column, which is the identity permutation.
    return InversionResult(inverse=F2Matrix(n, tuple(aug)), rank=n)


@dataclass(frozen=True, slots=True)
class QuadraticSpace:
    """GF(2)^dim carrying the alternating form B with Gram matrix `gram`.

    The companion quadratic form Q is pinned down by Q(e_s) = 1 for every
    standard basis vector together with Q(u + v) = Q(u) + Q(v) + B(u, v).
    """

    gram: F2Matrix

    def __post_init__(self) -> None:
        if not self.gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        if self.gram.diagonal():
            raise ValueError("Gram matrix must have zero diagonal")

    @property
    def dim(self) -> int:
        return self.gram.dim


def _check_dim(space: QuadraticSpace, v: F2Vector) -> None:
    if v.dim != space.dim:
        raise ValueError(f"dimension mismatch: vector {v.dim}, space {space.dim}")


def bilinear(space: QuadraticSpace, u: F2Vector, v: F2Vector) -> int:
    """B(u, v) = u^T G v over GF(2)."""
    _check_dim(space, u)
    _check_dim(space, v)
    return parity(u.bits & space.gram.mat_vec(v.bits))


def quadratic(space: QuadraticSpace, v: F2Vector) -> int:
    """Q(v); closed form: weight of v plus the number of Gram 1-entries inside
    the support, counted once per unordered pair, all mod 2."""
    _check_dim(space, v)
    q = v.bits.bit_count()
    rest = v.bits
    while rest:
        low = rest & -rest
        rest ^= low
        q += (space.gram.rows[low.bit_length() - 1] & rest).bit_count()
    return q & 1


def dual_basis(space: QuadraticSpace) -> list[F2Vector]:
    """Basis dual to the standard one under B: vector s pairs to 1 with e_s only.

    These are the columns of the inverse Gram matrix.  Raises
    DegenerateFormError when the form is degenerate.
    """
    res = invert(space.gram)
    if res.inverse is None:
        raise DegenerateFormError(
            f"form is degenerate (rank {res.rank} < {space.dim}); no dual basis"
        )
    inv = res.inverse
    return [F2Vector(space.dim, inv.column(s)) for s in range(space.dim)]


@dataclass(frozen=True, slots=True)
class SymplecticBasis:
    """Hyperbolic pairs (b_i, c_i): B(b_i, c_j) = delta_ij, pairs orthogonal."""

    pairs: tuple[tuple[F2Vector, F2Vector], ...]


def symplectic_basis_and_arf(
    space: QuadraticSpace, seed: Optional[int] = None
) -> tuple[SymplecticBasis, int]:
    """Extract hyperbolic pairs one at a time and compute the Arf invariant.

    With seed=None the choice at each step is the lowest-index vector of the
    working basis and its lowest-index partner, so the output is deterministic.
    With a seed, both choices are randomized; the Arf invariant
    sum of Q(b_i) * Q(c_i) must come out the same either way, which is what the
    property tests lean on.

    Raises DegenerateFormError on a degenerate form.  An odd-dimensional
    nondegenerate alternating form cannot exist; hitting one means the inputs
    were corrupted, and that is reported as a RuntimeError rather than hidden.
    """
    n = space.dim
    res = invert(space.gram)
    if res.inverse is None:
        raise DegenerateFormError(
            f"form is degenerate (rank {res.rank} < {n}); no symplectic basis"
        )
    if n & 1:
        raise RuntimeError(
            f"invertible alternating form in odd dimension {n}; inconsistent state"
        )
    rng = random.Random(seed) if seed is not None else None

    def form(x: int, y: int) -> int:
        return parity(x & space.gram.mat_vec(y))

    basis = [1 << i for i in range(n)]
    pairs: list[tuple[int, int]] = []
    while basis:
        if rng is None:
            b = basis[0]
        else:
            mask = 0
            while not mask:
                mask = rng.getrandbits(len(basis))
            b = 0
            for i in range(len(basis)):
                if mask >> i & 1:
                    b ^= basis[i]
        mates = [v for v in basis if form(b, v)]
        if not mates:
            # Cannot happen: the span of the working basis stays nondegenerate.
            raise RuntimeError("radical vector in nondegenerate space")
        if rng is None:
            c = mates[0]
        else:
            others = [v for v in basis if not form(b, v)]
            sub = 0
            while not (sub.bit_count() & 1):
                sub = rng.getrandbits(len(mates))
            c = 0
            for i in range(len(mates)):
                if sub >> i & 1:
                    c ^= mates[i]
            extra = rng.getrandbits(len(others))
            for i in range(len(others)):
                if extra >> i & 1:
                    c ^= others[i]
        pairs.append((b, c))
        # Project the rest onto the orthogonal complement of the pair and
        # re-extract an independent spanning set, keeping first occurrences.
        echelon: dict[int, int] = {}
        fresh: list[int] = []
        for v in basis:
            w = v
            if form(w, c):
                w ^= b
            if form(w, b):
                w ^= c
            while w:
                top = w.bit_length() - 1
                if top in echelon:
                    w ^= echelon[top]
                else:
                    echelon[top] = w
                    fresh.append(w)
                    break
        basis = fresh

    arf = 0
    vec_pairs = []
    for b, c in pairs:
        bv = F2Vector(n, b)
        cv = F2Vector(n, c)
        arf ^= quadratic(space, bv) & quadratic(space, cv)
        vec_pairs.append((bv, cv))
    return SymplecticBasis(tuple(vec_pairs)), arf


def count_quadratic_ones(space: QuadraticSpace, cap: int = 20) -> int:
    """|Q^-1(1)| by exhaustive enumeration, walking a Gray code so each step
    is a single-bit flip: Q(v ^ e_s) = Q(v) + 1 + B(v, e_s)."""
    n = space.dim
    if n > cap:
        raise ValueError(f"dimension {n} exceeds enumeration cap {cap}")
    rows = space.gram.rows
    v = 0
    q = 0
    ones = 0
    for i in range(1, 1 << n):
        s = (i & -i).bit_length() - 1
        q ^= 1 ^ parity(v & rows[s])
        v ^= 1 << s
        ones += q
    return ones
