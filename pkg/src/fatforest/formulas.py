"""Closed forms for the skeletons of point-glued simplex unions: f-vectors,
Hilbert numerators, graded Betti tables (two independent routes) and ring
invariants.

Every formula is exact integer arithmetic; the signed sums are checked for
nonnegativity at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable, RingInvariants
from .polynomials import (
    HilbertNumerator,
    IntPolynomial,
    FVector,
    binomial,
    one_minus_t_power,
)


@dataclass(frozen=True)
class SkeletonQuery:
    """Block sizes plus skeleton parameter k, with the derived quantities the
    closed forms keep reusing."""

    sizes: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if not self.sizes:
            raise ValueError("at least one block is required")
        if any(s < 2 for s in self.sizes):
            raise ValueError("block sizes must be at least 2")
        if self.k < 0:
            raise ValueError("skeleton parameter must be nonnegative")

    @property
    def block_count(self) -> int:
        return len(self.sizes)

    @property
    def n_vars(self) -> int:
        """Vertex count: block sizes minus the glued points."""
        return sum(self.sizes) - (self.block_count - 1)

    @property
    def max_block(self) -> int:
        return max(self.sizes)

    @property
    def top_dim(self) -> int:
        """Dimension of the k-skeleton: min(k, max block size - 1)."""
        return min(self.k, self.max_block - 1)

    def block_faces(self, j: int) -> int:
        """Number of j-vertex faces lying inside a single block."""
        return sum(binomial(s, j) for s in self.sizes)


@dataclass(frozen=True)
class StrandVector:
    """One diagonal of a Betti table: values[m] is the entry at homological
    position m + 1 on diagonal j - i = diagonal. Trailing zeros are trimmed."""

    diagonal: int
    values: tuple[int, ...]
    degenerate: bool = False  # single block: no degree-2 generators at all

    def __post_init__(self):
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        if any(v < 0 for v in vals):
            raise ValueError("strand values must be nonnegative")
        object.__setattr__(self, "values", tuple(vals))


def skeleton_f_vector(q: SkeletonQuery) -> FVector:
    """(1, N, c_2, ..., c_{s+1}) where c_j counts the j-vertex faces inside
    blocks and s is the skeleton dimension."""
    entries = [1, q.n_vars]
    for j in range(2, q.top_dim + 2):
        entries.append(q.block_faces(j))
    return FVector(tuple(entries))


def fatforest_numerator(sizes) -> HilbertNumerator:
    """Numerator of sum_s 1/(1-t)^{n_s} - (e-1)/(1-t) over (1-t)^N."""
    q = SkeletonQuery(tuple(sizes), 0)
    n_vars = q.n_vars
    poly = IntPolynomial()
    for s in q.sizes:
        poly = poly + one_minus_t_power(n_vars - s)
    poly = poly - (q.block_count - 1) * one_minus_t_power(n_vars - 1)
    return HilbertNumerator(n_vars, poly)


def skeleton_numerator(q: SkeletonQuery) -> HilbertNumerator:
    """Numerator (1-t)^N + N t (1-t)^{N-1} + sum_{i=2}^{s+1} c_i t^i (1-t)^{N-i}."""
    n_vars = q.n_vars
    poly = one_minus_t_power(n_vars) + n_vars * one_minus_t_power(n_vars - 1).shifted(1)
    for i in range(2, q.top_dim + 2):
        poly = poly + q.block_faces(i) * one_minus_t_power(n_vars - i).shifted(i)
    return HilbertNumerator(n_vars, poly)


def linear_strand(sizes) -> StrandVector:
    """Diagonal j - i = 1: entry i is (e-1) C(N-1, i+1) - sum_s C(N-n_s, i+1).

    A single block has no degree-2 generators, so its strand is empty and
    flagged degenerate rather than an error.
    """
    q = SkeletonQuery(tuple(sizes), 0)
    if q.block_count == 1:
        return StrandVector(1, (), degenerate=True)
    n_vars = q.n_vars
    values = []
    for i in range(1, n_vars - 1):
        v = (q.block_count - 1) * binomial(n_vars - 1, i + 1) - sum(
            binomial(n_vars - s, i + 1) for s in q.sizes
        )
        if v < 0:
            raise ValueError(f"linear strand produced a negative value at position {i}")
        values.append(v)
    return StrandVector(1, tuple(values))


def upper_strand(q: SkeletonQuery) -> StrandVector:
    """Diagonal j - i = k + 1 of the k-skeleton:
    entry i is sum_{j=k+2}^{n} c_j (-1)^{k-j} C(N-j, k+i+1-j).

    Empty when k >= n - 1 (the resolution is then 2-linear). Valid for a
    single block as well, where it carries the whole resolution.
    """
    if q.k < 1:
        raise ValueError("the strand split assumes skeleton parameter k >= 1")
    diagonal = q.k + 1
    n = q.max_block
    if q.k >= n - 1:
        return StrandVector(diagonal, ())
    n_vars = q.n_vars
    values = []
    for i in range(1, n_vars - q.k):
        v = 0
        for j in range(q.k + 2, n + 1):
            sign = 1 if (q.k - j) % 2 == 0 else -1
            v += q.block_faces(j) * sign * binomial(n_vars - j, q.k + i + 1 - j)
        if v < 0:
            raise ValueError(f"upper strand produced a negative value at position {i}")
        values.append(v)
    return StrandVector(diagonal, tuple(values))


def _require_closed_form(q: SkeletonQuery) -> None:
    if q.block_count < 2:
        raise ValueError("closed-form Betti tables require at least two blocks")
    if q.k < 1:
        raise ValueError("closed-form Betti tables assume k >= 1; use the homology oracle for k = 0")


def betti_closed(q: SkeletonQuery) -> BettiTable:
    """Betti table assembled from the two strand formulas: the (0,0) entry,
    the diagonal-1 strand, and (for k < n-1) the diagonal-(k+1) strand."""
    _require_closed_form(q)
    table = BettiTable(q.n_vars)
    table.add(0, 0, 1)
    for i, v in enumerate(linear_strand(q.sizes).values, start=1):
        table.add(i, i + 1, v)
    upper = upper_strand(q)
    for i, v in enumerate(upper.values, start=1):
        table.add(i, i + upper.diagonal, v)
    return table


def betti_via_strand_subtraction(q: SkeletonQuery) -> BettiTable:
    """Independent route: read both strands off exact numerator polynomials.

    The diagonal-1 strand comes from the coefficients of the glued-blocks
    numerator (2-linear resolution: beta_{i,i+1} = (-1)^i coefficient(i+1));
    subtracting that numerator from the skeleton numerator leaves a polynomial
    supported in degrees >= k+2 whose signed coefficients are the upper strand.
    """
    _require_closed_form(q)
    base = fatforest_numerator(q.sizes)
    skel = skeleton_numerator(q)
    table = BettiTable(q.n_vars)
    table.add(0, 0, 1)
    if base.coefficient(1) != 0:
        raise ValueError("unexpected linear term in the glued-blocks numerator")
    for i in range(1, base.poly.degree):
        v = (-1) ** i * base.coefficient(i + 1)
        if v < 0:
            raise ValueError(f"negative diagonal-1 entry at position {i}")
        table.add(i, i + 1, v)
    diff = skel.poly - base.poly
    for s in range(min(q.k + 2, diff.degree + 1)):
        if diff.coefficient(s) != 0:
            raise ValueError(f"strand subtraction left a degree-{s} term below the upper strand")
    for s in range(q.k + 2, diff.degree + 1):
        i = s - q.k - 1
        v = (-1) ** i * diff.coefficient(s)
        if v < 0:
            raise ValueError(f"negative diagonal-{q.k + 1} entry at position {i}")
        table.add(i, s, v)
    return table


def invariants_closed(q: SkeletonQuery) -> RingInvariants:
    """pd = N-2, reg = k+1 below the top dimension (else 1), depth = 2,
    Krull dimension = skeleton dimension + 1, Cohen-Macaulay iff k <= 1 or
    every block is an edge."""
    _require_closed_form(q)
    n = q.max_block
    reg = q.k + 1 if q.k < n - 1 else 1
    return RingInvariants(
        pd=q.n_vars - 2,
        reg=reg,
        depth=2,
        krull_dim=q.top_dim + 1,
        is_cm=q.k <= 1 or n == 2,
    )
