"""Sparse graded Betti tables and the ring invariants they determine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class BettiTable:
    """Map (i, j) -> Betti number for a quotient of a polynomial ring.

    Only nonzero entries are stored. i is the homological position, j the
    internal degree; n_vars is the ambient variable count.
    """

    def __init__(self, n_vars: int, entries: Iterable[tuple[tuple[int, int], int]] = ()):
        if n_vars < 0:
            raise ValueError("variable count must be nonnegative")
        self.n_vars = n_vars
        self._entries: dict[tuple[int, int], int] = {}
        for (i, j), value in entries:
            self.add(i, j, value)

    def add(self, i: int, j: int, value: int) -> None:
        if value < 0:
            raise ValueError("Betti numbers are nonnegative")
        if not 0 <= i <= self.n_vars:
            raise ValueError(f"homological position {i} outside 0..{self.n_vars}")
        if value:
            key = (i, j)
            self._entries[key] = self._entries.get(key, 0) + value

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def nonzero(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n_vars == other.n_vars and self._entries == other._entries

    def __repr__(self) -> str:
        return f"BettiTable(n_vars={self.n_vars}, entries={self.nonzero()})"

    @property
    def proj_dim(self) -> int:
        """Largest homological position with a nonzero entry."""
        if not self._entries:
            return 0
        return max(i for i, _ in self._entries)

    @property
    def regularity(self) -> int:
        """Largest j - i over nonzero entries at positive homological position."""
        shifts = [j - i for (i, j) in self._entries if i >= 1]
        return max(shifts) if shifts else 0

    def diagonal(self, d: int) -> tuple[int, ...]:
        """Entries (i, i + d) for i = 1, 2, ..., trailing zeros trimmed."""
        top = 0
        for (i, j) in self._entries:
            if i >= 1 and j - i == d:
                top = max(top, i)
        return tuple(self[(i, i + d)] for i in range(1, top + 1))

    def diagonals(self) -> list[int]:
        """Sorted shifts j - i occurring among nonzero entries."""
        return sorted({j - i for (i, j) in self._entries})

    def column_totals(self) -> tuple[int, ...]:
        """Total Betti number per homological position, 0..proj_dim."""
        totals = [0] * (self.proj_dim + 1)
        for (i, _), value in self._entries.items():
            totals[i] += value
        return tuple(totals)

    def alternating_sum(self, j: int) -> int:
        """sum_i (-1)^i beta_{i,j}; equals the degree-j numerator coefficient."""
        return sum((-1) ** i * v for (i, jj), v in self._entries.items() if jj == j)


@dataclass(frozen=True)
class RingInvariants:
    """Projective dimension, regularity, depth, Krull dimension and the
    Cohen-Macaulay flag of a graded quotient ring."""

    pd: int
    reg: int
    depth: int
    krull_dim: int
    is_cm: bool


def invariants_from_table(table: BettiTable, n_vars: int, complex_dim: int) -> RingInvariants:
    """Read the ring invariants off a Betti table.

    depth comes from the Auslander-Buchsbaum identity depth = n_vars - pd;
    the Krull dimension of a face ring is the complex dimension plus one.
    """
    if not len(table):
        raise ValueError("Betti table is empty")
    pd = table.proj_dim
    reg = table.regularity
    depth = n_vars - pd
    krull = complex_dim + 1
    return RingInvariants(pd=pd, reg=reg, depth=depth, krull_dim=krull, is_cm=depth == krull)
