"""Exact integer kernel: binomial coefficients, powers of (1 - t), and
Hilbert-series numerators assembled from face counts.

Everything is plain Python integers, so results are exact at any magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the summation convention: 0 outside 0 <= k <= n.

    Signed index-shifted sums can then run over open ranges without guards.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _trimmed(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[s] is the t^s coefficient.

    Trailing zeros are trimmed on construction; the zero polynomial is ().
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, s: int) -> int:
        if 0 <= s < len(self.coeffs):
            return self.coeffs[s]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def shifted(self, s: int) -> "IntPolynomial":
        """Multiply by t^s."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * s + self.coeffs)

    def __call__(self, x: int):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def one_minus_t_power(m: int) -> IntPolynomial:
    """Expansion of (1 - t)^m; the t^s coefficient is (-1)^s * binomial(m, s)."""
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    return IntPolynomial(tuple((-1) ** s * comb(m, s) for s in range(m + 1)))


@dataclass(frozen=True)
class FVector:
    """Face counts (f_-1, f_0, ..., f_d); entries[i] counts faces of i vertices.

    entries[0] counts the empty face and is always 1.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(c) for c in self.entries))
        if not self.entries:
            raise ValueError("face vector needs at least the empty-face entry")
        if self.entries[0] != 1:
            raise ValueError("face vector must count the empty face exactly once")
        if any(c < 0 for c in self.entries):
            raise ValueError("face counts must be nonnegative")

    @property
    def dim(self) -> int:
        return len(self.entries) - 2

    def count(self, dimension: int) -> int:
        """Number of faces of the given dimension (dimension -1 is the empty face)."""
        idx = dimension + 1
        if 0 <= idx < len(self.entries):
            return self.entries[idx]
        return 0

    def truncated(self, k: int) -> "FVector":
        """Face counts of the k-skeleton: drop everything above dimension k."""
        if k < 0:
            raise ValueError("skeleton dimension must be nonnegative")
        return FVector(self.entries[: k + 2])


@dataclass(frozen=True)
class HilbertNumerator:
    """Numerator polynomial of a Hilbert series written over (1 - t)^n_vars."""

    n_vars: int
    poly: IntPolynomial

    def __post_init__(self):
        if self.n_vars < 0:
            raise ValueError("variable count must be nonnegative")
        if self.poly.coefficient(0) != 1:
            raise ValueError("numerator must have constant term 1")
        if self.poly.degree > self.n_vars:
            raise ValueError("numerator degree exceeds the variable count")

    def coefficient(self, s: int) -> int:
        return self.poly.coefficient(s)


def numerator_from_fvector(f: FVector | Sequence[int], n_vars: int) -> HilbertNumerator:
    """Clear denominators in sum_i f_i t^(i+1) / (1-t)^(i+1) to the (1-t)^n_vars form.

    Returns the exact polynomial sum_i f_i t^(i+1) (1-t)^(n_vars-i-1), where the
    i = -1 term contributes (1-t)^n_vars.
    """
    entries = f.entries if isinstance(f, FVector) else tuple(int(c) for c in f)
    if not entries or entries[0] != 1:
        raise ValueError("face vector must count the empty face exactly once")
    if n_vars < 0:
        raise ValueError("variable count must be nonnegative")
    poly = IntPolynomial()
    for size, count in enumerate(entries):
        expo = n_vars - size
        if expo < 0:
            raise ValueError(
                f"faces of {size} vertices do not fit in {n_vars} variables"
            )
        if count:
            poly = poly + count * one_minus_t_power(expo).shifted(size)
    return HilbertNumerator(n_vars, poly)
