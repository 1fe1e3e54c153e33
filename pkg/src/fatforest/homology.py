"""Ground-truth engine: reduced simplicial homology over exact fields, the
exhaustive Hochster subset sweep, and the link-homology Cohen-Macaulay test.

Boundary ranks are computed by dense Gaussian elimination: bitmask rows over
GF(2), modular arithmetic over GF(p), fractions over the rationals. The
complexes these oracles see are tiny, so nothing sparser is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .betti import BettiTable
from .complexes import SimplicialComplex, link

DEFAULT_GUARD = 24


class OracleGuardError(RuntimeError):
    """Raised when a complex exceeds the configured vertex guard."""

    def __init__(self, n_vertices: int, guard: int):
        super().__init__(
            f"{n_vertices} vertices exceeds the oracle guard of {guard}; "
            f"raise the guard to accept the exponential runtime"
        )
        self.n_vertices = n_vertices
        self.guard = guard


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    top = isqrt(p)
    while d <= top:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for a prime p, or characteristic 0 for exact rationals."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p >= 1 << 31:
            raise ValueError("prime characteristic must be below 2^31")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        if p == 0:
            raise ValueError("use FieldSpec.rationals() for characteristic 0")
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def parse(cls, label: str) -> "FieldSpec":
        text = label.strip().lower()
        if text in ("rat", "rational", "rationals", "q", "qq"):
            return cls(0)
        if text.startswith("gf"):
            try:
                return cls.gf(int(text[2:]))
            except ValueError as exc:
                raise ValueError(f"bad field {label!r}: {exc}") from None
        raise ValueError(f"bad field {label!r}; expected gf<p> or rat")

    @property
    def label(self) -> str:
        return "rat" if self.characteristic == 0 else f"gf{self.characteristic}"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
RATIONALS = FieldSpec(0)


def _rank_gf2(columns: list[int]) -> int:
    """Rank of a GF(2) matrix whose columns are row-index bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for vec in columns:
        while vec:
            top = vec.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = vec
                rank += 1
                break
            vec ^= piv
    return rank


def _rank_gfp(columns: list[list[int]], p: int) -> int:
    pivots: list[tuple[int, list[int]]] = []
    rank = 0
    for vec in columns:
        v = list(vec)
        for row, pivot in pivots:
            c = v[row] % p
            if c:
                v = [(a - c * b) % p for a, b in zip(v, pivot)]
        for row, a in enumerate(v):
            a %= p
            if a:
                inv = pow(a, p - 2, p)
                pivots.append((row, [(x * inv) % p for x in v]))
                rank += 1
                break
    return rank


def _rank_exact(columns: list[list[int]]) -> int:
    pivots: list[tuple[int, list[Fraction]]] = []
    rank = 0
    for vec in columns:
        v = [Fraction(x) for x in vec]
        for row, pivot in pivots:
            c = v[row]
            if c:
                v = [a - c * b for a, b in zip(v, pivot)]
        for row, a in enumerate(v):
            if a:
                pivots.append((row, [x / a for x in v]))
                rank += 1
                break
    return rank


def _boundary_ranks(faces_by_size: list[list[int]], field: FieldSpec) -> list[int]:
    """ranks[s] = rank of the boundary map from size-s faces to size-(s-1) faces."""
    top = len(faces_by_size) - 1
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        index = {m: i for i, m in enumerate(faces_by_size[s - 1])}
        if field.characteristic == 2:
            cols = []
            for face in faces_by_size[s]:
                col = 0
                rest = face
                while rest:
                    low = rest & -rest
                    col |= 1 << index[face ^ low]
                    rest ^= low
                cols.append(col)
            ranks[s] = _rank_gf2(cols)
        else:
            m = len(faces_by_size[s - 1])
            cols = []
            for face in faces_by_size[s]:
                vec = [0] * m
                sign = 1
                rest = face
                while rest:
                    low = rest & -rest
                    vec[index[face ^ low]] = sign
                    sign = -sign
                    rest ^= low
                cols.append(vec)
            if field.characteristic:
                ranks[s] = _rank_gfp(cols, field.characteristic)
            else:
                ranks[s] = _rank_exact(cols)
    return ranks


def _homology_dims(faces_by_size: list[list[int]], field: FieldSpec) -> tuple[int, ...]:
    """Reduced homology dimensions in degrees -1..top for a downward-closed
    face family; faces_by_size[0] must be [0] (the empty face).

    Uses the augmented chain complex: the boundary of a vertex is the empty
    face, and dim H_d = nullity(boundary_d) - rank(boundary_{d+1}).
    """
    top = len(faces_by_size) - 1
    ranks = _boundary_ranks(faces_by_size, field)
    return tuple(
        len(faces_by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1)
    )


def reduced_homology_dims(
    c: SimplicialComplex, field: FieldSpec = GF2, guard: int = DEFAULT_GUARD
) -> tuple[int, ...]:
    """Dimensions of the reduced homology of c in degrees -1 .. dim c."""
    if c.n_vertices > guard:
        raise OracleGuardError(c.n_vertices, guard)
    return _homology_dims(c.faces_by_size(), field)


def hochster_betti(
    c: SimplicialComplex, field: FieldSpec = GF2, guard: int = DEFAULT_GUARD
) -> BettiTable:
    """Graded Betti numbers of the face ring of c by exhaustive subset sweep:
    every vertex subset S of size j contributes dim H_{j-i-1} of the induced
    subcomplex on S to the (i, j) entry.

    Deterministic: subsets are visited in ascending mask order and results
    only ever accumulate, so any internal partitioning cannot change output.
    """
    n = c.n_vertices
    if n > guard:
        raise OracleGuardError(n, guard)
    table = BettiTable(n)
    table.add(0, 0, 1)
    all_faces = sorted(c.faces())
    nonempty = [f for f in all_faces if f]
    for selection in range(1, 1 << n):
        # a selection inside a facet induces a full simplex, which is acyclic
        if c.is_face(selection):
            continue
        chosen = [f for f in nonempty if f & ~selection == 0]
        if chosen:
            top = max(f.bit_count() for f in chosen)
            buckets: list[list[int]] = [[] for _ in range(top + 1)]
            buckets[0].append(0)
            for f in chosen:
                buckets[f.bit_count()].append(f)
        else:
            buckets = [[0]]
        dims = _homology_dims(buckets, field)
        j = selection.bit_count()
        for idx, h in enumerate(dims):
            if h:
                table.add(j - idx, j, h)
    return table


def reisner_is_cm(
    c: SimplicialComplex, field: FieldSpec = GF2, guard: int = DEFAULT_GUARD
) -> bool:
    """Cohen-Macaulay test by link homology: true iff for every face sigma
    (the empty face included) the link of sigma has vanishing reduced homology
    below its own dimension."""
    if c.n_vertices > guard:
        raise OracleGuardError(c.n_vertices, guard)
    for sigma in sorted(c.faces()):
        lk = link(c, sigma)
        dims = reduced_homology_dims(lk, field, guard)
        if any(dims[:-1]):
            return False
    return True
