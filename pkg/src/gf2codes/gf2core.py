"""Bit-packed vectors and matrices over GF(2).

Coordinate i of a vector is bit i of a Python int, so weight is a popcount,
addition is XOR, and an inner product is a popcount parity.  All types are
immutable; operations return fresh values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Gf2Vector",
    "Gf2Matrix",
    "RrefResult",
    "rref",
    "rref_ints",
    "nullspace_basis",
]


@dataclass(frozen=True)
class Gf2Vector:
    """A vector in F_2^length; coordinate i is bit i of ``bits``."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative vector length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits 0x{self.bits:x} do not fit in length {self.length}")

    @classmethod
    def zero(cls, length: int) -> Gf2Vector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> Gf2Vector:
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> Gf2Vector:
        """Build from an explicit 0/1 sequence, entry i giving coordinate i."""
        bits = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError(f"coordinate {i} is {c!r}, expected 0 or 1")
            bits |= c << i
        return cls(len(coords), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> Gf2Vector:
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise ValueError(f"support index {i} outside [0, {length})")
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def from_string(cls, text: str) -> Gf2Vector:
        """Parse a '0'/'1' string; character i gives coordinate i."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"character {i} is {ch!r}, expected '0' or '1'")
        return cls(len(text), bits)

    def weight(self) -> int:
        """Hamming weight (number of set coordinates)."""
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Indices of nonzero coordinates, ascending."""
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def dot(self, other: Gf2Vector) -> int:
        """Inner product in GF(2)."""
        self._check_length(other)
        return (self.bits & other.bits).bit_count() & 1

    def __add__(self, other: Gf2Vector) -> Gf2Vector:
        self._check_length(other)
        return Gf2Vector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def _check_length(self, other: Gf2Vector) -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))


@dataclass(frozen=True)
class Gf2Matrix:
    """A matrix over GF(2), stored as a tuple of equal-length rows."""

    rows: tuple[Gf2Vector, ...]
    n_cols: int

    def __post_init__(self) -> None:
        if self.n_cols < 0:
            raise ValueError(f"negative column count {self.n_cols}")
        for i, row in enumerate(self.rows):
            if row.length != self.n_cols:
                raise ValueError(f"row {i} has length {row.length}, expected {self.n_cols}")

    @classmethod
    def from_ints(cls, rows: Sequence[int], n_cols: int) -> Gf2Matrix:
        return cls(tuple(Gf2Vector(n_cols, r) for r in rows), n_cols)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> Gf2Matrix:
        """Build from 0/1 row lists; rows must all have the same length."""
        if not rows:
            raise ValueError("cannot infer column count from an empty row list")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {i} has length {len(row)}, expected {width}")
        return cls(tuple(Gf2Vector.from_coords(row) for row in rows), width)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row_bits(self) -> tuple[int, ...]:
        return tuple(row.bits for row in self.rows)

    def __str__(self) -> str:
        return "\n".join(str(row) for row in self.rows)


@dataclass(frozen=True)
class RrefResult:
    """Outcome of row reduction: same-shape matrix, rank, pivot columns."""

    matrix: Gf2Matrix
    rank: int
    pivots: tuple[int, ...]


def rref_ints(rows: Sequence[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Row-reduce bit-packed rows; returns (reduced rows, pivot columns).

    Fully reduced: each pivot column is zero in every other row.  Nonzero rows
    end up on top in increasing pivot order, zero rows at the bottom.
    """
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(work)) if (work[i] >> c) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> c) & 1:
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, pivots


def rref(matrix: Gf2Matrix) -> RrefResult:
    """Reduced row-echelon form over GF(2), preserving row count."""
    work, pivots = rref_ints(matrix.row_bits(), matrix.n_cols)
    reduced = Gf2Matrix.from_ints(work, matrix.n_cols)
    return RrefResult(matrix=reduced, rank=len(pivots), pivots=tuple(pivots))


def nullspace_basis(matrix: Gf2Matrix) -> Gf2Matrix:
    """Basis of {x : M x^T = 0}, one row per free column of M.

    The result has n_cols - rank rows; for an identity block it is empty.
    """
    work, pivots = rref_ints(matrix.row_bits(), matrix.n_cols)
    pivot_set = set(pivots)
    basis: list[int] = []
    for free in range(matrix.n_cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row_idx, p in enumerate(pivots):
            if (work[row_idx] >> free) & 1:
                vec |= 1 << p
        basis.append(vec)
    return Gf2Matrix.from_ints(basis, matrix.n_cols)
