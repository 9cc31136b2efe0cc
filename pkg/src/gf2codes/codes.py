"""Binary linear codes: canonical generators, weight data, duals, predicates.

A ``LinearCode`` is identified with its unique reduced row-echelon generator
matrix (no zero rows), so two codes are equal exactly when they are the same
subspace.  Weight distributions are computed by a Gray-code walk over the
message space: each step flips one message bit, so each step costs one row
XOR and one popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .gf2core import Gf2Matrix, Gf2Vector, nullspace_basis, rref_ints

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "LinearCode",
    "WeightEnumerator",
    "PredicateProfile",
    "macwilliams_transform",
    "parse_generator_text",
    "format_generator_text",
]

# Enumeration above 2^28 codewords is almost certainly a mistake, not a plan.
DEFAULT_ENUMERATION_CAP = 28


@dataclass(frozen=True)
class WeightEnumerator:
    """Weight distribution of a length-n code: counts[i] words of weight i."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")
        for i, a in enumerate(self.counts):
            if a < 0:
                raise ValueError(f"negative count {a} at weight {i}")

    def count(self, weight: int) -> int:
        return self.counts[weight]

    def nonzero(self) -> tuple[tuple[int, int], ...]:
        """(weight, count) pairs with nonzero count, ascending by weight."""
        return tuple((i, a) for i, a in enumerate(self.counts) if a)

    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class PredicateProfile:
    """Structural predicates of a code, all decided exactly."""

    is_even: bool
    is_doubly_even: bool
    is_isotropic: bool
    is_self_dual: bool
    is_spanning: bool


@dataclass(frozen=True)
class LinearCode:
    """A binary linear code held in canonical (RREF, no zero rows) form."""

    generator: Gf2Matrix

    def __post_init__(self) -> None:
        rows = self.generator.row_bits()
        last_pivot = -1
        for i, r in enumerate(rows):
            if r == 0:
                raise ValueError(f"generator row {i} is zero; use from_rows to canonicalize")
            p = (r & -r).bit_length() - 1
            if p <= last_pivot:
                raise ValueError("generator rows are not in echelon order; use from_rows")
            for j, other in enumerate(rows):
                if j != i and (other >> p) & 1:
                    raise ValueError("generator is not fully reduced; use from_rows")
            last_pivot = p

    @classmethod
    def from_rows(cls, matrix: Gf2Matrix) -> LinearCode:
        """Canonicalize a spanning set of rows into a code.

        Dependent and zero rows are absorbed; the result's dimension is the
        rank of the input.
        """
        work, pivots = rref_ints(matrix.row_bits(), matrix.n_cols)
        return cls(Gf2Matrix.from_ints(work[: len(pivots)], matrix.n_cols))

    @property
    def n(self) -> int:
        """Ambient length."""
        return self.generator.n_cols

    @property
    def dimension(self) -> int:
        return self.generator.n_rows

    def pivots(self) -> tuple[int, ...]:
        """Pivot column of each generator row (its lowest set coordinate)."""
        return tuple((r & -r).bit_length() - 1 for r in self.generator.row_bits())

    def contains(self, v: Gf2Vector) -> bool:
        """Exact membership by reduction against the canonical generator."""
        if v.length != self.n:
            raise ValueError(f"vector length {v.length} does not match code length {self.n}")
        x = v.bits
        for row, p in zip(self.generator.row_bits(), self.pivots()):
            if (x >> p) & 1:
                x ^= row
        return x == 0

    def weight_distribution(self, cap: int = DEFAULT_ENUMERATION_CAP) -> WeightEnumerator:
        """Exact weight distribution by enumerating all 2^dimension words.

        Walks the message space in Gray-code order (2^d - 1 single-row XORs).
        Raises if the dimension exceeds ``cap``.
        """
        d = self.dimension
        if d > cap:
            raise ValueError(
                f"dimension {d} exceeds enumeration cap {cap}; raise the cap to proceed"
            )
        counts = [0] * (self.n + 1)
        counts[0] = 1
        rows = self.generator.row_bits()
        cur = 0
        for m in range(1, 1 << d):
            cur ^= rows[(m & -m).bit_length() - 1]
            counts[cur.bit_count()] += 1
        return WeightEnumerator(self.n, tuple(counts))

    def dual(self) -> LinearCode:
        """The orthogonal complement under the standard inner product."""
        return LinearCode.from_rows(nullspace_basis(self.generator))

    def predicate_profile(self) -> PredicateProfile:
        """Decide evenness, double evenness, isotropy, self-duality, spanning.

        Isotropy (code contained in its dual) is G * G^T = 0: every row has
        even weight and every row pair meets in an even number of coordinates.
        Double evenness additionally needs each basis weight divisible by 4;
        with even pairwise meets this is closed under addition.
        """
        rows = self.generator.row_bits()
        union = 0
        for r in rows:
            union |= r
        pair_meets_even = all(
            (rows[i] & rows[j]).bit_count() % 2 == 0
            for i in range(len(rows))
            for j in range(i + 1, len(rows))
        )
        is_even = all(r.bit_count() % 2 == 0 for r in rows)
        is_isotropic = is_even and pair_meets_even
        is_doubly_even = pair_meets_even and all(r.bit_count() % 4 == 0 for r in rows)
        return PredicateProfile(
            is_even=is_even,
            is_doubly_even=is_doubly_even,
            is_isotropic=is_isotropic,
            is_self_dual=is_isotropic and 2 * self.dimension == self.n,
            is_spanning=union == (1 << self.n) - 1,
        )


@lru_cache(maxsize=None)
def _dual_weight_coefficient(n: int, j: int, i: int) -> int:
    """Coefficient of x^(n-j) y^j in (x+y)^(n-i) (x-y)^i."""
    lo = max(0, j - (n - i))
    hi = min(i, j)
    return sum(
        (-1 if k & 1 else 1) * comb(i, k) * comb(n - i, j - k) for k in range(lo, hi + 1)
    )


def macwilliams_transform(we: WeightEnumerator, d: int) -> WeightEnumerator:
    """Dual weight distribution from a dimension-d distribution, exactly.

    Expands sum_i a_i (x+y)^(n-i) (x-y)^i in integer arithmetic and divides
    by 2^d.  Any negative or non-divisible coefficient means the input was
    not the distribution of a dimension-d code.
    """
    if d < 0:
        raise ValueError(f"negative dimension {d}")
    if we.total() != 1 << d:
        raise ValueError(
            f"distribution sums to {we.total()}, expected 2^{d} = {1 << d}"
        )
    n = we.n
    acc = [0] * (n + 1)
    for i, a in enumerate(we.counts):
        if a == 0:
            continue
        for j in range(n + 1):
            acc[j] += a * _dual_weight_coefficient(n, j, i)
    out = []
    for j, c in enumerate(acc):
        if c < 0 or c % (1 << d):
            raise ValueError(
                f"not a valid code distribution: transform coefficient at weight {j} "
                f"is {c}, not a nonnegative multiple of 2^{d}"
            )
        out.append(c >> d)
    return WeightEnumerator(n, tuple(out))


def parse_generator_text(text: str) -> Gf2Matrix:
    """Parse the matrix text format: one '0'/'1' row per line.

    Blank lines and lines starting with '#' are ignored.  All rows must have
    equal length; errors carry the offending 1-based line number.
    """
    rows: list[int] = []
    width: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        bits = 0
        for i, ch in enumerate(line):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"line {lineno}: unexpected character {ch!r}")
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise ValueError(
                f"line {lineno}: row length {len(line)} differs from first row length {width}"
            )
        rows.append(bits)
    if width is None:
        raise ValueError("no generator rows found")
    return Gf2Matrix.from_ints(rows, width)


def format_generator_text(matrix: Gf2Matrix) -> str:
    """Render a matrix in the text format accepted by parse_generator_text."""
    return "\n".join(str(row) for row in matrix.rows) + "\n"
