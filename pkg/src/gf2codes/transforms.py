"""Code surgery: projections, shortenings, hyperplane subcodes, extensions.

These are the moves used to pass from a code to smaller ones while tracking
exactly how weights and dimension change.
"""

from __future__ import annotations

from typing import Iterable

from .codes import LinearCode
from .gf2core import Gf2Matrix, Gf2Vector, nullspace_basis

__all__ = [
    "projected_weight",
    "project",
    "shorten",
    "subcode_avoiding",
    "extend_span",
    "spanning_form",
]


def projected_weight(weight_v: int, weight_v_plus_w: int, weight_w: int) -> int:
    """Weight of v after deleting the support of w, from three weights only.

    Coordinates of v inside the support of w split it: |v| = inside + outside
    and |v + w| = |w| - inside + outside, so outside = (|v| + |v+w| - |w|) / 2.
    """
    triple = (weight_v, weight_v_plus_w, weight_w)
    if min(triple) < 0:
        raise ValueError(
            f"unrealizable weight triple {triple}: weights must be nonnegative"
        )
    total = weight_v + weight_v_plus_w - weight_w
    if total < 0:
        raise ValueError(
            f"unrealizable weight triple {triple}: |v| + |v+w| - |w| = {total} < 0"
        )
    if total % 2:
        raise ValueError(
            f"unrealizable weight triple {triple}: |v| + |v+w| - |w| = {total} is odd"
        )
    return total // 2


def _delete_coords(bits: int, keep: tuple[int, ...]) -> int:
    out = 0
    for new_pos, old_pos in enumerate(keep):
        if (bits >> old_pos) & 1:
            out |= 1 << new_pos
    return out


def _restrict(code: LinearCode, keep: tuple[int, ...]) -> LinearCode:
    rows = [_delete_coords(r, keep) for r in code.generator.row_bits()]
    return LinearCode.from_rows(Gf2Matrix.from_ints(rows, len(keep)))


def project(code: LinearCode, w: Gf2Vector) -> LinearCode:
    """Image of the code after deleting the support of a nonzero codeword w.

    Surjective and linear, so the result is a code of length n - |w|; its
    dimension drops by the dimension of {v in the code : supp(v) within
    supp(w)}, which is at least 1 because w itself maps to zero.
    """
    if w.bits == 0:
        raise ValueError("cannot project along the zero word")
    if not code.contains(w):
        raise ValueError("projection word is not a codeword")
    keep = tuple(i for i in range(code.n) if not (w.bits >> i) & 1)
    return _restrict(code, keep)


def shorten(code: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Subcode vanishing on the given coordinates, with those deleted.

    The result's dimension is at least dimension - |coords|; length drops by
    |coords| exactly.
    """
    coord_set = sorted(set(coords))
    for c in coord_set:
        if not 0 <= c < code.n:
            raise ValueError(f"coordinate {c} outside [0, {code.n})")
    rows = code.generator.row_bits()
    # Constraint matrix over the message space: one row per shortened
    # coordinate, entry i telling whether generator row i is set there.
    constraints = []
    for c in coord_set:
        constraints.append(sum(((rows[i] >> c) & 1) << i for i in range(len(rows))))
    messages = nullspace_basis(Gf2Matrix.from_ints(constraints, len(rows)))
    sub_rows = []
    for msg in messages.row_bits():
        word = 0
        for i in range(len(rows)):
            if (msg >> i) & 1:
                word ^= rows[i]
        sub_rows.append(word)
    keep = tuple(i for i in range(code.n) if i not in set(coord_set))
    restricted = [_delete_coords(r, keep) for r in sub_rows]
    return LinearCode.from_rows(Gf2Matrix.from_ints(restricted, len(keep)))


def subcode_avoiding(code: LinearCode, v: Gf2Vector) -> LinearCode:
    """A hyperplane subcode (dimension exactly one less) not containing v.

    Kernel of the coordinate functional x -> x_p where p is the first pivot
    of the canonical generator at which v is set; deterministic in the code
    and v.  Ambient length is unchanged.
    """
    if v.bits == 0:
        raise ValueError("cannot avoid the zero word: every subcode contains it")
    if not code.contains(v):
        raise ValueError("word to avoid is not a codeword")
    rows = code.generator.row_bits()
    pivot_row = next(i for i, p in enumerate(code.pivots()) if (v.bits >> p) & 1)
    remaining = [r for i, r in enumerate(rows) if i != pivot_row]
    return LinearCode.from_rows(Gf2Matrix.from_ints(remaining, code.n))


def extend_span(code: LinearCode, v: Gf2Vector) -> LinearCode:
    """Span of the code and one more vector (same code if v already inside)."""
    if v.length != code.n:
        raise ValueError(f"vector length {v.length} does not match code length {code.n}")
    rows = list(code.generator.row_bits()) + [v.bits]
    return LinearCode.from_rows(Gf2Matrix.from_ints(rows, code.n))


def spanning_form(code: LinearCode) -> LinearCode:
    """Delete coordinates where every codeword vanishes.

    The result spans its ambient space (its length is the union of supports)
    and has the same dimension and nonzero weights.
    """
    union = 0
    for r in code.generator.row_bits():
        union |= r
    keep = tuple(i for i in range(code.n) if (union >> i) & 1)
    return _restrict(code, keep)
