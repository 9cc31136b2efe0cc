"""Exhaustive search for the largest code with a prescribed weight set.

Every subspace of F_2^n has a unique reduced row-echelon generator, so a
depth-first search over such generators visits each candidate code exactly
once: rows are added with strictly increasing pivots, free bits enumerated
in increasing numeric order, and a row is accepted only when every new
codeword it creates (its sums with the words found so far) stays in the
weight set.  Complements feasibility_check from the other side: search is
exact but exponential, feasibility is fast but only necessary.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .codes import LinearCode
from .gf2core import Gf2Matrix
from .moments import feasibility_check
from .transforms import spanning_form

__all__ = [
    "DEFAULT_NODE_CAP",
    "SearchResult",
    "max_dimension_exhaustive",
    "cross_validate",
]

DEFAULT_NODE_CAP = 10**8


@dataclass(frozen=True)
class SearchResult:
    """Largest dimension found, with the first witness in search order."""

    n: int
    weights: tuple[int, ...]
    max_dimension: int
    witness: Gf2Matrix | None
    nodes_explored: int
    complete: bool


class _NodeBudgetExceeded(Exception):
    pass


def max_dimension_exhaustive(
    n: int,
    weights: Iterable[int],
    node_cap: int = DEFAULT_NODE_CAP,
) -> SearchResult:
    """Exact maximum dimension of a code in F_2^n with weights inside the set.

    Explores canonical generators only; ``node_cap`` bounds the number of
    candidate rows examined, and an exhausted budget is reported through
    ``complete=False`` (the result is then only a lower bound).
    """
    if n < 0:
        raise ValueError(f"negative length {n}")
    wset = frozenset(weights)
    if any(w <= 0 or w > n for w in wset):
        raise ValueError(f"weights must lie in [1, {n}], got {sorted(wset)}")

    best_rows: list[int] = []
    rows: list[int] = []
    words: list[int] = []
    nodes = 0

    def extend(last_pivot: int, union: int) -> None:
        nonlocal nodes, best_rows
        for pivot in range(last_pivot + 1, n):
            if (union >> pivot) & 1:
                continue
            for mask in range(1 << (n - pivot - 1)):
                nodes += 1
                if nodes > node_cap:
                    raise _NodeBudgetExceeded
                candidate = (1 << pivot) | (mask << (pivot + 1))
                if candidate.bit_count() not in wset:
                    continue
                new_words = [candidate ^ x for x in words]
                if any(x.bit_count() not in wset for x in new_words):
                    continue
                rows.append(candidate)
                words.append(candidate)
                words.extend(new_words)
                if len(rows) > len(best_rows):
                    best_rows = list(rows)
                extend(pivot, union | candidate)
                del words[-(len(new_words) + 1):]
                rows.pop()

    complete = True
    try:
        extend(-1, 0)
    except _NodeBudgetExceeded:
        complete = False

    witness = Gf2Matrix.from_ints(best_rows, n) if best_rows else None
    return SearchResult(
        n=n,
        weights=tuple(sorted(wset)),
        max_dimension=len(best_rows),
        witness=witness,
        nodes_explored=nodes,
        complete=complete,
    )


def cross_validate(
    n_max: int,
    weight_universe: Iterable[int],
    node_cap: int = DEFAULT_NODE_CAP,
) -> list[tuple[int, tuple[int, ...], bool]]:
    """Check search witnesses against the moment feasibility test.

    For every length up to n_max and every subset W of the universe, a
    witness found by exhaustive search is re-embedded at its spanning
    length and must not be ruled out by feasibility_check: a disagreement
    would mean the necessary condition is not actually necessary.  Returns
    (n, W, agree) triples.
    """
    universe = sorted(set(weight_universe))
    results: list[tuple[int, tuple[int, ...], bool]] = []
    for n in range(1, n_max + 1):
        for r in range(len(universe) + 1):
            for subset in combinations(universe, r):
                wset = tuple(w for w in subset if w <= n)
                found = max_dimension_exhaustive(n, wset, node_cap=node_cap)
                agree = True
                if found.max_dimension >= 1 and found.witness is not None:
                    code = spanning_form(LinearCode.from_rows(found.witness))
                    verdict = feasibility_check(code.n, code.dimension, wset)
                    agree = verdict.feasible
                results.append((n, subset, agree))
    return results
