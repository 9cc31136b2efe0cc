"""Power moments of weight distributions and exact count solving.

For a dimension-d code spanning F_2^n, the first four power moments of the
weight distribution are determined by n, d and the number of weight-2 and
weight-3 words in the dual (a2_star, a3_star):

    sum_{i>0} a_i        = 2^d - 1
    sum_{i>0} i   * a_i  = 2^(d-1) * n
    sum_{i>0} i^2 * a_i  = 2^(d-1) * (a2_star + n(n+1)/2)
    sum_{i>0} i^3 * a_i  = 2^(d-2) * (3*(a2_star*n - a3_star) + n^2(n+3)/2)

Given a prescribed set of nonzero weights this pins the counts as affine
functions of (a2_star, a3_star); leftover moment equations become residual
constraints.  Everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, floor, gcd, lcm
from typing import Iterable, Mapping

from .codes import DEFAULT_ENUMERATION_CAP, LinearCode, WeightEnumerator, macwilliams_transform

__all__ = [
    "AffineForm",
    "MomentReport",
    "LinearCountSolution",
    "DualCountBounds",
    "FeasibilityVerdict",
    "FEASIBLE",
    "INFEASIBLE",
    "power_moment",
    "moment_identities_check",
    "solve_weight_counts",
    "feasibility_check",
]

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"

REASON_NONE = "none"
REASON_NEGATIVE = "negative count"
REASON_NON_INTEGER = "non-integer count"
REASON_DIVISIBILITY = "divisibility contradiction"
REASON_INCONSISTENT = "inconsistent system"


@dataclass(frozen=True)
class AffineForm:
    """const + a2_coeff * a2_star + a3_coeff * a3_star, coefficients exact."""

    const: Fraction = Fraction(0)
    a2_coeff: Fraction = Fraction(0)
    a3_coeff: Fraction = Fraction(0)

    def evaluate(self, a2_star: int | Fraction, a3_star: int | Fraction) -> Fraction:
        return self.const + self.a2_coeff * a2_star + self.a3_coeff * a3_star

    def is_constant(self) -> bool:
        return self.a2_coeff == 0 and self.a3_coeff == 0

    def scaled(self, factor: Fraction) -> AffineForm:
        return AffineForm(self.const * factor, self.a2_coeff * factor, self.a3_coeff * factor)

    def minus(self, other: AffineForm, factor: Fraction = Fraction(1)) -> AffineForm:
        return AffineForm(
            self.const - factor * other.const,
            self.a2_coeff - factor * other.a2_coeff,
            self.a3_coeff - factor * other.a3_coeff,
        )

    def __str__(self) -> str:
        parts = [str(self.const)]
        for coeff, name in ((self.a2_coeff, "a2_star"), (self.a3_coeff, "a3_star")):
            if coeff == 0:
                continue
            sign = "+" if coeff > 0 else "-"
            mag = abs(coeff)
            parts.append(f"{sign} {mag}*{name}" if mag != 1 else f"{sign} {name}")
        return " ".join(parts)


@dataclass(frozen=True)
class MomentReport:
    """Moment identity check of one spanning code."""

    n: int
    d: int
    moments: tuple[int, int, int, int]
    a2_star: int
    a3_star: int
    identity_status: tuple[bool, bool, bool, bool]

    @property
    def all_hold(self) -> bool:
        return all(self.identity_status)


@dataclass(frozen=True)
class LinearCountSolution:
    """Counts for a prescribed weight set as affine forms in (a2*, a3*).

    ``expressions`` maps each weight to its count; ``residuals`` maps each
    unused moment-equation index (1-based) to a form that must vanish.
    ``consistent`` is False when a residual is a nonzero constant, i.e. no
    assignment of (a2_star, a3_star) can satisfy the system.
    """

    n: int
    d: int
    weights: tuple[int, ...]
    expressions: Mapping[int, AffineForm]
    residuals: Mapping[int, AffineForm]
    consistent: bool
    note: str = ""


@dataclass(frozen=True)
class DualCountBounds:
    """Optional box constraints on (a2_star, a3_star) for feasibility search."""

    a2_min: int = 0
    a2_max: int | None = None
    a3_min: int = 0
    a3_max: int | None = None


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of a necessary-condition search over (a2_star, a3_star).

    Feasible means the moment system admits nonnegative integer counts; it
    does not promise a code exists.  Infeasible is a proof that none does.
    """

    status: str
    reason: str
    witness: Mapping[str, object] | None = None
    certificate: str | None = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def power_moment(we: WeightEnumerator, k: int) -> int:
    """sum over all weights i of i^k * a_i, with the convention 0^0 = 1.

    At k = 0 this is the total count 2^d, so the first identity reads
    power_moment(we, 0) - 1 = 2^d - 1.
    """
    if k < 0:
        raise ValueError(f"negative moment order {k}")
    return sum(a * i**k for i, a in enumerate(we.counts))


def _moment_rhs(n: int, d: int) -> tuple[AffineForm, AffineForm, AffineForm, AffineForm]:
    """Right-hand sides of the four moment equations as affine forms."""
    half = Fraction(2) ** (d - 1)
    quarter = Fraction(2) ** (d - 2)
    return (
        AffineForm(Fraction(2**d - 1)),
        AffineForm(half * n),
        AffineForm(half * Fraction(n * (n + 1), 2), a2_coeff=half),
        AffineForm(
            quarter * Fraction(n * n * (n + 3), 2),
            a2_coeff=quarter * 3 * n,
            a3_coeff=-quarter * 3,
        ),
    )


def moment_identities_check(code: LinearCode, cap: int = DEFAULT_ENUMERATION_CAP) -> MomentReport:
    """Check all four moment identities for a spanning code, exactly.

    The dual counts a2_star, a3_star are obtained from the dual distribution
    via the transform, so the check exercises the identities end to end.
    """
    if not code.predicate_profile().is_spanning:
        raise ValueError(
            "moment identities require a spanning code (no identically-zero coordinate); "
            "apply spanning_form first"
        )
    we = code.weight_distribution(cap=cap)
    dual_we = macwilliams_transform(we, code.dimension)
    a2_star = dual_we.count(2) if code.n >= 2 else 0
    a3_star = dual_we.count(3) if code.n >= 3 else 0
    moments = tuple(power_moment(we, k) for k in range(4))
    rhs = _moment_rhs(code.n, code.dimension)
    # The identities cover nonzero weights only; at k = 0 that is the total
    # minus the zero word.
    lhs = (moments[0] - 1,) + moments[1:]
    status = tuple(
        Fraction(lhs[k]) == rhs[k].evaluate(a2_star, a3_star) for k in range(4)
    )
    return MomentReport(
        n=code.n,
        d=code.dimension,
        moments=moments,  # type: ignore[arg-type]
        a2_star=a2_star,
        a3_star=a3_star,
        identity_status=status,  # type: ignore[arg-type]
    )


def solve_weight_counts(n: int, d: int, weights: Iterable[int]) -> LinearCountSolution:
    """Solve the first |weights| moment equations for the counts, exactly.

    Returns each count as an affine form in (a2_star, a3_star) plus the
    residual forms of the unused equations.  The Vandermonde system on
    distinct positive weights is always nonsingular, so failure can only be
    a nonzero constant residual (flagged via ``consistent``).
    """
    ws = tuple(sorted(set(weights)))
    if not 1 <= len(ws) <= 4:
        raise ValueError(f"need between 1 and 4 distinct weights, got {len(ws)}")
    if any(w <= 0 for w in ws):
        raise ValueError(f"weights must be positive, got {ws}")
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    m = len(ws)
    rhs = _moment_rhs(n, d)
    rows = [[Fraction(w) ** k for w in ws] for k in range(m)]
    forms = [rhs[k] for k in range(m)]
    for col in range(m):
        piv = next(i for i in range(col, m) if rows[i][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        forms[col], forms[piv] = forms[piv], forms[col]
        factor = rows[col][col]
        rows[col] = [x / factor for x in rows[col]]
        forms[col] = forms[col].scaled(1 / factor)
        for i in range(m):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
                forms[i] = forms[i].minus(forms[col], f)
    expressions = {w: forms[j] for j, w in enumerate(ws)}
    residuals: dict[int, AffineForm] = {}
    note = ""
    consistent = True
    for k in range(m, 4):
        lhs = AffineForm()
        for j, w in enumerate(ws):
            lhs = lhs.minus(expressions[w], -(Fraction(w) ** k))
        residual = lhs.minus(rhs[k])
        residuals[k + 1] = residual
        if residual.is_constant() and residual.const != 0:
            consistent = False
            note = f"equation {k + 1} reduces to {residual.const} = 0"
    return LinearCountSolution(
        n=n,
        d=d,
        weights=ws,
        expressions=expressions,
        residuals=residuals,
        consistent=consistent,
        note=note,
    )


def _two_adic_valuation(x: Fraction) -> int | None:
    """2-adic valuation of a nonzero rational; None for zero."""
    if x == 0:
        return None
    num, den = x.numerator, x.denominator
    return (abs(num) & -abs(num)).bit_length() - ((den & -den).bit_length())


def _crt_merge(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Combine a3 = r1 (mod m1) with a3 = r2 (mod m2); None if incompatible."""
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = lcm(m1, m2)
    step = m2 // g
    k = ((r2 - r1) // g * pow(m1 // g, -1, step)) % step if step > 1 else 0
    return (r1 + m1 * k) % l, l


def _solve_pinned(form: AffineForm, fixed_a2: int | None) -> Fraction:
    """Value forced on the remaining parameter by a vanishing residual."""
    if fixed_a2 is None:
        return -form.const / form.a2_coeff
    return -(form.const + form.a2_coeff * fixed_a2) / form.a3_coeff


def feasibility_check(
    n: int,
    d: int,
    weights: Iterable[int],
    bounds: DualCountBounds | None = None,
) -> FeasibilityVerdict:
    """Search for (a2_star, a3_star) making all counts nonnegative integers.

    A necessary-condition check: Infeasible rules out any spanning code of
    length n and dimension d with nonzero weights inside the given set;
    Feasible only reports a consistent assignment.  The search box defaults
    to 0 <= a2_star <= C(n,2), 0 <= a3_star <= C(n,3).
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    sol = solve_weight_counts(n, d, weights)
    if not sol.consistent:
        return FeasibilityVerdict(
            status=INFEASIBLE,
            reason=REASON_INCONSISTENT,
            certificate=sol.note,
        )
    b = bounds or DualCountBounds()
    a2_lo = max(0, b.a2_min)
    a2_hi = comb(n, 2) if b.a2_max is None else min(b.a2_max, comb(n, 2))
    a3_lo = max(0, b.a3_min)
    a3_hi = comb(n, 3) if b.a3_max is None else min(b.a3_max, comb(n, 3))

    # Counts that do not depend on the free parameters fail outright.
    for w in sol.weights:
        f = sol.expressions[w]
        if f.is_constant():
            if f.const.denominator != 1:
                return FeasibilityVerdict(
                    status=INFEASIBLE,
                    reason=REASON_NON_INTEGER,
                    certificate=f"a_{w} = {f.const} is not an integer",
                )
            if f.const < 0:
                return FeasibilityVerdict(
                    status=INFEASIBLE,
                    reason=REASON_NEGATIVE,
                    certificate=f"a_{w} = {f.const} is negative",
                )

    pin_a2 = next(
        (
            (k, f)
            for k, f in sol.residuals.items()
            if f.a2_coeff != 0 and f.a3_coeff == 0
        ),
        None,
    )
    pin_a3 = next(((k, f) for k, f in sol.residuals.items() if f.a3_coeff != 0), None)

    failure: tuple[str, str] | None = None

    def record(reason: str, certificate: str) -> None:
        nonlocal failure
        if failure is None:
            failure = (reason, certificate)

    if pin_a2 is not None:
        k, f = pin_a2
        val = _solve_pinned(f, None)
        if val.denominator != 1:
            v2 = _two_adic_valuation(val)
            detail = f" (2-adic valuation {v2} < 0)" if v2 is not None and v2 < 0 else ""
            return FeasibilityVerdict(
                status=INFEASIBLE,
                reason=REASON_DIVISIBILITY,
                certificate=f"equation {k} forces a2_star = {val}, not an integer{detail}",
            )
        if not a2_lo <= val <= a2_hi:
            return FeasibilityVerdict(
                status=INFEASIBLE,
                reason=REASON_INCONSISTENT,
                certificate=f"equation {k} forces a2_star = {val}, outside [{a2_lo}, {a2_hi}]",
            )
        a2_candidates: Iterable[int] = (int(val),)
    else:
        a2_candidates = range(a2_lo, a2_hi + 1)

    for a2 in a2_candidates:
        if pin_a3 is not None:
            k, f = pin_a3
            val = _solve_pinned(f, a2)
            if val.denominator != 1:
                record(
                    REASON_DIVISIBILITY,
                    f"at a2_star={a2}, equation {k} forces a3_star = {val}, not an integer",
                )
                continue
            if not a3_lo <= val <= a3_hi:
                record(
                    REASON_INCONSISTENT,
                    f"at a2_star={a2}, equation {k} forces a3_star = {val}, "
                    f"outside [{a3_lo}, {a3_hi}]",
                )
                continue
            candidate_a3s: Iterable[int] = (int(val),)
        else:
            found = _admissible_a3(sol, a2, a3_lo, a3_hi, record)
            candidate_a3s = () if found is None else (found,)
        for a3 in candidate_a3s:
            counts: dict[int, int] = {}
            ok = True
            for w in sol.weights:
                value = sol.expressions[w].evaluate(a2, a3)
                if value.denominator != 1:
                    record(REASON_NON_INTEGER, f"a_{w} = {value} at (a2_star={a2}, a3_star={a3})")
                    ok = False
                    break
                if value < 0:
                    record(REASON_NEGATIVE, f"a_{w} = {value} at (a2_star={a2}, a3_star={a3})")
                    ok = False
                    break
                counts[w] = int(value)
            if ok:
                return FeasibilityVerdict(
                    status=FEASIBLE,
                    reason=REASON_NONE,
                    witness={"a2_star": a2, "a3_star": a3, "counts": counts},
                )
    reason, certificate = failure if failure is not None else (
        REASON_INCONSISTENT,
        "empty search range for (a2_star, a3_star)",
    )
    return FeasibilityVerdict(status=INFEASIBLE, reason=reason, certificate=certificate)


def _admissible_a3(
    sol: LinearCountSolution,
    a2: int,
    a3_lo: int,
    a3_hi: int,
    record,
) -> int | None:
    """Smallest a3 in [a3_lo, a3_hi] making every count a nonnegative integer.

    With a2 fixed each count is alpha + beta * a3; nonnegativity becomes an
    interval in a3 and integrality a congruence, merged across counts.
    """
    lo, hi = a3_lo, a3_hi
    rem, mod = 0, 1
    for w in sol.weights:
        f = sol.expressions[w]
        alpha = f.const + f.a2_coeff * a2
        beta = f.a3_coeff
        if beta == 0:
            if alpha.denominator != 1:
                record(REASON_NON_INTEGER, f"a_{w} = {alpha} at a2_star={a2}")
                return None
            if alpha < 0:
                record(REASON_NEGATIVE, f"a_{w} = {alpha} at a2_star={a2}")
                return None
            continue
        bound = -alpha / beta
        if beta > 0:
            lo = max(lo, ceil(bound))
        else:
            hi = min(hi, floor(bound))
        denom = lcm(alpha.denominator, beta.denominator)
        a_int = int(alpha * denom)
        b_int = int(beta * denom)
        g = gcd(b_int, denom)
        if (-a_int) % g:
            record(
                REASON_NON_INTEGER,
                f"a_{w} = {alpha} + {beta}*a3_star is never an integer at a2_star={a2}",
            )
            return None
        step = denom // g
        r0 = ((-a_int // g) * pow(b_int // g, -1, step)) % step if step > 1 else 0
        merged = _crt_merge(rem, mod, r0, step)
        if merged is None:
            record(
                REASON_NON_INTEGER,
                f"integrality congruences on a3_star conflict at a2_star={a2}",
            )
            return None
        rem, mod = merged
    if lo > hi:
        record(REASON_NEGATIVE, f"no a3_star in [{a3_lo}, {a3_hi}] keeps all counts "
                                f"nonnegative at a2_star={a2}")
        return None
    first = lo + ((rem - lo) % mod)
    if first > hi:
        record(
            REASON_NON_INTEGER,
            f"no integer-valued a3_star in [{lo}, {hi}] at a2_star={a2} "
            f"(need a3_star = {rem} mod {mod})",
        )
        return None
    return first
