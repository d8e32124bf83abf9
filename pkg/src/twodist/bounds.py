"""Upper bounds for the size of two-distance codes.

All methods are exact: the restricted Delsarte linear program is solved
by 2-variable vertex enumeration over rationals, the closed-form bounds
are evaluated as fractions and floored at the very end.  Identical input
always produces a bit-identical report.

Method tags used throughout (and printed in tables):

    lp      full linear programming bound (all Krawtchouk constraints)
    plotkin degree-1 certificate
    d2      degree-2 closed-form bound
    dd      single-step refinement of d2 by distance-distribution parity
    sc      two-distance spherical code bound
    gr      Gray-Rankin bound (valid for antipodal codes only, never
            aggregated as a general upper bound)
    ext     externally supplied best-known bound for A_q(n, d)
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .core import BoundStatus, TwoDistParams
from .krawtchouk import kraw_eval
from . import feasibility


class LpUnboundedError(RuntimeError):
    """The restricted LP has an unbounded feasible direction."""


def _lp_constraints(params: TwoDistParams):
    """Rows (a, b, c) meaning a*A_d + b*A_e + c >= 0, plus the two axes."""
    n, q, d, e = params.n, params.q, params.d, params.d2
    rows = [(1, 0, 0), (0, 1, 0)]
    for i in range(1, n + 1):
        rows.append((kraw_eval(n, q, i, d), kraw_eval(n, q, i, e), kraw_eval(n, q, i, 0)))
    return rows


def _lp_is_unbounded(rows) -> bool:
    """Check for a recession direction (u, v) >= 0, u+v > 0 in the cone."""
    # directions (1, t), t >= 0
    lo, hi = Fraction(0), None
    family_dead = False
    for a, b, _ in rows[2:]:
        if b > 0:
            lo = max(lo, Fraction(-a, b))
        elif b < 0:
            bound = Fraction(-a, b)
            hi = bound if hi is None else min(hi, bound)
        elif a < 0:
            family_dead = True
            break
    if not family_dead and (hi is None or lo <= hi):
        return True
    # direction (0, 1)
    return all(b >= 0 for a, b, _ in rows[2:])


def lp_optimum(params: TwoDistParams) -> tuple[Fraction, tuple[Fraction, Fraction]]:
    """Exact optimum of max 1 + A_d + A_e over the restricted Delsarte LP.

    Returns the optimum and the attaining vertex (A_d, A_e).  Raises
    LpUnboundedError when the feasible region is unbounded; degenerate
    inputs can trigger this, in-range table queries never do.
    """
    rows = _lp_constraints(params)
    if _lp_is_unbounded(rows):
        raise LpUnboundedError(f"restricted LP unbounded for {params}")
    best = Fraction(1)
    best_pt = (Fraction(0), Fraction(0))
    m = len(rows)
    for i in range(m):
        a1, b1, c1 = rows[i]
        for j in range(i + 1, m):
            a2, b2, c2 = rows[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(-c1 * b2 + c2 * b1, det)
            y = Fraction(-a1 * c2 + a2 * c1, det)
            if x < 0 or y < 0:
                continue
            if all(a * x + b * y + c >= 0 for a, b, c in rows):
                obj = 1 + x + y
                if obj > best:
                    best, best_pt = obj, (x, y)
    return best, best_pt


def lp_bound(params: TwoDistParams) -> int:
    """Floor of the exact restricted-LP optimum."""
    opt, _ = lp_optimum(params)
    return math.floor(opt)


def plotkin_bound(params: TwoDistParams) -> int | None:
    """floor(qd / (qd - (q-1)n)) when qd > (q-1)n, else None."""
    q, n, d = params.q, params.n, params.d
    excess = q * d - (q - 1) * n
    if excess <= 0:
        return None
    return (q * d) // excess


@dataclass(frozen=True)
class D2Bound:
    """Degree-2 bound outcome; `strict` records a strict degree-1 coefficient."""

    value: int
    exact: Fraction
    strict: bool

    @property
    def attains_integer(self) -> bool:
        return self.exact.denominator == 1


def d2_bound(params: TwoDistParams) -> D2Bound | None:
    """Closed-form degree-2 certificate bound, or None when inapplicable.

    Applicable when both Krawtchouk coefficients f_1, f_0 of the quadratic
    certificate are nonnegative resp. positive; `strict` is True when f_1
    is strictly positive, in which case a code attaining the bound is an
    orthogonal array of strength 2 (which dd_refine exploits).
    """
    q, n, d, delta = params.q, params.n, params.d, params.delta
    f1_lhs = q * (2 * d + delta)
    f1_rhs = 2 * n * q + 2 - 2 * n - q
    if f1_lhs < f1_rhs:
        return None
    denom = (
        n * (q - 1) * (n * q - n + 1)
        - q * q * (2 * n * d + n * delta - d * d - d * delta)
        + n * q * (2 * d + delta)
    )
    if denom <= 0:
        return None
    exact = Fraction(d * (d + delta) * q * q, denom)
    return D2Bound(value=math.floor(exact), exact=exact, strict=f1_lhs > f1_rhs)


def dd_refine(params: TwoDistParams, bound: int) -> int:
    """Single-step refinement of an integer-attained degree-2 bound.

    Precondition: `bound` is the d2 value with a strict degree-1
    coefficient, so a code of that size would be an orthogonal array of
    strength 2 and its distance distribution must solve M_1 = M_2 = 0
    with A_d + A_e = bound - 1 in nonnegative integers.  When the system
    refutes this, returns bound - 1; otherwise bound.
    """
    d2 = d2_bound(params)
    if d2 is None or not d2.strict:
        raise ValueError("dd_refine requires an applicable, strict degree-2 bound")
    if d2.value != bound or not d2.attains_integer:
        raise ValueError(
            "dd_refine requires the exact integer degree-2 value "
            f"(got bound={bound}, d2={d2.exact})"
        )
    sol = _strength2_distribution(params)
    if sol is None:
        return bound - 1
    a_d, a_e = sol
    ok = (
        a_d >= 0
        and a_e >= 0
        and a_d.denominator == 1
        and a_e.denominator == 1
        and a_d + a_e == bound - 1
    )
    return bound if ok else bound - 1


def _strength2_distribution(params: TwoDistParams) -> tuple[Fraction, Fraction] | None:
    """Solve M_1 = M_2 = 0 for (A_d, A_e); None when no unique solution fits."""
    n, q, d, e = params.n, params.q, params.d, params.d2
    rows = [
        (kraw_eval(n, q, i, d), kraw_eval(n, q, i, e), kraw_eval(n, q, i, 0))
        for i in (1, 2)
    ]
    (a1, b1, c1), (a2, b2, c2) = rows
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    a_d = Fraction(-c1 * b2 + c2 * b1, det)
    a_e = Fraction(-a1 * c2 + a2 * c1, det)
    return a_d, a_e


def gray_rankin_bound(q: int, n: int, d: int) -> int | None:
    """Cardinality bound for antipodal (n, N, d) codes over q symbols.

    Valid only for codes that split into groups of q words pairwise at
    full distance n; used to certify optimality of difference-matrix
    codes and never aggregated as a general two-distance bound.
    """
    if q < 2 or n < 1 or d < 1:
        raise ValueError("q>=2, n>=1, d>=1 required")
    denom = n - ((q - 1) * n - q * d) ** 2
    if denom <= 0:
        return None
    num = q * (q * d - (q - 2) * n) * (n - d)
    if num < 0:
        return None
    return math.floor(Fraction(q * num, denom))


@dataclass(frozen=True)
class SphereBound:
    """Spherical two-distance set bound; value = 2(q-1)n + 1 when applicable."""

    applicable: bool
    value: int | None
    r: int
    s: int


def sphere_bound(params: TwoDistParams) -> SphereBound:
    """Bound via the image of the code as a spherical two-distance set.

    With d/(d+delta) = r/s in lowest terms, the bound 2(q-1)n + 1 applies
    when s - r >= 2, or when s = r + 1 and (2r+1)^2 > 2(q-1)n.
    """
    g = math.gcd(params.d, params.d2)
    r, s = params.d // g, params.d2 // g
    m2 = 2 * (params.q - 1) * params.n
    applicable = (s - r >= 2) or (s == r + 1 and (2 * r + 1) ** 2 > m2)
    return SphereBound(applicable, m2 + 1 if applicable else None, r, s)


def sphere_linear_dim_limit(params: TwoDistParams) -> int | None:
    """Largest k with q^k <= 2(q-1)n + 1; no linear code of larger dimension.

    None when the spherical bound itself is inapplicable.
    """
    sb = sphere_bound(params)
    if not sb.applicable:
        return None
    cap = sb.value
    k = 0
    while params.q ** (k + 1) <= cap:
        k += 1
    return k


class ExternalBoundsError(ValueError):
    """Raised for malformed external bound tables."""


@dataclass(frozen=True)
class ExternalBounds:
    """Best-known upper bounds for A_q(n, d), keyed by (q, n, d)."""

    table: dict[tuple[int, int, int], int] = field(default_factory=dict)

    @staticmethod
    def from_csv(text: str) -> "ExternalBounds":
        rows: dict[tuple[int, int, int], int] = {}
        lines = text.splitlines()
        if not lines or [c.strip() for c in lines[0].split(",")] != ["q", "n", "d", "bound"]:
            raise ExternalBoundsError("line 1: expected header 'q,n,d,bound'")
        for lineno, raw in enumerate(lines[1:], start=2):
            line = raw.strip()
            if not line:
                continue
            parts = [c.strip() for c in line.split(",")]
            if len(parts) != 4:
                raise ExternalBoundsError(f"line {lineno}: expected 4 fields")
            try:
                q, n, d, bound = (int(p) for p in parts)
            except ValueError as exc:
                raise ExternalBoundsError(f"line {lineno}: non-integer field") from exc
            if q < 2 or n < 1 or d < 1 or bound < 1:
                raise ExternalBoundsError(f"line {lineno}: values out of range")
            rows[(q, n, d)] = bound
        return ExternalBounds(rows)

    @staticmethod
    def from_path(path: str | Path) -> "ExternalBounds":
        return ExternalBounds.from_csv(Path(path).read_text())

    def lookup(self, q: int, n: int, d: int) -> int | None:
        return self.table.get((q, n, d))


@dataclass(frozen=True)
class BoundEntry:
    method: str
    value: int | None
    note: str = ""
    certificate: tuple = ()


@dataclass(frozen=True)
class BoundReport:
    """Per-method upper bounds plus the aggregated best value."""

    params: TwoDistParams
    status: BoundStatus
    entries: tuple[BoundEntry, ...]

    def entry(self, method: str) -> BoundEntry | None:
        for e in self.entries:
            if e.method == method:
                return e
        return None

    @property
    def best(self) -> int | None:
        return self.status.hi


def best_upper_bound(
    params: TwoDistParams, external: ExternalBounds | None = None
) -> BoundReport:
    """Aggregate all applicable upper-bound methods for one parameter set.

    Exact special values and not-well-defined cases short-circuit the
    aggregation.  The Gray-Rankin value is reported for reference but is
    excluded from the minimum, being valid for antipodal codes only.
    """
    sv = feasibility.special_values(params)
    if sv.status is not None and sv.status.kind == "not_well_defined":
        return BoundReport(params, sv.status, ())
    if not feasibility.two_distance_realizable(params):
        status = BoundStatus.not_well_defined(note="no three-word code realizes both distances")
        return BoundReport(params, status, ())
    if sv.status is not None and sv.status.kind == "exact":
        return BoundReport(params, sv.status, ())

    entries: list[BoundEntry] = []
    try:
        opt, vertex = lp_optimum(params)
        entries.append(BoundEntry("lp", math.floor(opt), certificate=(vertex,)))
    except LpUnboundedError:
        entries.append(BoundEntry("lp", None, note="unbounded"))
    pk = plotkin_bound(params)
    entries.append(BoundEntry("plotkin", pk, note="" if pk is not None else "not applicable"))
    d2 = d2_bound(params)
    if d2 is None:
        entries.append(BoundEntry("d2", None, note="not applicable"))
    else:
        entries.append(BoundEntry("d2", d2.value, certificate=(d2.exact, d2.strict)))
        if d2.strict and d2.attains_integer:
            refined = dd_refine(params, d2.value)
            if refined < d2.value:
                entries.append(BoundEntry("dd", refined, note="distribution refutation"))
    sb = sphere_bound(params)
    entries.append(
        BoundEntry(
            "sc",
            sb.value,
            note="" if sb.applicable else "not applicable",
            certificate=((sb.r, sb.s),),
        )
    )
    gr = gray_rankin_bound(params.q, params.n, params.d)
    entries.append(BoundEntry("gr", gr, note="antipodal codes only; not aggregated"))
    if external is not None:
        ext = external.lookup(params.q, params.n, params.d)
        if ext is not None:
            entries.append(BoundEntry("ext", ext))

    candidates = [
        (e.value, e.method) for e in entries if e.value is not None and e.method != "gr"
    ]
    if not candidates:
        raise LpUnboundedError(f"no applicable upper bound for {params}")
    best = min(v for v, _ in candidates)
    methods = tuple(m for v, m in candidates if v == best)
    status = BoundStatus.range_(1, best, methods=methods)
    return BoundReport(params, status, tuple(entries))
