"""Necessary-condition screens for two-weight code parameters.

Every screen is pure arithmetic over exact integers and rationals: a
failing screen proves no code with the queried parameters exists, a
passing screen says nothing beyond "not refuted".  The screens never
reject the parameters of a code that actually exists (tested against the
construction families).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import BoundStatus, TwoDistParams
from .fields import prime_power


@dataclass(frozen=True)
class LinearParams:
    """Parameters [n, k, {w1, w2}]_q of a linear two-weight code.

    `s` is the maximal number of generator columns that are scalar
    multiples of one column (1 for projective codes); leave it None when
    unknown and the screens will consider every consistent value.
    """

    q: int
    k: int
    n: int
    w1: int
    w2: int
    s: int | None = None

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise ValueError(f"q={self.q} is not a prime power")
        if self.k < 1 or self.n < 1:
            raise ValueError("k and n must be positive")
        if not (0 < self.w1 < self.w2 <= self.n):
            raise ValueError("need 0 < w1 < w2 <= n")
        if self.s is not None:
            if self.s < 1:
                raise ValueError("s must be positive")
            if self.n * (self.q - 1) > self.s * (self.q**self.k - 1):
                raise ValueError("n exceeds s*(q^k-1)/(q-1)")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def m(self) -> int:
        return prime_power(self.q)[1]

    @property
    def delta(self) -> int:
        return self.w2 - self.w1

    @property
    def size(self) -> int:
        return self.q**self.k


@dataclass(frozen=True)
class Valuations:
    """p-adic valuations of d, delta and the complementary distance d_c.

    None encodes an infinite valuation (the argument was 0).
    """

    p: int
    gamma_d: int | None
    gamma_delta: int | None
    gamma_c: int | None


def p_adic_valuation(p: int, a: int) -> int | None:
    """Largest j with p^j dividing a; None for a = 0."""
    if a == 0:
        return None
    a = abs(a)
    j = 0
    while a % p == 0:
        a //= p
        j += 1
    return j


def _fraction_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# quadratic length condition for strength-2 two-distance codes


@dataclass(frozen=True)
class QuadraticCheck:
    residual: Fraction
    ok: bool
    roots: tuple[Fraction, Fraction] | None
    roots_positive_integers: bool
    discriminant_is_square: bool
    length_if_w2_full: Fraction | None


def check_oa2_quadratic(q: int, size: int, n: int, w1: int, w2: int) -> QuadraticCheck:
    """Quadratic consistency condition for a two-distance orthogonal array.

    A q-ary (n, N, {w1, w2}) code that is an orthogonal array of strength
    at least 2 must have zero residual in

        n^2 - n*(Q1*(u1+u2-1) + 1) + Q2*u1*u2,     u_i = n - w_i,

    with Q1 = q(N-q)/(N-q^2) and Q2 = q^2(N-1)/(N-q^2).  The roots of the
    companion quadratic must be positive integers with a perfect-square
    discriminant.  When w2 = n the condition collapses to a closed form
    for n, reported in `length_if_w2_full`.
    """
    if size % (q * q):
        raise ValueError("strength-2 hypothesis requires N divisible by q^2")
    if size <= q * q:
        raise ValueError("N must exceed q^2")
    if not (0 < w1 < w2 <= n):
        raise ValueError("need 0 < w1 < w2 <= n")
    q1 = Fraction(q * (size - q), size - q * q)
    q2 = Fraction(q * q * (size - 1), size - q * q)
    u1, u2 = n - w1, n - w2
    b = q1 * (u1 + u2 - 1) + 1
    c = q2 * u1 * u2
    residual = n * n - n * b + c
    disc = b * b - 4 * c
    sq = _fraction_sqrt(disc)
    roots = None
    roots_ok = False
    if sq is not None:
        roots = ((b + sq) / 2, (b - sq) / 2)
        roots_ok = all(r > 0 and r.denominator == 1 for r in roots)
    full = None
    if u2 == 0 and q1 != 1:
        full = (q1 * (w1 + 1) - 1) / (q1 - 1)
    return QuadraticCheck(
        residual=residual,
        ok=residual == 0,
        roots=roots,
        roots_positive_integers=roots_ok,
        discriminant_is_square=sq is not None,
        length_if_w2_full=full,
    )


# ---------------------------------------------------------------------------
# weight shape w1 = h p^u, w2 = (h+1) p^u


@dataclass(frozen=True)
class DelsarteForm:
    p: int
    u: int
    h: int


def delsarte_form(q: int, w1: int, w2: int) -> DelsarteForm | None:
    """Factor the weights as w1 = h*p^u, w2 = (h+1)*p^u, or None.

    Necessary for projective two-weight codes: the gap w2 - w1 must be a
    power of p dividing w1.
    """
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"q={q} is not a prime power")
    p = pm[0]
    if not (0 < w1 < w2):
        raise ValueError("need 0 < w1 < w2")
    gap = w2 - w1
    u = 0
    pu = 1
    while pu < gap:
        pu *= p
        u += 1
    if pu != gap:
        return None
    if w1 % pu:
        return None
    return DelsarteForm(p=p, u=u, h=w1 // pu)


# ---------------------------------------------------------------------------
# weight multiplicities from the first MacWilliams power moments


@dataclass(frozen=True)
class MacWilliamsResult:
    status: str  # "ok" | "infeasible" | "degenerate"
    mu1: Fraction
    mu2: Fraction
    second_moment_residual: Fraction


def macwilliams_mu(lp: LinearParams) -> MacWilliamsResult:
    """Solve for weight multiplicities (mu1, mu2) of a linear two-weight code.

    Uses w1*mu1 + w2*mu2 = n(q-1)q^(k-1) together with
    mu1 + mu2 = q^k - 1.  "infeasible" when the solution is not a pair of
    nonnegative integers, "degenerate" when one multiplicity vanishes
    (the code would be equidistant).  The residual of the second power
    moment (which must vanish for projective codes) is reported as well.
    """
    q, k, n, w1, w2 = lp.q, lp.k, lp.n, lp.w1, lp.w2
    total = q**k - 1
    rhs1 = n * (q - 1) * q ** (k - 1)
    mu2 = Fraction(rhs1 - w1 * total, w2 - w1)
    mu1 = total - mu2
    rhs2 = Fraction(n * (q - 1) * (n * (q - 1) + 1)) * Fraction(q) ** (k - 2)
    residual = w1 * w1 * mu1 + w2 * w2 * mu2 - rhs2
    if mu1 < 0 or mu2 < 0 or mu1.denominator != 1 or mu2.denominator != 1:
        status = "infeasible"
    elif mu1 == 0 or mu2 == 0:
        status = "degenerate"
    else:
        status = "ok"
    return MacWilliamsResult(status, mu1, mu2, residual)


# ---------------------------------------------------------------------------
# strongly regular graph parameters and multiplicity integrality


@dataclass(frozen=True)
class SrgParams:
    """Parameters of the graph on codewords with adjacency at distance w1."""

    n_vertices: int
    degree: int
    lam: int
    mu: int
    disc: int
    rho1: Fraction
    rho2: Fraction
    e1: Fraction
    e2: Fraction
    e1_weight_form: Fraction
    e2_weight_form: Fraction
    multiplicities_integral: bool
    counting_identity_ok: bool
    weight_form_agrees: bool

    @property
    def feasible(self) -> bool:
        return self.multiplicities_integral and self.counting_identity_ok

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.n_vertices, self.degree, self.lam, self.mu)


def srg_analysis(lp: LinearParams) -> SrgParams:
    """Strongly-regular-graph integrality screen for projective parameters.

    A projective two-weight code induces a strongly regular graph on its
    q^k words with adjacency at distance w1.  The derived (N, K, lam, mu)
    must have nonnegative lam, mu (raised otherwise), integral eigenvalue
    multiplicities, and satisfy K(K - lam - 1) = (N - K - 1) mu.

    The multiplicities are also recomputed through the direct weight form
    1/2 (q^k - 1 +- q^k (2n(q-1) - q(w1+w2)) / (q(w1-w2))); the two
    computations disagree on some valid inputs, so `weight_form_agrees`
    records whether they coincide here.
    """
    if lp.k < 2:
        raise ValueError("srg_analysis needs k >= 2")
    if lp.s not in (None, 1):
        raise ValueError("srg_analysis applies to projective parameters (s = 1)")
    q, k, n, w1, w2 = lp.q, lp.k, lp.n, lp.w1, lp.w2
    big_n = q**k
    big_k = n * (q - 1)
    lam = big_k * (big_k + 3) - q * (w1 + w2) * (big_k + 1) + q * q * w1 * w2
    mu = big_k * (big_k + 1) - big_k * q * (w1 + w2) + q * q * w1 * w2
    if lam < 0 or mu < 0:
        raise ValueError(f"lam={lam}, mu={mu}: parameters cannot form a graph")
    disc = (lam - mu) ** 2 + 4 * (big_k - mu)
    expected = (q * (w2 - w1)) ** 2
    if disc != expected:
        raise AssertionError(f"discriminant {disc} != (q*delta)^2 = {expected}")
    sq = q * (w2 - w1)
    rho1 = Fraction(lam - mu + sq, 2)
    rho2 = Fraction(lam - mu - sq, 2)
    ratio = Fraction(2 * big_k + (big_n - 1) * (lam - mu), sq)
    e1 = Fraction(big_n - 1 - ratio, 2)
    e2 = Fraction(big_n - 1 + ratio, 2)
    wf = Fraction(big_n * (2 * n * (q - 1) - q * (w1 + w2)), q * (w1 - w2))
    e1_wf = Fraction(big_n - 1 + wf, 2)
    e2_wf = Fraction(big_n - 1 - wf, 2)
    integral = all(e.denominator == 1 and e >= 0 for e in (e1, e2))
    counting_ok = big_k * (big_k - lam - 1) == (big_n - big_k - 1) * mu
    agrees = sorted((e1, e2)) == sorted((e1_wf, e2_wf))
    return SrgParams(
        n_vertices=big_n,
        degree=big_k,
        lam=lam,
        mu=mu,
        disc=disc,
        rho1=rho1,
        rho2=rho2,
        e1=e1,
        e2=e2,
        e1_weight_form=e1_wf,
        e2_weight_form=e2_wf,
        multiplicities_integral=integral,
        counting_identity_ok=counting_ok,
        weight_form_agrees=agrees,
    )


# ---------------------------------------------------------------------------
# complementary code parameters


@dataclass(frozen=True)
class ComplementaryParams:
    s: int
    n_c: int
    d_c: int
    degenerate: bool  # d_c = 0 or n_c = 0: complementary collapses


def complementary_params(lp: LinearParams, delta: int | None = None) -> tuple[ComplementaryParams, ...]:
    """Length and minimum distance of the complementary two-weight code.

    For each admissible column multiplicity s:
    n_c = s(q^k-1)/(q-1) - n and d_c = s q^(k-1) - d - delta, with the
    weight multiplicities swapped between the two codes.  Raises when no
    s in range yields nonnegative n_c and d_c.
    """
    delta = lp.delta if delta is None else delta
    if delta != lp.delta:
        raise ValueError("delta inconsistent with w2 - w1")
    q, k, n, d = lp.q, lp.k, lp.n, lp.w1
    points = (q**k - 1) // (q - 1)
    if lp.s is not None:
        s_values = [lp.s]
    else:
        s_values = list(range(1, -(-n * (q - 1) // (q**k - 1)) + 2))
    out = []
    for s in s_values:
        n_c = s * points - n
        d_c = s * q ** (k - 1) - d - delta
        if n_c < 0 or d_c < 0:
            continue
        out.append(ComplementaryParams(s=s, n_c=n_c, d_c=d_c, degenerate=n_c == 0 or d_c == 0))
    if not out:
        raise ValueError("no column multiplicity s gives nonnegative n_c and d_c")
    return tuple(out)


# ---------------------------------------------------------------------------
# gcd / valuation conditions


@dataclass(frozen=True)
class ClauseVerdict:
    clause: str
    applicable: bool
    passed: bool | None
    detail: str = ""


@dataclass(frozen=True)
class GcdVerdict:
    s: int
    n_c: int
    d_c: int
    valuations: Valuations
    clauses: tuple[ClauseVerdict, ...]
    verdict: str  # "pass" | "fail" | "abstain" | "invalid"


@dataclass(frozen=True)
class GcdScreen:
    params: LinearParams
    per_s: tuple[GcdVerdict, ...]

    @property
    def any_admissible(self) -> bool:
        """True unless every candidate s is refuted."""
        return any(v.verdict in ("pass", "abstain") for v in self.per_s)


def gcd_screen(lp: LinearParams, delta: int | None = None) -> GcdScreen:
    """Divisibility conditions linking d, delta and the complementary d_c.

    With gamma_* the p-adic valuations, a nontrivial linear two-weight
    code must satisfy, clause by clause:

      (i)   s = 1, k >= 4: gcd(q,d) = gcd(q,delta) and gcd(q,d_c) = gcd(q,delta);
      (ii)  s = 1, k = 3: both gcd equalities, provided
            gcd(d,q)^2 <= q*gcd(n(n-1),q) or gcd(d+delta,q)^2 > q*gcd(n_c(n_c-1),q);
      (iii) s = 1, k >= 2: gamma_d = gamma_delta or gamma_c = gamma_delta;
      (iv)  s >= 1, k >= 3: same disjunction as (iii).

    For k = 2 with s > 1 the screen abstains: two-dimensional codes exist
    for every delta there.  When s is unknown, all candidate values are
    reported; parameters are refuted only if every candidate s fails.
    """
    delta = lp.delta if delta is None else delta
    if delta != lp.delta:
        raise ValueError("delta inconsistent with w2 - w1")
    if lp.k < 2:
        raise ValueError("gcd screen needs k >= 2")
    q, k, n, d, p = lp.q, lp.k, lp.n, lp.w1, lp.p
    points = (q**k - 1) // (q - 1)
    if lp.s is not None:
        s_values = [lp.s]
    else:
        s_values = list(range(1, -(-n * (q - 1) // (q**k - 1)) + 2))
    verdicts = []
    for s in s_values:
        n_c = s * points - n
        d_c = s * q ** (k - 1) - d - delta
        vals = Valuations(
            p=p,
            gamma_d=p_adic_valuation(p, d),
            gamma_delta=p_adic_valuation(p, delta),
            gamma_c=p_adic_valuation(p, d_c) if d_c >= 0 else None,
        )
        if n_c < 0 or d_c < 0:
            verdicts.append(GcdVerdict(s, n_c, d_c, vals, (), "invalid"))
            continue
        if k == 2 and s > 1:
            clause = ClauseVerdict("abstain", True, None, "k = 2 with repeated columns")
            verdicts.append(GcdVerdict(s, n_c, d_c, vals, (clause,), "abstain"))
            continue
        clauses = []
        gd, gdel, gdc = math.gcd(q, d), math.gcd(q, delta), math.gcd(q, d_c)
        val_disjunction = (
            vals.gamma_d == vals.gamma_delta or vals.gamma_c == vals.gamma_delta
        )
        if s == 1 and k >= 4:
            ok = gd == gdel and gdc == gdel
            clauses.append(
                ClauseVerdict("i", True, ok, f"(q,d)={gd}, (q,delta)={gdel}, (q,d_c)={gdc}")
            )
        if s == 1 and k == 3:
            cond1 = gd * gd <= q * math.gcd(n * (n - 1), q)
            cond2 = math.gcd(q, d + delta) ** 2 > q * math.gcd(n_c * (n_c - 1), q)
            if cond1 or cond2:
                ok = gd == gdel and gdc == gdel
                fired = "first" if cond1 else "second"
                clauses.append(ClauseVerdict("ii", True, ok, f"{fired} condition fired"))
            else:
                clauses.append(ClauseVerdict("ii", False, None, "neither condition fired"))
        if s == 1 and k >= 2:
            clauses.append(
                ClauseVerdict(
                    "iii",
                    True,
                    val_disjunction,
                    f"gamma_d={vals.gamma_d}, gamma_delta={vals.gamma_delta}, gamma_c={vals.gamma_c}",
                )
            )
        if k >= 3:
            clauses.append(ClauseVerdict("iv", True, val_disjunction))
        applicable = [c for c in clauses if c.applicable]
        if not applicable:
            verdict = "abstain"
        elif all(c.passed for c in applicable):
            verdict = "pass"
        else:
            verdict = "fail"
        verdicts.append(GcdVerdict(s, n_c, d_c, vals, tuple(clauses), verdict))
    return GcdScreen(lp, tuple(verdicts))


# ---------------------------------------------------------------------------
# exact small values, impossibility clauses, and the 3-word realizability test


@dataclass(frozen=True)
class SpecialValues:
    status: BoundStatus | None
    clause: str | None = None
    boundary: bool = False
    conjectured_lower: int | None = None
    conjecture_note: str = ""


def special_values(params: TwoDistParams) -> SpecialValues:
    """Exact values and impossibility clauses for special parameter shapes.

    Binary clauses (a)-(e) rule the pair out entirely; d odd with
    delta = d has the exact value 1 + floor(n/d) (at least 4: below five
    words the extremal configuration degenerates, flagged `boundary`);
    ternary distances {1, 3} pin the value at 6 once n >= 4.  Conjectured
    optimal sizes for distance pairs {2, 4} and {2, 2+delta} are reported
    as lower bounds only.
    """
    q, n, d, delta = params.q, params.n, params.d, params.delta
    e = d + delta
    if q == 2:
        if d % 2 and e % 2:
            return SpecialValues(
                BoundStatus.not_well_defined("both distances odd"), clause="a"
            )
        if d % 2 and e % 2 == 0:
            if 2 * n < 3 * d - delta:
                return SpecialValues(
                    BoundStatus.not_well_defined("length below (3d-delta)/2"), clause="b"
                )
            if d < delta:
                return SpecialValues(
                    BoundStatus.not_well_defined("odd d smaller than delta"), clause="c"
                )
        if e == n and n != 2 * d:
            return SpecialValues(
                BoundStatus.not_well_defined("full-length distance with n != 2d"),
                clause="d",
            )
        if e == n - 1 and 2 * d > n + 1:
            return SpecialValues(
                BoundStatus.not_well_defined("distance n-1 with 2d > n+1"), clause="e"
            )
        if d % 2 and delta == d:
            raw = 1 + n // d
            value = max(4, raw)
            return SpecialValues(
                BoundStatus.exact(value, methods=("exact",), note="disjoint supports"),
                boundary=raw <= 4,
            )
    if q == 3 and d == 1 and delta == 2 and n >= 4:
        return SpecialValues(BoundStatus.exact(6, methods=("exact",)))
    if d == 2 and delta == 2 and n >= 6 and q in (2, 3, 4):
        return SpecialValues(
            None,
            conjectured_lower=math.comb(n, 2) + 1,
            conjecture_note="all binary weight-2 words plus zero; conjectured optimal",
        )
    if q == 2 and d == 2 and delta >= 3 and n >= 6:
        return SpecialValues(
            None,
            conjectured_lower=n,
            conjecture_note="weight-(delta+2) block construction; conjectured optimal",
        )
    return SpecialValues(None)


@dataclass(frozen=True)
class SrgEmpirical:
    """Measured parameters of the distance-w1 graph on an actual code."""

    params: tuple[int, int, int, int]
    strongly_regular: bool
    multiplicities: tuple[tuple[Fraction, int], ...]  # (eigenvalue, multiplicity)


def srg_empirical(code, w1: int) -> SrgEmpirical:
    """Build the graph on codewords adjacent at distance w1 and measure it.

    Checks regularity and common-neighbor counts directly, then computes
    the eigenvalue multiplicities exactly as kernel dimensions of A - rho*I
    over the rationals (the candidate eigenvalues come from degree and the
    two common-neighbor counts).  Everything is exact integer/rational
    arithmetic.
    """
    from .core import hamming  # local import to keep module deps one-way

    words = code.words
    size = len(words)
    adj = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            if hamming(words[i], words[j]) == w1:
                adj[i][j] = adj[j][i] = 1
    degrees = {sum(row) for row in adj}
    if len(degrees) != 1:
        return SrgEmpirical((size, -1, -1, -1), False, ())
    k = degrees.pop()
    lam_set, mu_set = set(), set()
    for i in range(size):
        for j in range(i + 1, size):
            common = sum(adj[i][t] and adj[j][t] for t in range(size))
            (lam_set if adj[i][j] else mu_set).add(common)
    if len(lam_set) > 1 or len(mu_set) > 1:
        return SrgEmpirical((size, k, -1, -1), False, ())
    lam = lam_set.pop() if lam_set else 0
    mu = mu_set.pop() if mu_set else 0
    disc = _fraction_sqrt(Fraction((lam - mu) ** 2 + 4 * (k - mu)))
    mults = []
    if disc is not None:
        for rho in (Fraction(lam - mu + disc, 2), Fraction(lam - mu - disc, 2)):
            mults.append((rho, _kernel_dimension(adj, rho)))
    return SrgEmpirical((size, k, lam, mu), True, tuple(mults))


def _kernel_dimension(adj, rho: Fraction) -> int:
    size = len(adj)
    mat = [[Fraction(adj[i][j]) - (rho if i == j else 0) for j in range(size)] for i in range(size)]
    rank = 0
    for col in range(size):
        pivot = next((r for r in range(rank, size) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(size):
            if r != rank and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [x - c * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == size:
            break
    return size - rank


def two_distance_realizable(params: TwoDistParams) -> bool:
    """Decide whether any code with both distances d and d+delta exists.

    Translating a codeword to zero, a code showing both distances always
    contains a three-word witness {0, x, y} whose pairwise distances lie
    in {d, d+delta} and cover both.  Witness existence reduces to pure
    arithmetic over the weights a, b of x, y, their support overlap c,
    and (for q >= 3) the number of overlap positions where the nonzero
    symbols differ.
    """
    q, n, d, delta = params.q, params.n, params.d, params.delta
    e = d + delta
    for a in (d, e):
        for b in (d, e):
            for c in range(max(0, a + b - n), min(a, b) + 1):
                lo = a + b - 2 * c
                hi = lo + (c if q >= 3 else 0)
                for dist, other in ((d, e), (e, d)):
                    if lo <= dist <= hi and other in (a, b):
                        return True
    return False
