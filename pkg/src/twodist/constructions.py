"""Explicit code constructions: seeds, difference matrices, two-weight families.

Each constructor returns either a `Code` (nonlinear families) or a
`GeneratorMatrix` (linear families).  Every family's parameters are
verified by enumeration in the test suite; the catalog functions at the
bottom answer "what is the largest construction matching these
parameters" by arithmetic alone and are used for table lower bounds.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .core import Code, TwoDistParams
from .fields import GF, prime_power


@dataclass(frozen=True)
class GeneratorMatrix:
    """k x n matrix over GF(q); the code is the row space."""

    q: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise ValueError(f"q={self.q} is not a prime power")
        if not self.rows or not self.rows[0]:
            raise ValueError("empty generator matrix")
        n = len(self.rows[0])
        if any(len(r) != n for r in self.rows):
            raise ValueError("ragged generator matrix")
        if any(s < 0 or s >= self.q for r in self.rows for s in r):
            raise ValueError("entries must lie in 0..q-1")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def rank(self) -> int:
        field = GF(self.q)
        mat = [list(r) for r in self.rows]
        rank = 0
        for col in range(self.n):
            pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
            if pivot is None:
                continue
            mat[rank], mat[pivot] = mat[pivot], mat[rank]
            inv = field.inv(mat[rank][col])
            mat[rank] = [field.mul(inv, x) for x in mat[rank]]
            for r in range(len(mat)):
                if r != rank and mat[r][col]:
                    c = mat[r][col]
                    mat[r] = [field.sub(x, field.mul(c, y)) for x, y in zip(mat[r], mat[rank])]
            rank += 1
            if rank == len(mat):
                break
        return rank

    def codeword(self, message: tuple[int, ...]) -> tuple[int, ...]:
        field = GF(self.q)
        word = [0] * self.n
        for coeff, row in zip(message, self.rows):
            if coeff:
                for i, x in enumerate(row):
                    if x:
                        word[i] = field.add(word[i], field.mul(coeff, x))
        return tuple(word)

    def messages(self):
        """All q^k messages; index i maps to the base-q digits of i, low first."""
        q, k = self.q, self.k
        for i in range(q**k):
            yield tuple((i // q**j) % q for j in range(k))

    def span(self) -> Code:
        """The full code; raises when the matrix is rank deficient."""
        words = [self.codeword(m) for m in self.messages()]
        if len(set(words)) != len(words):
            raise ValueError("generator matrix is rank deficient; span has repeats")
        return Code(self.q, self.n, tuple(words))

    def weight_distribution(self) -> dict[int, int]:
        """Weight -> count over all nonzero messages (works when rank < k too)."""
        out: Counter[int] = Counter()
        for m in self.messages():
            if any(m):
                out[sum(1 for s in self.codeword(m) if s)] += 1
        return dict(out)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r[i] for r in self.rows) for i in range(self.n))


def projective_points(q: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Canonical representatives (first nonzero entry 1), lexicographic."""
    pts = []
    for vec in itertools.product(range(q), repeat=k):
        nz = next((s for s in vec if s), None)
        if nz == 1:
            pts.append(vec)
    return tuple(pts)


def normalize_column(q: int, col: tuple[int, ...]) -> tuple[int, ...]:
    """Scale a nonzero column so its first nonzero entry is 1."""
    field = GF(q)
    nz = next((s for s in col if s), None)
    if nz is None:
        raise ValueError("zero column cannot be normalized")
    inv = field.inv(nz)
    return tuple(field.mul(inv, s) for s in col)


def column_multiplicity(g: GeneratorMatrix) -> int:
    """Maximal number of columns that are scalar multiples of one column."""
    counts = Counter(normalize_column(g.q, c) for c in g.columns())
    return max(counts.values())


def matrix_from_columns(q: int, cols) -> GeneratorMatrix:
    cols = list(cols)
    k = len(cols[0])
    rows = tuple(tuple(c[i] for c in cols) for i in range(k))
    return GeneratorMatrix(q, rows)


# ---------------------------------------------------------------------------
# concatenation


def concatenate(outer: Code, inner: Code) -> Code:
    """Replace each outer symbol i by the i-th inner codeword.

    Needs exactly one inner codeword per outer symbol and an inner
    alphabet no larger than the outer one; the result is over the inner
    alphabet with n = n_outer * n_inner and the outer cardinality.
    """
    if inner.size != outer.q:
        raise ValueError(
            f"inner code has {inner.size} words but outer alphabet has {outer.q} symbols"
        )
    if inner.q > outer.q:
        raise ValueError("inner alphabet must embed in the outer alphabet")
    words = tuple(
        tuple(s for sym in w for s in inner.words[sym]) for w in outer.words
    )
    return Code(inner.q, outer.n * inner.n, words)


# ---------------------------------------------------------------------------
# difference matrices and their codes


@dataclass(frozen=True)
class DifferenceMatrix:
    """q*mu x q*mu matrix over Z_p^l; distinct-row differences are balanced."""

    q: int
    mu: int
    entries: tuple[tuple[int, ...], ...]

    def order(self) -> int:
        return self.q * self.mu


def _group_sub(p: int, ell: int, a: int, b: int) -> int:
    """Difference in the elementary abelian group of order p^ell (digit-wise)."""
    out = 0
    mult = 1
    for _ in range(ell):
        out += ((a % p - b % p) % p) * mult
        a //= p
        b //= p
        mult *= p
    return out


def is_difference_matrix(dm: DifferenceMatrix, p: int, ell: int) -> bool:
    rows = dm.entries
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            diff = Counter(_group_sub(p, ell, a, b) for a, b in zip(rows[i], rows[j]))
            if len(diff) != dm.q or any(v != dm.mu for v in diff.values()):
                return False
    return True


def difference_matrix(p: int, ell: int, h: int) -> DifferenceMatrix:
    """D(p^ell, p^h): rows/columns indexed by GF(p^(ell+h)), entry phi(x*y).

    phi keeps the first ell base-p digits of the product, a surjective
    additive map onto the elementary abelian group of order p^ell; the
    difference property then follows from field multiplication being a
    bijection per row pair.  Validity is still checked by definition.
    """
    if prime_power(p) != (p, 1):
        raise ValueError(f"p={p} must be prime")
    if ell < 1 or h < 0:
        raise ValueError("need ell >= 1 and h >= 0")
    field = GF(p ** (ell + h))
    q, mu = p**ell, p**h
    size = q * mu
    entries = []
    for x in range(size):
        row = []
        for y in range(size):
            prod = field.mul(x, y)
            row.append(field.from_digits(field.digits(prod)[:ell]))
        entries.append(tuple(row))
    dm = DifferenceMatrix(q=q, mu=mu, entries=tuple(entries))
    if not is_difference_matrix(dm, p, ell):
        raise AssertionError("constructed matrix violates the difference property")
    return dm


def dm_code(p: int, ell: int, h: int) -> Code:
    """Two-distance code from a difference matrix: all rows plus constants.

    The words row + c*(1,...,1) over the group alphabet form an
    (q*mu, q^2*mu, {(q-1)*mu, q*mu}) antipodal code: distinct rows differ
    in all but exactly mu places regardless of the added constants, and
    same-row translates differ everywhere.
    """
    dm = difference_matrix(p, ell, h)
    q = dm.q
    words = []
    for row in dm.entries:
        for c in range(q):
            words.append(tuple(_group_add(p, ell, s, c) for s in row))
    return Code(q, dm.order(), tuple(words))


def _group_add(p: int, ell: int, a: int, b: int) -> int:
    out = 0
    mult = 1
    for _ in range(ell):
        out += ((a % p + b % p) % p) * mult
        a //= p
        b //= p
        mult *= p
    return out


# ---------------------------------------------------------------------------
# linear seeds and the main two-weight families


def seed_code(kind: str, q: int, param: int) -> GeneratorMatrix:
    """Seed generators: `simplex` (equidistant) or `mds2` (two weights).

    simplex(q, m): one column per projective point of PG(m-1, q); every
    nonzero word has weight q^(m-1).  mds2(q, r): the first r canonical
    points of PG(1, q) as columns, weights {r-1, r} (equidistant when
    r = q+1).
    """
    if prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    if kind == "simplex":
        m = param
        if m < 1:
            raise ValueError("simplex needs m >= 1")
        return matrix_from_columns(q, projective_points(q, m))
    if kind == "mds2":
        r = param
        if not (2 <= r <= q + 1):
            raise ValueError("mds2 needs 2 <= r <= q+1")
        return matrix_from_columns(q, projective_points(q, 2)[:r])
    raise ValueError(f"unknown seed kind {kind!r}")


def su1_code(q: int, m: int, r: int, s: int, h: int, mode: str = "remove") -> GeneratorMatrix:
    """Two-weight codes from s copies of PG(m-1,q) minus/plus h sub-geometries.

    The embedded PG(r-1, q) consists of the points supported on the first
    r coordinates.  Removal (h <= s) gives
        n = (s(q^m-1) - h(q^r-1))/(q-1),  d = s q^(m-1) - h q^(r-1),
    union (h coprime to q) gives
        n = (s(q^m-1) + h(q^r-1))/(q-1),  d = s q^(m-1),
    with delta = h q^(r-1) in both cases.
    """
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"q={q} is not a prime power")
    if not (2 <= r <= m - 1):
        raise ValueError("need 2 <= r <= m-1")
    if s < 1 or h < 1:
        raise ValueError("need s >= 1 and h >= 1")
    all_points = projective_points(q, m)
    sub = [pt for pt in all_points if not any(pt[r:])]
    counts = Counter({pt: s for pt in all_points})
    if mode == "remove":
        if h > s:
            raise ValueError("removal mode needs h <= s")
        for pt in sub:
            counts[pt] -= h
    elif mode == "union":
        if h % pm[0] == 0:
            raise ValueError("union mode needs h coprime to q")
        for pt in sub:
            counts[pt] += h
    else:
        raise ValueError(f"unknown mode {mode!r}")
    cols = [pt for pt in sorted(counts) for _ in range(counts[pt])]
    return matrix_from_columns(q, cols)


def su2_code(p: int, m: int, r: int) -> GeneratorMatrix:
    """Concatenation of an [r,2] MDS code over GF(p^m) with the p-ary simplex.

    Gives p-ary two-weight codes with
        n = r (p^m-1)/(p-1), k = 2m, d = (r-1) p^(m-1), delta = p^(m-1).
    """
    if prime_power(p) != (p, 1):
        raise ValueError(f"p={p} must be prime")
    q = p**m
    if q < 4:
        raise ValueError("needs p^m >= 4")
    if not (2 <= r <= q + 1):
        raise ValueError("needs 2 <= r <= q+1")
    outer = seed_code("mds2", q, r)
    inner = seed_code("simplex", p, m)
    field = GF(q)
    inner_words = {a: inner.codeword(field.digits(a)) for a in range(q)}

    def image(word_q: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(s for sym in word_q for s in inner_words[sym])

    # powers of the element with digit vector (0, 1, 0, ...), i.e. integer p,
    # an F_p-basis multiplier set for GF(p^m)
    powers = [1]
    for _ in range(m - 1):
        powers.append(field.mul(powers[-1], p))
    rows = []
    for g_row in outer.rows:
        for t in range(m):
            scaled = tuple(field.mul(powers[t], sym) for sym in g_row)
            rows.append(image(scaled))
    return GeneratorMatrix(p, tuple(rows))


def arc_code(q: int) -> GeneratorMatrix:
    """Hyperoval code for even q: conic points plus the two exterior points.

    Columns (1, t, t^2) for t in GF(q) together with (0,1,0) and (0,0,1)
    form a (q+2)-arc when q = 2^s, giving weights {q, q+2}.
    """
    pm = prime_power(q)
    if pm is None or pm[0] != 2 or q < 4:
        raise ValueError("hyperoval codes need q = 2^s >= 4")
    field = GF(q)
    cols = [(1, t, field.mul(t, t)) for t in range(q)]
    cols.append((0, 1, 0))
    cols.append((0, 0, 1))
    return matrix_from_columns(q, cols)


def pencil_code(q: int, delta: int) -> GeneratorMatrix:
    """Length q+1+delta extension of the equidistant [q+1, 2, q] code.

    One generator row is padded with zeros, the other with a full-weight
    block, producing weights {q, q+delta} in dimension 2 for any delta.
    """
    if prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    if delta < 1:
        raise ValueError("delta must be positive")
    base = seed_code("mds2", q, q + 1)
    row1 = base.rows[0] + (0,) * delta
    row2 = base.rows[1] + (1,) * delta
    return GeneratorMatrix(q, (row1, row2))


def small_family_code(kind: str, n: int, q: int = 2, d: int | None = None, delta: int | None = None) -> Code:
    """Small explicit families used as lower bounds.

    weight2    zero plus all 0/1-words of weight 2: distances {2, 4},
               size C(n,2)+1, valid over any alphabet.
    bin-2-2d   binary, distances {2, 2+delta} for delta >= 3: delta+2
               words of weight delta+2 sharing the first coordinate,
               n-delta-3 weight-2 words, and zero; size n.  When
               n = delta+3 one extra word of weight n-1 fits (size n+1).
    disjoint   zero plus floor(n/d) weight-d words with disjoint supports:
               distances {d, 2d}.
    ternary13  the six-word ternary code with distances {1, 3}, padded.
    """
    if kind == "weight2":
        if n < 4:
            raise ValueError("weight2 family needs n >= 4")
        if q < 2:
            raise ValueError("alphabet must have at least two symbols")
        words = [(0,) * n]
        for i, j in itertools.combinations(range(n), 2):
            w = [0] * n
            w[i] = w[j] = 1
            words.append(tuple(w))
        return Code(q, n, tuple(words))
    if kind == "bin-2-2d":
        if delta is None or delta < 3:
            raise ValueError("bin-2-2d needs delta >= 3")
        if n < delta + 3:
            raise ValueError("bin-2-2d needs n >= delta + 3")
        words = [(0,) * n]
        block = delta + 3
        for j in range(1, block):
            w = [0] * n
            for i in range(block):
                if i != j:
                    w[i] = 1
            words.append(tuple(w))
        for i in range(block, n):
            w = [0] * n
            w[0] = w[i] = 1
            words.append(tuple(w))
        if n == block:
            words.append((0,) + (1,) * (n - 1))
        return Code(2, n, tuple(words))
    if kind == "disjoint":
        if d is None or d < 1:
            raise ValueError("disjoint family needs d >= 1")
        if n < 2 * d:
            raise ValueError("disjoint family needs n >= 2d")
        words = [(0,) * n]
        for i in range(n // d):
            w = [0] * n
            for j in range(i * d, (i + 1) * d):
                w[j] = 1
            words.append(tuple(w))
        return Code(2, n, tuple(words))
    if kind == "ternary13":
        if n < 4:
            raise ValueError("ternary13 needs n >= 4")
        base = ["0000", "1000", "2110", "2120", "2201", "2202"]
        words = tuple(tuple(int(c) for c in w) + (0,) * (n - 4) for w in base)
        return Code(3, n, words)
    raise ValueError(f"unknown family {kind!r}")


def complementary_code(g: GeneratorMatrix) -> GeneratorMatrix:
    """Columns completing g to s full copies of the projective point set.

    s is the maximal column multiplicity of g.  Stacking a code beside
    its complement yields an equidistant code of distance s*q^(k-1),
    which is verified here for manageable sizes.  The complement may be
    rank deficient (zero weights appear); callers should inspect its
    weight distribution.
    """
    if g.rank() != g.k:
        raise ValueError("generator matrix must have full rank")
    counts = Counter(normalize_column(g.q, c) for c in g.columns())
    s = max(counts.values())
    complement = []
    for pt in projective_points(g.q, g.k):
        complement.extend([pt] * (s - counts.get(pt, 0)))
    if not complement:
        raise ValueError("complementary code is empty (all points already used)")
    comp = matrix_from_columns(g.q, sorted(complement))
    if g.q**g.k <= 4096:
        target = s * g.q ** (g.k - 1)
        joint = GeneratorMatrix(g.q, tuple(a + b for a, b in zip(g.rows, comp.rows)))
        for msg in joint.messages():
            if any(msg):
                w = sum(1 for x in joint.codeword(msg) if x)
                if w != target:
                    raise AssertionError("joint code is not equidistant")
    return comp


def griesmer_bound(q: int, k: int, d: int) -> int:
    """Minimal length of a linear [n, k, d]_q code by the Griesmer sum."""
    return sum(-(-d // q**i) for i in range(k))


# ---------------------------------------------------------------------------
# parameter catalog: best known construction for given (q, n, d, delta)


@dataclass(frozen=True)
class CatalogEntry:
    size: int
    family: str
    description: str
    native_length: int


def _is_power_of(p: int, x: int) -> bool:
    if x < 1:
        return False
    while x % p == 0:
        x //= p
    return x == 1


def two_distance_lower_bounds(params: TwoDistParams) -> tuple[CatalogEntry, ...]:
    """All catalog families matching (q, n, d, delta), larger sizes first.

    A family matches when its native length is at most n: appending zero
    columns preserves the distance pair.
    """
    q, n, d, delta = params.q, params.n, params.d, params.delta
    entries: list[CatalogEntry] = []
    pm = prime_power(q)

    if pm is not None:
        p = pm[0]
        # difference-matrix code: delta = mu (a power of p), d = (q-1)mu, n >= q mu
        if _is_power_of(p, delta) and d == (q - 1) * delta and n >= q * delta:
            entries.append(
                CatalogEntry(
                    q * q * delta,
                    "dm",
                    f"difference-matrix code ({q * delta}, {q * q * delta}, {{{d}, {q * delta}}})",
                    q * delta,
                )
            )
        # pencil code: d = q, any delta, length q+1+delta
        if d == q and n >= q + 1 + delta:
            entries.append(
                CatalogEntry(q * q, "pencil", f"pencil code [{q + 1 + delta}, 2]", q + 1 + delta)
            )
        # hyperoval code: q = 2^s >= 4, d = q, delta = 2
        if p == 2 and q >= 4 and d == q and delta == 2 and n >= q + 2:
            entries.append(CatalogEntry(q**3, "arc", f"hyperoval code [{q + 2}, 3]", q + 2))
        # su1 removal / union
        for m in range(3, 22):
            if q**m > 1 << 20:
                break
            for r in range(2, m):
                base = q ** (r - 1)
                if delta % base:
                    continue
                h = delta // base
                if h < 1:
                    continue
                # removal: d = s q^(m-1) - delta
                top = q ** (m - 1)
                if (d + delta) % top == 0:
                    s = (d + delta) // top
                    if 1 <= h <= s:
                        nat = (s * (q**m - 1) - h * (q**r - 1)) // (q - 1)
                        if 0 < nat <= n:
                            entries.append(
                                CatalogEntry(q**m, "su1", f"su1 removal [{nat}, {m}]", nat)
                            )
                # union: d = s q^(m-1)
                if d % top == 0 and h % p:
                    s = d // top
                    if s >= 1:
                        nat = (s * (q**m - 1) + h * (q**r - 1)) // (q - 1)
                        if nat <= n:
                            entries.append(
                                CatalogEntry(q**m, "su1", f"su1 union [{nat}, {m}]", nat)
                            )
    # su2: prime alphabet only
    if pm is not None and pm[1] == 1:
        p = q
        for m in range(2, 11):
            qm = p**m
            if qm > 1024:
                break
            if qm < 4 or delta != p ** (m - 1):
                continue
            if d % (p ** (m - 1)):
                continue
            r = d // p ** (m - 1) + 1
            # r = q+1 degenerates to an equidistant code (full outer point set)
            if 2 <= r <= qm:
                nat = r * (qm - 1) // (p - 1)
                if nat <= n:
                    entries.append(CatalogEntry(p ** (2 * m), "su2", f"su2 [{nat}, {2 * m}]", nat))
    # small families
    if d == 2 and delta == 2 and n >= 4:
        entries.append(
            CatalogEntry(math.comb(n, 2) + 1, "weight2", "zero plus all weight-2 words", n)
        )
    if q == 2 and d == 2 and delta >= 3 and n >= delta + 3:
        size = n + 1 if n == delta + 3 else n
        entries.append(CatalogEntry(size, "bin-2-2d", "weight-(delta+2) block family", n))
    if q == 2 and delta == d and n >= 2 * d:
        entries.append(
            CatalogEntry(1 + n // d, "disjoint", "disjoint weight-d supports", n)
        )
    if q == 3 and d == 1 and delta == 2 and n >= 4:
        entries.append(CatalogEntry(6, "ternary13", "six-word ternary {1,3} code", 4))

    entries.sort(key=lambda e: (-e.size, e.family))
    return tuple(entries)


def equidistant_lower_bound(q: int, n: int, d: int) -> CatalogEntry | None:
    """Largest catalog equidistant code with distance d and length <= n."""
    best: CatalogEntry | None = None
    pm = prime_power(q)
    if pm is None:
        return None
    p = pm[0]
    # replicated simplex: d = s q^(m-1), length s (q^m - 1)/(q - 1)
    power = 1  # q^(m-1)
    m = 1
    while power <= d:
        if d % power == 0:
            s = d // power
            nat = s * (q**m - 1) // (q - 1)
            if nat <= n:
                entry = CatalogEntry(q**m, "simplex", f"{s} copies of the [{(q**m - 1) // (q - 1)}, {m}] simplex", nat)
                if best is None or entry.size > best.size:
                    best = entry
        power *= q
        m += 1
    # difference-matrix equidistant: d = (q-1)mu, length q mu - 1
    if d % (q - 1) == 0:
        mu = d // (q - 1)
        if _is_power_of(p, mu) and q * mu - 1 <= n:
            entry = CatalogEntry(q * mu, "dm", f"difference-matrix equidistant ({q * mu - 1}, {q * mu}, {d})", q * mu - 1)
            if best is None or entry.size > best.size:
                best = entry
    return best
