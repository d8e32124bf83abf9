"""Codes over small alphabets and their distance statistics.

Everything here is exact: distance distributions and moments are computed
with `fractions.Fraction`, never floats.  All types are immutable after
construction and all operations are pure functions, so values can be
shared freely between threads.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .krawtchouk import kraw_eval

MAX_ALPHABET = 9  # the text file format stores one base-q digit per symbol


class CodeFormatError(ValueError):
    """Raised for malformed code files."""


@dataclass(frozen=True)
class Code:
    """A set of distinct words of fixed length over {0,...,q-1}."""

    q: int
    n: int
    words: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        if self.n < 1:
            raise ValueError("length must be at least 1")
        if not self.words:
            raise ValueError("a code needs at least one word")
        seen = set()
        for w in self.words:
            if len(w) != self.n:
                raise ValueError(f"word {w} does not have length {self.n}")
            if any(s < 0 or s >= self.q for s in w):
                raise ValueError(f"word {w} has symbols outside 0..{self.q - 1}")
            if w in seen:
                raise ValueError(f"duplicate word {w}")
            seen.add(w)

    @property
    def size(self) -> int:
        return len(self.words)

    @staticmethod
    def from_words(q: int, words: Iterable[Iterable[int]]) -> "Code":
        ws = tuple(tuple(w) for w in words)
        if not ws:
            raise ValueError("a code needs at least one word")
        return Code(q, len(ws[0]), ws)


@dataclass(frozen=True)
class TwoDistParams:
    """Query key (q, n, d, delta) for codes with distances d and d+delta."""

    q: int
    n: int
    d: int
    delta: int

    def __post_init__(self):
        if self.q < 2 or self.n < 1 or self.d < 1 or self.delta < 1:
            raise ValueError("q>=2, n>=1, d>=1, delta>=1 required")
        if self.d + self.delta > self.n:
            raise ValueError("d + delta must not exceed n")

    @property
    def d2(self) -> int:
        """The larger of the two distances."""
        return self.d + self.delta


@dataclass(frozen=True)
class DistanceDistribution:
    """Counts A_j = (#ordered pairs at distance j) / |C| for j = 0..n."""

    n: int
    size: int
    counts: tuple[Fraction, ...]

    def a(self, j: int) -> Fraction:
        return self.counts[j]

    def support(self) -> tuple[int, ...]:
        """Distances j >= 1 with A_j > 0."""
        return tuple(j for j in range(1, self.n + 1) if self.counts[j] > 0)


@dataclass(frozen=True)
class BoundStatus:
    """Outcome of a bound query: exact value, range, or a degenerate case."""

    kind: str  # "exact" | "range" | "not_well_defined" | "infeasible"
    lo: int | None = None
    hi: int | None = None
    methods: tuple[str, ...] = ()
    note: str = ""

    def __post_init__(self):
        if self.kind not in ("exact", "range", "not_well_defined", "infeasible"):
            raise ValueError(f"bad status kind {self.kind!r}")
        if self.kind == "range" and (self.lo is None or self.hi is None or self.lo > self.hi):
            raise ValueError("range needs lo <= hi")
        if self.kind == "exact" and (self.lo is None or self.lo != self.hi):
            raise ValueError("exact needs lo == hi")

    @staticmethod
    def exact(v: int, methods=(), note="") -> "BoundStatus":
        return BoundStatus("exact", v, v, tuple(methods), note)

    @staticmethod
    def range_(lo: int, hi: int, methods=(), note="") -> "BoundStatus":
        return BoundStatus("range", lo, hi, tuple(methods), note)

    @staticmethod
    def not_well_defined(note="") -> "BoundStatus":
        return BoundStatus("not_well_defined", note=note)

    @staticmethod
    def infeasible(note="") -> "BoundStatus":
        return BoundStatus("infeasible", note=note)


@dataclass(frozen=True)
class TwoDistReport:
    """Result of checking a code against a (d, d+delta) distance pair."""

    ok: bool
    equidistant: bool
    observed: tuple[int, ...]
    distribution: DistanceDistribution


def hamming(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    return sum(a != b for a, b in zip(x, y))


def pair_distance_counts(code: Code) -> list[int]:
    """cnt[j] = number of ordered word pairs (x, y) at distance j, x = y included."""
    cnt = [0] * (code.n + 1)
    cnt[0] = code.size
    words = code.words
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            cnt[hamming(words[i], words[j])] += 2
    return cnt


def distance_distribution(code: Code) -> DistanceDistribution:
    """Distance distribution A_j; A_0 = 1 and sum(A_j) = |C|."""
    cnt = pair_distance_counts(code)
    return DistanceDistribution(
        code.n, code.size, tuple(Fraction(c, code.size) for c in cnt)
    )


def verify_two_distance(code: Code, params: TwoDistParams) -> TwoDistReport:
    """Check that the code's nonzero distances are exactly {d, d+delta}.

    A code realizing only one of the two distances is reported as
    equidistant (ok = False) rather than rejected silently.
    """
    if code.q != params.q or code.n != params.n:
        raise ValueError(
            f"code is over q={code.q}, n={code.n}; params ask for q={params.q}, n={params.n}"
        )
    dist = distance_distribution(code)
    observed = dist.support()
    wanted = {params.d, params.d2}
    ok = set(observed) == wanted
    equidistant = len(observed) == 1 and set(observed) <= wanted
    return TwoDistReport(ok=ok, equidistant=equidistant, observed=observed, distribution=dist)


def strength(code: Code) -> int:
    """Largest t such that every t-column projection hits every tuple equally often.

    Returns 0 when even single columns are unbalanced.  Strength t implies
    strength t-1, so the search walks t upward until a projection fails.
    """
    n, q, size = code.n, code.q, code.size
    t = 0
    while t < n:
        t_next = t + 1
        if size % (q**t_next):
            break
        lam = size // (q**t_next)
        ok = True
        for cols in itertools.combinations(range(n), t_next):
            seen: dict[tuple[int, ...], int] = {}
            for w in code.words:
                key = tuple(w[c] for c in cols)
                seen[key] = seen.get(key, 0) + 1
            if len(seen) != q**t_next or any(v != lam for v in seen.values()):
                ok = False
                break
        if not ok:
            break
        t = t_next
    return t


def moments(code: Code, i: int) -> Fraction:
    """i-th Krawtchouk moment: sum over ordered pairs of K_i(d(x,y)) / r_i.

    Always an exact rational.  Nonnegative for every code (positive
    semidefiniteness of the kernel), and zero for 1 <= i <= strength.
    """
    if i < 0 or i > code.n:
        raise ValueError(f"moment index {i} outside 0..{code.n}")
    cnt = pair_distance_counts(code)
    total = sum(c * kraw_eval(code.n, code.q, i, j) for j, c in enumerate(cnt))
    r_i = (code.q - 1) ** i * math.comb(code.n, i)
    return Fraction(total, r_i)


def is_antipodal(code: Code) -> bool:
    """True iff the words split into groups of q words pairwise at distance n."""
    if code.size % code.q:
        return False
    words = code.words
    groups: dict[tuple[int, ...], frozenset] = {}
    for w in words:
        far = frozenset(v for v in words if v == w or hamming(v, w) == code.n)
        if len(far) != code.q:
            return False
        groups[w] = far
    for w, g in groups.items():
        for v in g:
            if groups[v] != g:
                return False
    return True


def translate(code: Code, word: tuple[int, ...]) -> Code:
    """Subtract a fixed word coordinate-wise mod q (distance preserving)."""
    if len(word) != code.n:
        raise ValueError("translation word has wrong length")
    q = code.q
    moved = tuple(tuple((a - b) % q for a, b in zip(w, word)) for w in code.words)
    return Code(code.q, code.n, moved)


# ---------------------------------------------------------------------------
# text file format: first line "q=<int> n=<int>", then one base-q digit
# string per line; '#' starts a comment


def write_code(code: Code) -> str:
    if code.q > MAX_ALPHABET:
        raise CodeFormatError(f"file format supports q <= {MAX_ALPHABET}")
    lines = [f"q={code.q} n={code.n}"]
    lines.extend("".join(str(s) for s in w) for w in code.words)
    return "\n".join(lines) + "\n"


def read_code(text: str) -> Code:
    header = None
    words: list[tuple[int, ...]] = []
    q = n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            try:
                kv = dict(p.split("=", 1) for p in parts)
                q, n = int(kv["q"]), int(kv["n"])
            except (ValueError, KeyError) as exc:
                raise CodeFormatError(f"line {lineno}: bad header {line!r}") from exc
            if q < 2 or q > MAX_ALPHABET:
                raise CodeFormatError(f"line {lineno}: q must be in 2..{MAX_ALPHABET}")
            if n < 1:
                raise CodeFormatError(f"line {lineno}: n must be positive")
            header = (q, n)
            continue
        if len(line) != n:
            raise CodeFormatError(f"line {lineno}: expected {n} digits, got {len(line)}")
        try:
            w = tuple(int(c) for c in line)
        except ValueError as exc:
            raise CodeFormatError(f"line {lineno}: non-digit symbol in {line!r}") from exc
        if any(s >= q for s in w):
            raise CodeFormatError(f"line {lineno}: symbol out of range for q={q}")
        words.append(w)
    if header is None:
        raise CodeFormatError("missing header line 'q=<int> n=<int>'")
    if not words:
        raise CodeFormatError("no codewords in file")
    try:
        return Code(q, n, tuple(words))
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from exc
