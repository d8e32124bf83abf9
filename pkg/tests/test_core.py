import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twodist.constructions import dm_code, seed_code
from twodist.core import (
    Code,
    CodeFormatError,
    TwoDistParams,
    distance_distribution,
    hamming,
    is_antipodal,
    moments,
    read_code,
    strength,
    translate,
    verify_two_distance,
    write_code,
)


def bits(*strings):
    return tuple(tuple(int(c) for c in s) for s in strings)


def even_weight_code(n):
    words = tuple(w for w in itertools.product((0, 1), repeat=n) if sum(w) % 2 == 0)
    return Code(2, n, words)


TERNARY6 = Code(3, 4, bits("0000", "1000", "2110", "2120", "2201", "2202"))


class TestCodeValidation:
    def test_rejects_symbol_out_of_range(self):
        with pytest.raises(ValueError):
            Code(2, 2, ((0, 2),))

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError):
            Code(2, 2, ((0, 1), (0, 1)))

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            Code(2, 2, ((0, 1, 0),))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Code(2, 2, ())


class TestTwoDistParams:
    def test_rejects_overlong_distances(self):
        with pytest.raises(ValueError):
            TwoDistParams(2, 2, 2, 1)

    def test_d2(self):
        assert TwoDistParams(2, 8, 4, 4).d2 == 8


class TestVerify:
    def test_six_word_ternary_code_ok(self):
        report = verify_two_distance(TERNARY6, TwoDistParams(3, 4, 1, 2))
        assert report.ok and report.observed == (1, 3)

    def test_single_distance_is_equidistant_not_ok(self):
        code = Code(2, 2, bits("00", "11"))
        report = verify_two_distance(code, TwoDistParams(2, 2, 1, 1))
        assert not report.ok
        assert report.equidistant
        assert report.observed == (2,)

    def test_even_weight_words(self):
        report = verify_two_distance(even_weight_code(4), TwoDistParams(2, 4, 2, 2))
        assert report.ok and report.observed == (2, 4)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            verify_two_distance(TERNARY6, TwoDistParams(3, 5, 1, 2))


def brute_distribution(code):
    counts = [0] * (code.n + 1)
    for x in code.words:
        for y in code.words:
            counts[hamming(x, y)] += 1
    return [Fraction(c, code.size) for c in counts]


class TestDistribution:
    def test_singleton(self):
        dist = distance_distribution(Code(2, 3, bits("000")))
        assert dist.a(0) == 1 and sum(dist.counts) == 1

    def test_even_weight_length4(self):
        # brute-force oracle: every word has six words at distance 2 and one at 4
        code = even_weight_code(4)
        dist = distance_distribution(code)
        assert list(dist.counts) == brute_distribution(code)
        assert dist.a(0) == 1 and dist.a(2) == 6 and dist.a(4) == 1

    def test_dm_code_distribution(self):
        dist = distance_distribution(dm_code(2, 1, 2))
        assert dist.a(0) == 1 and dist.a(4) == 14 and dist.a(8) == 1

    def test_non_integer_entries(self):
        code = Code(2, 2, bits("00", "01", "11"))
        dist = distance_distribution(code)
        assert dist.a(1) == Fraction(4, 3)
        assert sum(dist.counts) == code.size


class TestStrength:
    def test_simplex_dimension3(self):
        assert strength(seed_code("simplex", 2, 3).span()) == 2

    def test_repetition_pair(self):
        assert strength(Code(2, 2, bits("00", "11"))) == 1

    def test_dm_code_at_least_2(self):
        assert strength(dm_code(2, 1, 2)) >= 2

    def test_whole_space(self):
        words = tuple(itertools.product((0, 1), repeat=3))
        assert strength(Code(2, 3, words)) == 3


class TestMoments:
    def test_zeroth_is_size_squared(self):
        for code in (TERNARY6, even_weight_code(4)):
            assert moments(code, 0) == code.size**2

    def test_dm_code_first_two_vanish(self):
        code = dm_code(2, 1, 2)
        assert moments(code, 1) == 0 and moments(code, 2) == 0

    def test_small_pair(self):
        assert moments(Code(2, 2, bits("00", "01")), 1) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            moments(TERNARY6, 5)


class TestAntipodal:
    def test_pair(self):
        assert is_antipodal(Code(2, 2, bits("00", "11")))

    def test_dm_code(self):
        assert is_antipodal(dm_code(2, 1, 2))

    def test_even_weight_length4(self):
        assert is_antipodal(even_weight_code(4))

    def test_triple_without_far_pairs(self):
        assert not is_antipodal(Code(2, 3, bits("000", "011", "101")))


class TestFileFormat:
    def test_roundtrip(self):
        text = write_code(TERNARY6)
        assert read_code(text) == TERNARY6

    def test_comments_and_blanks(self):
        text = "# header comment\nq=2 n=3\n\n000  # inline\n111\n"
        code = read_code(text)
        assert code.words == bits("000", "111")

    def test_rejects_large_alphabet(self):
        with pytest.raises(CodeFormatError):
            read_code("q=10 n=2\n00\n")
        big = Code(16, 1, tuple((s,) for s in range(16)))
        with pytest.raises(CodeFormatError):
            write_code(big)

    def test_rejects_bad_symbol(self):
        with pytest.raises(CodeFormatError, match="line 2"):
            read_code("q=2 n=3\n021\n")

    def test_rejects_wrong_length(self):
        with pytest.raises(CodeFormatError, match="line 2"):
            read_code("q=2 n=3\n0110\n")

    def test_rejects_missing_header(self):
        with pytest.raises(CodeFormatError):
            read_code("000\n")


# property tests ------------------------------------------------------------


@st.composite
def small_codes(draw):
    q = draw(st.integers(2, 3))
    n = draw(st.integers(1, 5))
    universe = list(itertools.product(range(q), repeat=n))
    size = draw(st.integers(1, min(8, len(universe))))
    words = draw(
        st.lists(st.sampled_from(universe), min_size=size, max_size=size, unique=True)
    )
    return Code(q, n, tuple(words))


@given(small_codes())
@settings(max_examples=60, deadline=None)
def test_distribution_sums_to_size(code):
    dist = distance_distribution(code)
    assert dist.a(0) == 1
    assert sum(dist.counts) == code.size
    assert all(a >= 0 for a in dist.counts)


@given(small_codes(), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_distribution_invariant_under_symmetry(code, rnd):
    perm = list(range(code.n))
    rnd.shuffle(perm)
    permuted = Code(code.q, code.n, tuple(tuple(w[i] for i in perm) for w in code.words))
    assert distance_distribution(permuted).counts == distance_distribution(code).counts
    shifted = translate(code, code.words[0])
    assert distance_distribution(shifted).counts == distance_distribution(code).counts
    assert shifted.words[0] == (0,) * code.n


@given(small_codes())
@settings(max_examples=40, deadline=None)
def test_moments_nonnegative_and_vanish_up_to_strength(code):
    t = strength(code)
    for i in range(code.n + 1):
        m = moments(code, i)
        assert m >= 0
        if 1 <= i <= t:
            assert m == 0
