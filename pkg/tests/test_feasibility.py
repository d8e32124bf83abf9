from fractions import Fraction

import pytest

from twodist.constructions import (
    arc_code,
    column_multiplicity,
    dm_code,
    su1_code,
    su2_code,
)
from twodist.core import TwoDistParams, strength
from twodist.feasibility import (
    LinearParams,
    check_oa2_quadratic,
    complementary_params,
    delsarte_form,
    gcd_screen,
    macwilliams_mu,
    p_adic_valuation,
    special_values,
    srg_analysis,
    srg_empirical,
    two_distance_realizable,
)


def P(q, n, d, delta):
    return TwoDistParams(q, n, d, delta)


class TestQuadratic:
    def test_su1_parameters_consistent(self):
        r = check_oa2_quadratic(2, 16, 12, 6, 8)
        assert r.ok and r.residual == 0
        assert r.roots == (Fraction(12), Fraction(10))
        assert r.roots_positive_integers and r.discriminant_is_square

    def test_full_weight_closed_form(self):
        r = check_oa2_quadratic(2, 16, 8, 4, 8)
        assert r.ok and r.length_if_w2_full == 8

    def test_inconsistent_parameters(self):
        r = check_oa2_quadratic(2, 8, 5, 2, 4)
        assert not r.ok and r.residual == -4

    def test_requires_divisible_size(self):
        with pytest.raises(ValueError):
            check_oa2_quadratic(2, 6, 5, 2, 4)
        with pytest.raises(ValueError):
            check_oa2_quadratic(3, 9, 5, 2, 4)


class TestDelsarteForm:
    def test_examples(self):
        assert delsarte_form(2, 6, 8) == delsarte_form(2, 6, 8)
        f = delsarte_form(2, 6, 8)
        assert (f.p, f.u, f.h) == (2, 1, 3)
        f = delsarte_form(2, 4, 6)
        assert (f.u, f.h) == (1, 2)

    def test_infeasible(self):
        assert delsarte_form(2, 3, 7) is None
        assert delsarte_form(3, 2, 7) is None

    def test_gap_divides_weight(self):
        assert delsarte_form(2, 3, 5) is None  # gap 2 does not divide 3


class TestMacWilliams:
    def test_su2_parameters(self):
        r = macwilliams_mu(LinearParams(2, 4, 9, 4, 6))
        assert r.status == "ok" and (r.mu1, r.mu2) == (9, 6)
        assert r.second_moment_residual == 0

    def test_su1_parameters(self):
        r = macwilliams_mu(LinearParams(2, 4, 12, 6, 8))
        assert r.status == "ok" and (r.mu1, r.mu2) == (12, 3)

    def test_infeasible(self):
        r = macwilliams_mu(LinearParams(2, 3, 6, 2, 5))
        assert r.status == "infeasible"

    def test_degenerate_equidistant(self):
        # [15, 4] with weights {8, 10}: the count at 10 solves to zero
        r = macwilliams_mu(LinearParams(2, 4, 15, 8, 10))
        assert r.status == "degenerate" and r.mu2 == 0

    def test_matches_actual_weight_counts(self):
        for g, lp in [
            (su2_code(2, 2, 3), LinearParams(2, 4, 9, 4, 6)),
            (su1_code(2, 4, 2, 1, 1), LinearParams(2, 4, 12, 6, 8)),
            (arc_code(4), LinearParams(4, 3, 6, 4, 6)),
        ]:
            wd = g.weight_distribution()
            r = macwilliams_mu(lp)
            assert wd == {lp.w1: r.mu1, lp.w2: r.mu2}


class TestSrg:
    def test_su1_parameters(self):
        s = srg_analysis(LinearParams(2, 4, 12, 6, 8))
        assert s.params == (16, 12, 8, 12)
        assert sorted((s.e1, s.e2)) == [3, 12]
        assert s.feasible

    def test_su2_parameters(self):
        s = srg_analysis(LinearParams(2, 4, 9, 4, 6))
        assert s.params == (16, 9, 4, 6)
        assert (s.e1, s.e2) == (9, 6)
        assert s.feasible
        # the direct weight-expression for the multiplicities disagrees here
        assert not s.weight_form_agrees
        assert sorted((s.e1_weight_form, s.e2_weight_form)) == [
            Fraction(7, 2),
            Fraction(23, 2),
        ]

    def test_counting_identity_refutes(self):
        # integral multiplicities, but the edge-count identity fails
        s = srg_analysis(LinearParams(2, 4, 9, 4, 5))
        assert s.multiplicities_integral
        assert not s.counting_identity_ok
        assert not s.feasible

    def test_discriminant_identity(self):
        for lp in [
            LinearParams(2, 4, 9, 4, 6),
            LinearParams(3, 3, 9, 6, 9),
            LinearParams(4, 3, 6, 4, 6),
        ]:
            s = srg_analysis(lp)
            assert s.disc == (lp.q * (lp.w2 - lp.w1)) ** 2

    def test_negative_parameters_raise(self):
        with pytest.raises(ValueError, match="cannot form"):
            srg_analysis(LinearParams(3, 3, 7, 3, 6))

    def test_empirical_graph_matches_when_identified(self):
        # the distance-w1 graph on codewords has degree mu1; it realizes the
        # derived parameters exactly when mu1 = n(q-1)
        cases = [
            (su2_code(2, 2, 3), LinearParams(2, 4, 9, 4, 6)),
            (su1_code(2, 4, 2, 1, 1), LinearParams(2, 4, 12, 6, 8)),
        ]
        for g, lp in cases:
            assert macwilliams_mu(lp).mu1 == lp.n * (lp.q - 1)
            emp = srg_empirical(g.span(), lp.w1)
            ana = srg_analysis(lp)
            assert emp.strongly_regular
            assert emp.params == ana.params
            assert sorted(m for _, m in emp.multiplicities) == sorted((ana.e1, ana.e2))

    def test_empirical_graph_on_translate_family_is_multipartite(self):
        # antipodal difference-matrix codes: groups of translates are the
        # parts of a complete multipartite distance-w1 graph
        emp = srg_empirical(dm_code(3, 1, 1), 6)
        assert emp.strongly_regular
        assert emp.params == (27, 24, 21, 24)


class TestGcdScreen:
    def test_su2_passes(self):
        screen = gcd_screen(LinearParams(2, 4, 9, 4, 6, s=1))
        (v,) = screen.per_s
        assert v.verdict == "pass"
        assert v.d_c == 2 and v.n_c == 6

    def test_projective_failure(self):
        # d = 5, delta = 2 in dimension 4: valuations cannot align
        screen = gcd_screen(LinearParams(2, 4, 8, 5, 7, s=1))
        (v,) = screen.per_s
        assert v.verdict == "fail"
        assert any(c.clause == "i" and c.passed is False for c in v.clauses)

    def test_two_dimensional_abstains(self):
        screen = gcd_screen(LinearParams(3, 2, 6, 3, 5, s=3))
        (v,) = screen.per_s
        assert v.verdict == "abstain"

    def test_unknown_s_reports_all_candidates(self):
        screen = gcd_screen(LinearParams(2, 4, 9, 4, 6))
        assert len(screen.per_s) >= 2
        assert screen.any_admissible

    def test_su1_with_zero_complementary_distance(self):
        screen = gcd_screen(LinearParams(2, 4, 12, 6, 8, s=1))
        (v,) = screen.per_s
        assert v.verdict == "pass" and v.d_c == 0


class TestComplementary:
    def test_su2(self):
        (c,) = complementary_params(LinearParams(2, 4, 9, 4, 6, s=1))
        assert (c.n_c, c.d_c) == (6, 2) and not c.degenerate

    def test_su1_degenerate(self):
        (c,) = complementary_params(LinearParams(2, 4, 12, 6, 8, s=1))
        assert (c.n_c, c.d_c) == (3, 0) and c.degenerate

    def test_pencil(self):
        (c,) = complementary_params(LinearParams(3, 2, 6, 3, 5, s=3))
        assert c.d_c == 4  # delta * (q - 1)

    def test_no_valid_s_raises(self):
        with pytest.raises(ValueError):
            complementary_params(LinearParams(2, 2, 3, 1, 3, s=1))


class TestSpecialValues:
    def test_both_odd(self):
        sv = special_values(P(2, 9, 3, 4))
        assert sv.status.kind == "not_well_defined" and sv.clause == "a"

    def test_odd_d_smaller_than_delta(self):
        sv = special_values(P(2, 10, 3, 7))
        assert sv.status.kind == "not_well_defined" and sv.clause in ("c", "d")

    def test_full_length(self):
        sv = special_values(P(2, 10, 6, 4))
        assert sv.status.kind == "not_well_defined" and sv.clause == "d"

    def test_near_full_length(self):
        sv = special_values(P(2, 9, 6, 2))
        assert sv.status.kind == "not_well_defined" and sv.clause == "e"

    def test_odd_distance_pair_value(self):
        sv = special_values(P(2, 15, 3, 3))
        assert sv.status.kind == "exact" and sv.status.lo == 6
        assert not sv.boundary

    def test_boundary_flag(self):
        sv = special_values(P(2, 7, 3, 3))
        assert sv.status.lo == 4 and sv.boundary

    def test_ternary_distances_one_three(self):
        for n in range(4, 11):
            sv = special_values(P(3, n, 1, 2))
            assert sv.status.kind == "exact" and sv.status.lo == 6

    def test_conjectured_lower_bounds(self):
        sv = special_values(P(3, 8, 2, 2))
        assert sv.status is None and sv.conjectured_lower == 29
        sv = special_values(P(2, 9, 2, 4))
        assert sv.conjectured_lower == 9


class TestRealizable:
    @pytest.mark.parametrize(
        "args,expected",
        [
            ((2, 7, 4, 2), True),
            ((2, 12, 8, 2), False),
            ((2, 14, 10, 2), False),
            ((2, 16, 10, 2), True),
            ((2, 19, 10, 2), True),
            ((2, 18, 11, 5), False),
            ((3, 5, 1, 2), True),
            ((4, 7, 4, 2), True),
        ],
    )
    def test_cases(self, args, expected):
        assert two_distance_realizable(P(*args)) == expected

    def test_never_contradicts_impossibility_clauses(self):
        for n in range(3, 16):
            for d in range(1, n):
                for delta in range(1, n - d + 1):
                    params = P(2, n, d, delta)
                    sv = special_values(params)
                    if sv.status is not None and sv.status.kind == "not_well_defined":
                        assert not two_distance_realizable(params), params


class TestValuation:
    def test_values(self):
        assert p_adic_valuation(2, 12) == 2
        assert p_adic_valuation(3, 9) == 2
        assert p_adic_valuation(2, 7) == 0
        assert p_adic_valuation(2, 0) is None


class TestScreensOnConstructions:
    """No screen may reject the parameters of an exhibited code."""

    CASES = [
        # (generator-or-code, LinearParams, strength-2 expected)
        (su2_code(2, 2, 3), LinearParams(2, 4, 9, 4, 6, s=1)),
        (su1_code(2, 4, 2, 1, 1), LinearParams(2, 4, 12, 6, 8, s=1)),
        (su1_code(3, 3, 2, 1, 1), LinearParams(3, 3, 9, 6, 9, s=1)),
        (arc_code(4), LinearParams(4, 3, 6, 4, 6, s=1)),
    ]

    def test_all_screens_pass(self):
        for g, lp in self.CASES:
            assert column_multiplicity(g) == lp.s
            assert delsarte_form(lp.q, lp.w1, lp.w2) is not None
            assert macwilliams_mu(lp).status in ("ok", "degenerate")
            srg = srg_analysis(lp)
            assert srg.feasible
            screen = gcd_screen(lp)
            assert screen.any_admissible

    def test_quadratic_zero_on_strength2_codes(self):
        for g, lp in self.CASES:
            code = g.span()
            if strength(code) >= 2 and lp.size > lp.q**2:
                r = check_oa2_quadratic(lp.q, lp.size, lp.n, lp.w1, lp.w2)
                assert r.ok, (lp, r.residual)
