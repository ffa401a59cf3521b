"""Bound functions, profile enumeration, verification sweeps, and the
classical-bound helpers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tripack.bounds import (
    KAPPA0_DEFAULT,
    Profile,
    SampleStrategy,
    brute_turan_touching,
    corradi_hajnal_deg,
    enumerate_F,
    erdos_gallai_bound,
    f,
    f_prime,
    g_ell,
    g_small,
    h_aux_large,
    h_aux_small,
    h_lemma,
    linear_error_large,
    linear_error_small,
    max_covered_by_disjoint_triangles,
    max_family_formula,
    moon_bound,
    p_fun,
    p_lower_construction,
    turan_touching_bound,
    verify_lemma_maxf,
    verify_lemma_maxgl,
    verify_lemma_maxgsmall,
)
from tripack.bounds import _profile_count
from tripack.extremal import e_max, edge_formula

from .oracles import brute_packing_number

# Small profiles for property tests: coordinates stay single-digit so the
# polynomial values stay readable when a test fails.
profile_coords = st.tuples(
    st.integers(0, 6),
    st.integers(0, 6),
    st.integers(0, 6),
    st.integers(0, 6),
    st.integers(0, 8),
    st.integers(0, 8),
)


def as_profile(coords):
    return Profile(*coords)


class TestFPrime:
    @pytest.mark.parametrize("m,i", [(0, 0), (5, 0), (0, 7), (3, 4)])
    def test_vanishes_without_triangles(self, m, i):
        assert f_prime(Profile(0, 0, 0, 0, m, i)) == 0

    def test_frozen_values(self):
        assert f_prime(Profile(2, 0, 0, 0, 2, 0)) == 29
        assert f_prime(Profile(0, 1, 0, 0, 1, 1)) == 10

    @given(profile_coords)
    def test_integer_valued_and_input_shape_agnostic(self, coords):
        v = f_prime(as_profile(coords))
        assert isinstance(v, int)
        assert f_prime(list(coords)) == v
        assert f_prime(tuple(coords)) == v

    def test_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            f_prime((1, 2, 3))


class TestF:
    def test_frozen_values(self):
        assert f(Profile(0, 1, 0, 0, 0, 2)) == 7
        assert f(Profile(2, 0, 0, 0, 2, 0)) == 29

    def test_penalty_against_f_prime(self):
        # iota-only profiles drop 2*t2 + 3*t3
        p = Profile(0, 1, 0, 0, 0, 2)
        assert f_prime(p) == 9
        assert f(p) == f_prime(p) - 2

    @given(profile_coords)
    def test_case_split(self, coords):
        p = as_profile(coords)
        t1, t2, t3, t4, m, i = p
        base = f_prime(p)
        if m >= 1 and i >= 1:
            expected = base
        elif m == 0 and i >= 1:
            expected = base - (2 * t2 + 3 * t3)
        elif m >= 1:
            expected = base - 2 * t3
        else:
            expected = base - (2 * t2 + 5 * t3)
        assert f(p) == expected

    @given(profile_coords.filter(lambda c: c[4] >= 1 and c[5] >= 1))
    def test_equals_f_prime_with_both_leftovers(self, coords):
        p = as_profile(coords)
        assert f(p) == f_prime(p)


class TestHLemma:
    def test_frozen_values(self):
        assert h_lemma(Profile(2, 0, 0, 0, 2, 0)) == 33
        assert h_lemma(Profile(0, 0, 0, 1, 0, 0)) == 8
        assert h_lemma(Profile(0, 0, 0, 0, 0, 0)) == 0

    def test_matches_first_family_on_its_profile(self):
        # t1 = k, matching of size m: the profile of the first family.
        assert h_lemma(Profile(2, 0, 0, 0, 2, 0)) == edge_formula("E1", 10, 2)
        assert h_lemma(Profile(3, 0, 0, 0, 4, 1)) == edge_formula("E1", 18, 3)


class TestGSmall:
    def test_frozen_values(self):
        assert g_small(Profile(0, 0, 0, 0, 0, 0)) == -28
        assert g_small(Profile(0, 0, 0, 1, 0, 0)) == -13
        assert g_small(Profile(2, 0, 0, 0, 2, 0)) == 5

    @given(profile_coords)
    def test_sparse_block_cap_vs_h_lemma(self, coords):
        # g_small swaps h_lemma's C(3*t4, 2) block term for the sparse cap.
        p = as_profile(coords)
        t4 = p.t4
        c2 = lambda x: x * (x - 1) // 2
        assert g_small(p) == h_lemma(p) - c2(3 * t4) + 8 * c2(t4) + 10 * t4 - 28


class TestGEll:
    def test_small_block_regime_is_h_lemma(self):
        assert g_ell(Profile(2, 0, 0, 0, 2, 0)) == h_lemma(Profile(2, 0, 0, 0, 2, 0))
        # cutoff is strict: t4 = 175 stays below max(176, 1, 0)
        p = Profile(0, 0, 0, 175, 0, 0)
        assert g_ell(p, kappa0=1) == h_lemma(p) == 138425

    def test_large_block_regime(self):
        p = Profile(0, 0, 0, 200, 0, 0)
        assert g_ell(p, kappa0=1) == f(p) + p_fun(600, 0) == 180902
        # boundary t4 = 176 is already the large regime
        q = Profile(0, 0, 0, 176, 0, 0)
        assert g_ell(q, kappa0=1) == f(q) + p_fun(528, 0) == 140186

    def test_single_t1_adjustment(self):
        p = Profile(1, 0, 0, 200, 0, 0)
        assert g_ell(p, kappa0=1) == f(p) + p_fun(600, 0) + 20 == 182325

    def test_kappa0_raises_cutoff(self):
        # with the default kappa0, t4 = 200 is still the small regime
        p = Profile(0, 0, 0, 200, 0, 0)
        assert g_ell(p) == h_lemma(p)
        assert g_ell(p, kappa0=KAPPA0_DEFAULT) != g_ell(p, kappa0=1)

    def test_rejects_bad_kappa0(self):
        with pytest.raises(ValueError):
            g_ell(Profile(0, 0, 0, 1, 0, 0), kappa0=0)

    @given(profile_coords, st.integers(1, 300))
    def test_integer_valued(self, coords, kappa0):
        assert isinstance(g_ell(as_profile(coords), kappa0), int)


class TestPFun:
    def test_frozen_values(self):
        assert p_fun(10, 3) == 87
        assert p_fun(20, 2) == 190
        assert p_fun(17, 2) == 210

    def test_branch_boundary_inclusive(self):
        # h = 9a evaluates the sparse-designated branch, not the first one
        assert p_fun(18, 2) == 153
        first_branch = 2 * (18 - 2) + (18 - 4) * (18 - 5) // 2 + 6 * 18
        assert p_fun(18, 2) != first_branch

    def test_zero_designated(self):
        assert p_fun(6, 0) == 29
        assert p_fun(0, 0) == -2 * 2 + 4 * 3 // 2  # literal polynomial

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            p_fun(5, 3)
        with pytest.raises(ValueError):
            p_fun(4, -1)


class TestEnumerateF:
    def test_frozen_count(self):
        assert len(list(enumerate_F(10, 2))) == 30

    def test_smallest_packed_slice(self):
        assert list(enumerate_F(3, 1)) == [
            Profile(0, 0, 0, 1, 0, 0),
            Profile(0, 0, 1, 0, 0, 0),
            Profile(0, 1, 0, 0, 0, 0),
            Profile(1, 0, 0, 0, 0, 0),
        ]

    @given(st.integers(0, 32), st.integers(0, 10))
    def test_count_order_uniqueness_invariants(self, n, k):
        if 3 * k > n:
            with pytest.raises(ValueError):
                list(enumerate_F(n, k))
            return
        profiles = list(enumerate_F(n, k))
        assert len(profiles) == _profile_count(n, k)
        assert profiles == sorted(set(profiles))
        for p in profiles:
            assert p.t1 + p.t2 + p.t3 + p.t4 == k
            assert 3 * k + 2 * p.m + p.i == n


class TestVerifyMaxF:
    def test_frozen_small_case(self):
        r = verify_lemma_maxf(10, 2)
        assert r.passed and r.exhaustive
        assert r.min_slack == 0
        assert r.params["max_found"] == 35 == e_max(10, 2)[0]
        assert r.points == 9  # 3 slice choices of (t1, t2) times 3 of m

    def test_triangle_free_slice_matches_balanced_bipartite(self):
        for n in (9, 12, 15):
            r = verify_lemma_maxf(n, 0)
            assert r.passed
            assert r.params["max_found"] == (n // 2) * ((n + 1) // 2)

    def test_maximizer_concentrates_triangle_types(self):
        for n, k in [(10, 2), (20, 4), (30, 6), (31, 5)]:
            t1, t2, *_ = verify_lemma_maxf(n, k).params["argmax"]
            assert t1 == k or t2 == k

    def test_rejects_tight_n(self):
        with pytest.raises(ValueError):
            verify_lemma_maxf(7, 2)

    def test_report_round_trips_to_json(self):
        d = verify_lemma_maxf(10, 2).to_json()
        assert d["lemma"] == "maxf"
        assert d["passed"] is True
        assert d["violations"] == []


class TestVerifyMaxGSmall:
    def test_hypothesis_floor_enforced(self):
        with pytest.raises(ValueError):
            verify_lemma_maxgsmall(8405)

    def test_report_only_scans_below_floor(self):
        # small n genuinely violates the bound; the report must say so
        r = verify_lemma_maxgsmall(
            30, report_only=True, strategy=SampleStrategy(samples=100, seed=0)
        )
        assert not r.passed
        assert r.exhaustive
        assert r.min_slack < 0
        assert r.points == sum(_profile_count(30, k) for k in range(11))
        assert r.samples == 0  # every slice scanned in full, nothing sampled

    def test_first_admissible_n(self):
        r = verify_lemma_maxgsmall(8406, strategy=SampleStrategy(samples=2000, seed=0))
        assert r.passed and not r.exhaustive
        assert r.min_slack == 28
        assert "3 of 2803 slices scanned in full" in r.notes

    def test_small_slices_scanned_in_full(self):
        # |F(8406, k)| = C(k+3, 3) * 4204-ish stays under the default
        # budget only for k <= 2
        assert _profile_count(8406, 2) <= SampleStrategy().exhaust_below
        assert _profile_count(8406, 3) > SampleStrategy().exhaust_below


class TestVerifyMaxGL:
    def test_single_k_at_scale(self):
        r = verify_lemma_maxgl(
            7_200_000, k=1_439_999, strategy=SampleStrategy(samples=3000, seed=0)
        )
        assert r.passed
        assert r.min_slack == 0  # the bound is attained inside the window

    def test_window_sweep_with_low_kappa0(self):
        r = verify_lemma_maxgl(
            40_000, kappa0=1, strategy=SampleStrategy(samples=2000, seed=0)
        )
        assert r.passed and r.min_slack == 0
        assert (r.params["k_min"], r.params["k_max"]) == (7999, 13333)

    def test_hypothesis_floor_scales_with_kappa0(self):
        with pytest.raises(ValueError):
            verify_lemma_maxgl(30_000)
        with pytest.raises(ValueError):
            verify_lemma_maxgl(40_000)  # default kappa0 needs n >= 7.2e6
        with pytest.raises(ValueError):
            verify_lemma_maxgl(40_000, k=100, kappa0=1)  # k below the window


class TestClassicalBounds:
    def test_moon(self):
        assert moon_bound(9, 1) == 24 == e_max(9, 1)[0]
        with pytest.raises(ValueError):
            moon_bound(8, 1)  # needs 2n >= 9k + 8

    def test_moon_matches_first_family(self):
        for n in range(9, 40):
            for k in range(0, (2 * n - 8) // 9 + 1):
                assert moon_bound(n, k) == edge_formula("E1", n, k)

    def test_erdos_gallai(self):
        assert erdos_gallai_bound(7, 1) == 6
        assert erdos_gallai_bound(9, 4) == 36
        with pytest.raises(ValueError):
            erdos_gallai_bound(6, 3)  # needs 2k + 1 <= n

    def test_corradi_hajnal_degree(self):
        assert corradi_hajnal_deg(9, 1) == 5
        assert corradi_hajnal_deg(12, 2) == 7

    def test_turan_touching_formula(self):
        assert turan_touching_bound(7, 2) == 13


class TestBruteTuranTouching:
    def test_frozen_values(self):
        assert brute_turan_touching(7, 2) == 13
        assert brute_turan_touching(4, 2) == 4

    def test_no_designated_vertices_allows_complete(self):
        for h in range(2, 7):
            assert brute_turan_touching(h, 0) == h * (h - 1) // 2

    def test_matches_formula_up_to_six(self):
        for h in range(4, 7):
            for a in range(0, h // 2 + 1):
                assert brute_turan_touching(h, a) == turan_touching_bound(h, a)

    def test_caps_and_domain(self):
        with pytest.raises(ValueError):
            brute_turan_touching(8, 2)
        with pytest.raises(ValueError):
            brute_turan_touching(3, 2)


class TestPLowerConstruction:
    def test_attains_p(self):
        for h, a in [(27, 3), (30, 3), (36, 4)]:
            g, designated = p_lower_construction(h, a)
            assert g.n == h
            assert len(designated) == a
            assert g.edge_count() == p_fun(h, a)

    def test_frozen_witness(self):
        g, designated = p_lower_construction(27, 3)
        assert g.edge_count() == 326
        assert designated == (0, 1, 26)

    def test_no_three_designated_covered(self):
        g, designated = p_lower_construction(27, 3)
        assert max_covered_by_disjoint_triangles(g, designated) == 2

    def test_domain(self):
        with pytest.raises(ValueError):
            p_lower_construction(18, 2)
        with pytest.raises(ValueError):
            p_lower_construction(26, 3)


class TestLinearError:
    def test_small_within_budget(self):
        c = linear_error_small(300, 60, 30)
        assert c.budget == 6 * 300
        assert c.within
        assert Fraction(c.leading_num, c.leading_den) == Fraction(505800, 18)

    def test_large_within_budget_and_mu_free(self):
        c1 = linear_error_large(300, 60, 10)
        c2 = linear_error_large(300, 60, 40)
        assert c1.budget == 19 * 300
        assert c1.within and c2.within
        assert c1.exact == c2.exact

    @given(st.integers(20, 300), st.data())
    @settings(max_examples=60)
    def test_budgets_hold_across_the_window(self, third, data):
        n = 3 * third
        k = data.draw(st.integers(-(-n // 6), n // 3), label="k")
        mu = data.draw(st.integers(0, (n - 3 * k) // 2), label="mu")
        assert linear_error_small(n, k, mu).within
        assert linear_error_large(n, k, mu).within

    def test_domain(self):
        with pytest.raises(ValueError):
            linear_error_small(301, 60, 0)  # n not divisible by 3
        with pytest.raises(ValueError):
            linear_error_small(300, 40, 0)  # k below n/6
        with pytest.raises(ValueError):
            linear_error_large(300, 60, 61)  # 2 mu exceeds n - 3k


class TestAuxiliaryTotals:
    def test_frozen_values(self):
        assert h_aux_small(Profile(0, 60, 0, 40, 30, 0)) == 50900
        assert h_aux_large(Profile(60, 0, 0, 40, 30, 0)) == 45662


class TestMaxFamilyFormula:
    def test_restricted_families(self):
        assert max_family_formula(10, 2, families=("E1", "E2", "E3")) == 35
        assert max_family_formula(10, 2) == e_max(10, 2)[0]

    def test_packing_number_of_best_family_is_k(self):
        # the target of every bound lemma is realised by a graph whose
        # largest disjoint-triangle family has exactly k members
        from tripack.extremal import ExtremalSpec, build

        for n, k in [(9, 1), (10, 2), (12, 2)]:
            fams = e_max(n, k)[1]
            g = build(ExtremalSpec(fams[0], n, k))
            assert brute_packing_number(g) == k
