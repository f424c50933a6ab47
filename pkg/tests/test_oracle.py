import itertools
import math

import numpy as np
import pytest
from hypothesis import given

from antipodal.core import Selection, polygon_area, regular_set
from antipodal.oracle import (
    all_areas,
    brute_extremes,
    brute_k,
    build_even_counterexample,
    clustered_antipodal_set,
    counter_bits,
    jittered_antipodal_set,
    random_antipodal_set,
    solve_k,
    verify_ear_lemma,
    verify_solvers,
    verify_thick_claims,
    verify_thin_theorem,
)
from reference import antipodal_sets, ref_area, ref_is_thick


def test_counter_bits_order():
    assert counter_bits(3, 0, 8).tolist() == [list(b) for b in itertools.product((0, 1), repeat=3)]


@given(antipodal_sets(max_n=7))
def test_all_areas_match_scipy(aset):
    areas = all_areas(aset)
    for c, bits in enumerate(itertools.product((0, 1), repeat=aset.n)):
        assert areas[c] == pytest.approx(ref_area(aset, Selection(bits)), rel=1e-9)


def test_all_areas_limit():
    with pytest.raises(ValueError):
        all_areas(jittered_antipodal_set(25, np.random.default_rng(0)))


class TestBruteExtremes:
    def test_reg3(self, reg3):
        lo, hi = brute_extremes(reg3)
        assert (str(lo.selection), lo.optima_count) == ("000", 6)
        assert (str(hi.selection), hi.optima_count) == ("010", 2)

    def test_reg4(self, reg4):
        lo, hi = brute_extremes(reg4)
        assert lo.area == pytest.approx(math.sqrt(2) / 2)
        assert hi.area == pytest.approx(1 + math.sqrt(2) / 2)
        assert lo.optima_count == hi.optima_count == 8

    @given(antipodal_sets(max_n=8))
    def test_lexicographic_minimum(self, aset):
        lo, hi = brute_extremes(aset)
        sels = [Selection(b) for b in itertools.product((0, 1), repeat=aset.n)]
        areas = [ref_area(aset, s) for s in sels]
        for res, best in ((lo, min(areas)), (hi, max(areas))):
            tied = [s for s, a in zip(sels, areas) if abs(a - best) <= 1e-9 * max(1, best)]
            assert res.selection == min(tied)
            assert res.optima_count == len(tied)


class TestVerifiers:
    @pytest.mark.parametrize("check", [verify_thin_theorem, verify_thick_claims, verify_solvers, verify_ear_lemma])
    def test_pass_on_random_sets(self, check):
        rng = np.random.default_rng(1)
        for n in range(3, 11):
            report = check(random_antipodal_set(n, rng))
            assert report.passed, report.to_text()

    @pytest.mark.parametrize("check", [verify_thin_theorem, verify_thick_claims, verify_solvers])
    def test_pass_on_clustered_sets(self, check):
        rng = np.random.default_rng(2)
        for n in range(3, 10):
            assert check(clustered_antipodal_set(n, rng)).passed

    def test_report_text(self, reg4):
        text = verify_solvers(reg4).to_text()
        assert "property: solvers_match_enumeration" in text
        assert text.endswith("passed: yes")

    def test_limit(self):
        with pytest.raises(ValueError):
            verify_thin_theorem(jittered_antipodal_set(17, np.random.default_rng(0)))


class TestEvenCounterexample:
    @pytest.mark.parametrize("n,eta", [(6, 0.01), (8, 0.005), (10, 0.002)])
    def test_non_thick_beats_thick(self, n, eta):
        aset, P, Q = build_even_counterexample(n, eta)
        assert ref_is_thick(aset, P) and not ref_is_thick(aset, Q)
        assert ref_area(aset, Q) > ref_area(aset, P)

    def test_areas_near_one_and_two(self):
        aset, P, Q = build_even_counterexample(6, 0.001)
        assert polygon_area(aset, P) == pytest.approx(1.0, abs=0.01)
        assert polygon_area(aset, Q) == pytest.approx(2.0, abs=0.01)

    def test_thick_claims_still_hold(self):
        aset, _, _ = build_even_counterexample(6, 0.01)
        assert verify_thick_claims(aset).passed

    @pytest.mark.parametrize("n,eta", [(5, 0.01), (4, 0.01), (6, 0.0), (6, 0.2)])
    def test_rejects_bad_parameters(self, n, eta):
        with pytest.raises(ValueError):
            build_even_counterexample(n, eta)


class TestKGons:
    def test_reg4_triangle(self, reg4):
        res = solve_k(reg4, 3, "max")
        assert res.k == 3
        assert res.area == pytest.approx(0.5 + math.sqrt(2) / 2)

    def test_reg6_small_triangle(self, reg6):
        res = solve_k(reg6, 3, "min")
        # three consecutive points 30 degrees apart
        assert res.area == pytest.approx((1 - math.sqrt(3) / 2) / 2, rel=1e-12)
        ref = brute_k(reg6, 3, "min")
        assert res.area == pytest.approx(ref.area, rel=1e-9)

    def test_k_equal_n_is_full_problem(self, reg5):
        assert solve_k(reg5, 5, "max").area == pytest.approx(brute_extremes(reg5)[1].area)
        assert solve_k(reg5, 5, "max").excluded_pairs == ()

    @given(antipodal_sets(min_n=4, max_n=7))
    def test_matches_double_enumeration(self, aset):
        for k in range(3, aset.n + 1):
            for objective in ("min", "max"):
                got, ref = solve_k(aset, k, objective), brute_k(aset, k, objective)
                assert got.area == pytest.approx(ref.area, rel=1e-9)
                sub = aset.subset([p for p in range(aset.n) if p not in got.excluded_pairs])
                assert polygon_area(sub, got.selection) == pytest.approx(got.area, abs=1e-12)

    def test_bad_arguments(self, reg4):
        with pytest.raises(ValueError):
            solve_k(reg4, 2, "max")
        with pytest.raises(ValueError):
            solve_k(reg4, 3, "mean")
        with pytest.raises(ValueError):
            solve_k(regular_set(24), 5, "max", budget=1000)


class TestGenerators:
    def test_random_is_seeded(self):
        a = random_antipodal_set(9, np.random.default_rng(7))
        b = random_antipodal_set(9, np.random.default_rng(7))
        assert a == b

    def test_jittered_spacing(self):
        aset = jittered_antipodal_set(1000, np.random.default_rng(0))
        assert np.diff(aset.angles).min() > 0.2 * math.pi / 1000 - 1e-15

    def test_clustered_is_valid(self):
        aset = clustered_antipodal_set(12, np.random.default_rng(0))
        assert aset.n == 12
