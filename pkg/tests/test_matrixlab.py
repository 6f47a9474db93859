"""Exact singularity enumeration, event statistics, seeded surveys."""

from fractions import Fraction

import pytest

from ntl.errors import InfeasibleSizeError
from ntl.matrixlab import (
    EXACT_MAX_N,
    exact_event_stats,
    exact_pn,
    exact_pn_bruteforce,
    integer_corank_and_kernel,
    survey,
)


class TestExactPn:
    def test_small_values(self):
        assert exact_pn(1) == 0
        assert exact_pn(2) == Fraction(1, 2)
        assert exact_pn(3) == Fraction(5, 8)
        assert exact_pn(4) == Fraction(169, 256)

    def test_matches_bruteforce(self):
        # symmetry-reduced enumeration vs the raw 2^(n^2) loop
        for n in (2, 3, 4):
            assert exact_pn(n) == exact_pn_bruteforce(n)

    def test_parallel_matches_serial(self):
        assert exact_pn(4, jobs=2) == exact_pn(4)

    def test_rejects_large(self):
        with pytest.raises(InfeasibleSizeError):
            exact_pn(EXACT_MAX_N + 1)


class TestEventStats:
    def test_n2(self):
        s = exact_event_stats(2)
        assert s["p_singular"] == Fraction(1, 2)
        assert s["p_d11"] == Fraction(1, 2)
        assert s["ew"] == 1
        assert s["ew2"] == Fraction(1, 2)
        assert s["ew3"] == 0
        assert s["p_e8"] == Fraction(1, 2)
        assert s["corank2_orbits"] == 0

    def test_n3(self):
        s = exact_event_stats(3)
        assert s["p_singular"] == Fraction(5, 8)
        assert s["ew"] == Fraction(3, 2)
        assert s["ew2"] == Fraction(3, 2)
        assert s["ew3"] == Fraction(5, 4)
        assert s["w_dist"] == {0: Fraction(3, 8), 2: Fraction(9, 16),
                               6: Fraction(1, 16)}

    def test_n4(self):
        s = exact_event_stats(4)
        assert s["p_singular"] == Fraction(169, 256)
        assert s["ew"] == Fraction(3, 2)
        assert s["ew2"] == Fraction(51, 32)
        assert s["ew3"] == Fraction(51, 32)

    def test_w_dist_is_distribution(self):
        for n in (2, 3, 4):
            dist = exact_event_stats(n)["w_dist"]
            assert sum(dist.values()) == 1
            assert all(pr > 0 for pr in dist.values())

    def test_moments_consistent_with_distribution(self):
        import math
        for n in (2, 3, 4):
            s = exact_event_stats(n)
            dist = s["w_dist"]
            ew = sum(w * pr for w, pr in dist.items())
            ew2 = sum(math.comb(w, 2) * pr for w, pr in dist.items())
            ew3 = sum(math.comb(w, 3) * pr for w, pr in dist.items())
            assert (ew, ew2, ew3) == (s["ew"], s["ew2"], s["ew3"])

    def test_e8_dominated_by_singularity(self):
        for n in (2, 3, 4, 5):
            s = exact_event_stats(n)
            assert s["p_e8"] <= s["p_singular"]

    def test_parallel_matches_serial(self):
        assert exact_event_stats(3, jobs=2) == exact_event_stats(3)


class TestCorankKernel:
    def test_nonsingular(self):
        corank, kern = integer_corank_and_kernel([[1, 0], [0, 1]])
        assert corank == 0 and kern is None

    def test_corank_one(self):
        corank, kern = integer_corank_and_kernel([[1, 1], [1, 1]])
        assert corank == 1 and kern == (1, -1)

    def test_corank_two(self):
        corank, kern = integer_corank_and_kernel(
            [[1, 1, 1], [1, 1, 1], [1, 1, 1]])
        assert corank == 2 and kern is None


class TestSurvey:
    def test_deterministic_across_reruns(self):
        a = survey(4, 50000, 99)
        b = survey(4, 50000, 99)
        assert a.singular == b.singular and a.histogram == b.histogram

    def test_deterministic_across_jobs(self):
        a = survey(4, 150000, 99, jobs=1)
        b = survey(4, 150000, 99, jobs=3)
        assert a.singular == b.singular and a.histogram == b.histogram

    def test_histogram_sums_to_singular(self):
        rep = survey(4, 50000, 5)
        assert sum(rep.histogram.values()) == rep.singular

    def test_seed_changes_results(self):
        assert survey(4, 50000, 1).singular != survey(4, 50000, 2).singular

    def test_rate_near_exact(self):
        rep = survey(4, 200000, 7)
        assert abs(rep.singular / rep.samples - float(exact_pn(4))) < 0.01

    def test_generator_documented(self):
        rep = survey(3, 1000, 0)
        assert "Philox" in rep.generator["bit_generator"]
        assert "SeedSequence" in rep.generator["seeding"]

    def test_corank2_bucket(self):
        rep = survey(4, 50000, 3)
        assert "corank>=2" in rep.histogram
        assert rep.corank2_plus == rep.histogram["corank>=2"]
