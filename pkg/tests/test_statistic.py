import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from cpcopula import (
    ChangePointError,
    StatTrajectory,
    cvm_at_k,
    difference_process,
    difference_process_r,
    empirical_copula,
    pseudo_observations,
    statistic_sn,
    statistic_snr,
)
from cpcopula.statistic import lambda_weight

from . import oracles

DIAG2 = [[1.0, 1.0], [2.0, 2.0]]
DIAG3 = [[1.0, 1.0], [2.0, 2.0], [3.0, 3.0]]


class TestDifferenceProcess:
    @pytest.mark.parametrize("k", [0, 2])
    def test_vanishes_at_ends(self, k):
        assert difference_process(DIAG2, k, [0.3, 0.7]) == 0.0

    def test_single_point_windows(self):
        for u in ([0.0, 0.0], [0.5, 0.5], [0.99, 0.2]):
            assert difference_process(DIAG2, 1, u) == 0.0

    def test_split_range(self):
        with pytest.raises(ChangePointError) as exc:
            difference_process(DIAG2, 3, [0.5, 0.5])
        assert exc.value.code == "split-range"

    def test_fullrank_hand_value(self):
        got = difference_process_r(DIAG3, 1, [1 / 3, 1 / 3])
        assert got == pytest.approx(math.sqrt(3) * 2 / 9, abs=1e-15)

    def test_fullrank_ends(self):
        assert difference_process_r(DIAG3, 0, [0.5, 0.5]) == 0.0
        assert difference_process_r(DIAG3, 3, [0.5, 0.5]) == 0.0

    def test_matches_oracle(self, rng):
        x = rng.standard_normal((9, 2))
        u = rng.uniform(size=(6, 2))
        for k in range(10):
            want = [oracles.d_n(x.tolist(), k, v) for v in u] if 0 < k < 9 else [0.0] * 6
            assert_allclose(difference_process(x, k, u), want, atol=1e-14)

    def test_centering_copula_cancels(self, rng):
        # lambda(s,1) * sqrt(n) lambda(0,s) (C_L - C) - lambda(0,s) * sqrt(n) lambda(s,1) (C_R - C)
        x = rng.standard_normal((20, 2))
        n = 20
        u = rng.uniform(size=(8, 2))
        ref = rng.uniform(size=8)
        for k in range(1, n):
            left = empirical_copula(pseudo_observations(x, 1, k), u)
            right = empirical_copula(pseudo_observations(x, k + 1, n), u)
            a, b = lambda_weight(n, 0, k), lambda_weight(n, k, n)
            split = b * math.sqrt(n) * a * (left - ref) - a * math.sqrt(n) * b * (right - ref)
            assert_allclose(split, difference_process(x, k, u), atol=1e-12)


class TestLambda:
    def test_exact_fraction(self):
        assert lambda_weight(7, 0, 3) == 3 / 7

    def test_partition(self):
        for k in range(8):
            assert lambda_weight(7, 0, k) + lambda_weight(7, k, 7) == pytest.approx(1.0, abs=1e-15)


class TestCvm:
    def test_two_point_sample(self):
        assert cvm_at_k(DIAG2, 1) == 0.0

    def test_mean_of_squares(self, rng):
        x = rng.standard_normal((11, 2))
        full = pseudo_observations(x).values
        for k in (1, 5, 10):
            d = np.array([difference_process(x, k, u) for u in full[::-1]])
            assert cvm_at_k(x, k) == pytest.approx(np.sum(d ** 2) / 11, abs=1e-14)

    def test_range(self):
        with pytest.raises(ChangePointError):
            cvm_at_k(DIAG3, 0)


class TestStatistic:
    def test_two_points(self):
        traj = statistic_sn(DIAG2)
        assert traj.statistic == 0.0
        assert traj.k_star == 1

    def test_too_short(self):
        with pytest.raises(ChangePointError) as exc:
            statistic_sn([[1.0, 2.0]])
        assert exc.value.code == "too-short"

    def test_identical_rows(self):
        traj = statistic_sn(np.ones((6, 2)))
        assert np.all(traj.values == traj.values[0])
        assert traj.statistic == traj.values[0]
        assert traj.k_star == 1

    def test_smallest_argmax(self):
        traj = StatTrajectory.from_values([0.1, 0.3, 0.3, 0.2])
        assert (traj.statistic, traj.k_star) == (0.3, 2)

    @pytest.mark.parametrize("scaling", ["lk1", "lk2"])
    def test_brute_force(self, rng, scaling):
        for _ in range(20):
            n = int(rng.integers(2, 9))
            x = rng.standard_normal((n, 2))
            for r, fn in ((False, statistic_sn), (True, statistic_snr)):
                traj, best, k = oracles.s_n(x.tolist(), scaling, r=r)
                got = fn(x, scaling)
                assert_allclose(got.values, traj, atol=1e-12)
                assert got.k_star == k

    def test_nonnegative(self, rng):
        x = rng.standard_normal((30, 3))
        assert np.all(statistic_sn(x).values >= 0)
        assert np.all(statistic_snr(x).values >= 0)

    def test_ties_brute_force(self, rng):
        x = rng.integers(0, 3, size=(8, 2)).astype(float)
        traj, _, _ = oracles.s_n(x.tolist())
        assert_allclose(statistic_sn(x).values, traj, atol=1e-12)


# integer grid keeps the float transforms below strictly increasing
grid = st.integers(-500, 500).map(float)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(grid, grid), min_size=3, max_size=15))
def test_monotone_invariance(rows):
    x = np.array(rows)
    y = np.column_stack([np.exp(x[:, 0] / 100), x[:, 1] ** 3 + 2 * x[:, 1]])
    for fn in (statistic_sn, statistic_snr):
        a, b = fn(x), fn(y)
        assert_array_equal(a.values, b.values)
        assert a.k_star == b.k_star
