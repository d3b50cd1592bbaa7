import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from cpcopula import (
    ChangePointError,
    empirical_copula,
    empirical_copula_fullrank,
    partial_derivative_hat,
    pseudo_observations,
    ranks_in_window,
)
from cpcopula.ranks import empty_pseudo_observations, fd_bandwidth

from . import oracles


class TestRanksInWindow:
    def test_distinct(self):
        assert_array_equal(ranks_in_window([3.1, 1.2, 2.5], 1, 3), [3, 1, 2])

    def test_ties_take_maximal_rank(self):
        assert_array_equal(ranks_in_window([1.0, 1.0, 2.0], 1, 3), [2, 2, 3])

    def test_window_restricted(self):
        assert_array_equal(ranks_in_window([5.0, 4.0, 3.0, 9.0], 2, 3), [2, 1])

    def test_empty_window(self):
        with pytest.raises(ChangePointError) as exc:
            ranks_in_window([1.0, 2.0], 2, 1)
        assert exc.value.code == "empty-window"

    def test_nan(self):
        with pytest.raises(ChangePointError) as exc:
            ranks_in_window([1.0, np.nan, 2.0], 1, 3)
        assert exc.value.code == "invalid-data"

    def test_against_counting(self, rng):
        col = rng.integers(0, 5, size=30).astype(float)
        for k, l in [(1, 30), (4, 17), (10, 10)]:
            assert ranks_in_window(col, k, l).tolist() == oracles.ranks(col.tolist(), k, l)


class TestPseudoObservations:
    def test_lk1(self):
        p = pseudo_observations([[1, 1], [2, 2]], 1, 2)
        assert_allclose(p.values, [[0.5, 0.5], [1, 1]])

    def test_lk2(self):
        p = pseudo_observations([[1, 1], [2, 2]], 1, 2, scaling="lk2")
        assert_allclose(p.values, [[1 / 3, 1 / 3], [2 / 3, 2 / 3]])

    def test_bad_scaling(self):
        with pytest.raises(ChangePointError):
            pseudo_observations([[1, 1], [2, 2]], scaling="n")

    def test_window_metadata(self, rng):
        p = pseudo_observations(rng.standard_normal((10, 3)), 3, 7)
        assert p.window == (3, 7)
        assert (p.size, p.dim) == (5, 3)


class TestEmpiricalCopula:
    def test_half(self):
        p = pseudo_observations([[1, 1], [2, 2]])
        assert empirical_copula(p, [0.5, 0.5]) == 0.5

    def test_corner_is_one(self, rng):
        p = pseudo_observations(rng.standard_normal((20, 2)))
        assert empirical_copula(p, [1.0, 1.0]) == 1.0

    def test_empty_window_is_zero(self):
        assert empirical_copula(empty_pseudo_observations(2, 3), [0.3, 0.9]) == 0.0

    def test_domain(self):
        p = pseudo_observations([[1, 1], [2, 2]])
        with pytest.raises(ChangePointError) as exc:
            empirical_copula(p, [1.5, 0.5])
        assert exc.value.code == "domain"

    def test_dimension(self):
        p = pseudo_observations([[1, 1], [2, 2]])
        with pytest.raises(ChangePointError) as exc:
            empirical_copula(p, [0.5, 0.5, 0.5])
        assert exc.value.code == "dimension"

    def test_fullrank_single_row_window(self):
        full = pseudo_observations([[1, 1], [2, 2], [3, 3]])
        assert empirical_copula_fullrank(full, 1, 1, [0.5, 0.5]) == 1.0

    def test_fullrank_requires_full_sample(self):
        part = pseudo_observations([[1, 1], [2, 2], [3, 3]], 2, 3)
        with pytest.raises(ChangePointError):
            empirical_copula_fullrank(part, 1, 1, [0.5, 0.5])

    def test_vectorized_matches_oracle(self, rng):
        x = rng.standard_normal((15, 2))
        p = pseudo_observations(x, 4, 12)
        u = rng.uniform(size=(25, 2))
        pts = oracles.pobs(x.tolist(), 4, 12)
        assert_allclose(empirical_copula(p, u), [oracles.ecdf(pts, v) for v in u], atol=0)


class TestPartialDerivative:
    def test_bandwidth(self):
        assert fd_bandwidth(4) == 0.5
        assert fd_bandwidth(100) == pytest.approx(0.1)

    def test_clamped_denominator(self):
        # u_1 = 0.1 with h = 0.2 (window of 25): divisor is 0.3 - 0 = 0.3
        x = np.column_stack([np.arange(25.0), np.arange(25.0)])
        p = pseudo_observations(x)
        got = partial_derivative_hat(p, 1, [0.1, 1.0])
        # rows with u_1 <= 0.3 are ranks 1..7
        assert got == pytest.approx((7 / 25) / 0.3)

    def test_independence_slope(self, rng):
        p = pseudo_observations(rng.uniform(size=(10000, 2)))
        assert abs(partial_derivative_hat(p, 1, [0.5, 0.5]) - 0.5) < 0.05

    def test_matches_oracle(self, rng):
        x = rng.standard_normal((12, 3))
        p = pseudo_observations(x)
        pts = oracles.pobs(x.tolist(), 1, 12)
        for u in rng.uniform(size=(10, 3)):
            for j in range(1, 4):
                assert partial_derivative_hat(p, j, u) == pytest.approx(oracles.derivative(pts, j - 1, u), abs=1e-12)

    def test_bad_index(self):
        p = pseudo_observations([[1, 1], [2, 2]])
        with pytest.raises(ChangePointError) as exc:
            partial_derivative_hat(p, 3, [0.5, 0.5])
        assert exc.value.code == "dimension"
