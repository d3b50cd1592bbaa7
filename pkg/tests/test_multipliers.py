import numpy as np
import pytest
from numpy.testing import assert_array_equal

from cpcopula import ChangePointError
from cpcopula.dgp import serial_filter
from cpcopula.multipliers import (
    bandwidth_policy,
    gen_dependent,
    gen_iid,
    half_width,
    ma_weights,
    multiplier_matrix,
    parzen,
    phi_target,
    substream,
    weight_autocorrelation,
)

# phi_target(0.5) from the first quadrature run, cross-checked by a dense Riemann sum
PHI_HALF = 0.049668874172185434


class TestParzen:
    @pytest.mark.parametrize("x, want", [(0.0, 1.0), (0.5, 0.25), (1.0, 0.0), (-0.5, 0.25), (1.7, 0.0)])
    def test_values(self, x, want):
        assert parzen(x) == pytest.approx(want, abs=1e-15)

    def test_continuity_at_half(self):
        eps = 1e-9
        assert abs(parzen(0.5 - eps) - parzen(0.5 + eps)) < 1e-8

    def test_vectorized(self):
        assert_array_equal(parzen(np.array([0.0, 1.0])), [1.0, 0.0])


class TestPhi:
    def test_normalized(self):
        assert phi_target(0.0) == pytest.approx(1.0, abs=1e-8)

    def test_support(self):
        assert phi_target(1.2) == 0.0
        assert abs(phi_target(1.0)) < 1e-8

    def test_symmetric(self):
        for x in (0.1, 0.37, 0.5, 0.9):
            assert phi_target(x) == pytest.approx(phi_target(-x), abs=1e-8)

    def test_half_regression(self):
        val = phi_target(0.5)
        assert 0 < val < 1
        assert val == pytest.approx(PHI_HALF, abs=1e-8)


class TestWeights:
    @pytest.mark.parametrize("ell", [1, 2, 3, 5, 10, 17])
    def test_unit_norm(self, ell):
        assert abs(np.sum(ma_weights(ell) ** 2) - 1) <= 1e-12

    @pytest.mark.parametrize("ell", [1, 2, 5, 10, 17])
    def test_exact_span(self, ell):
        w = ma_weights(ell)
        nonzero = np.flatnonzero(w)
        span = nonzero[-1] - nonzero[0]
        # lags at or beyond the span of nonzero weights are exactly uncorrelated
        assert span <= ell - 1
        assert np.all(weight_autocorrelation(ell, np.arange(span + 1, span + 20)) == 0.0)
        if span > 0:
            assert weight_autocorrelation(ell, span)[0] > 0

    def test_half_width(self):
        assert [half_width(e) for e in (1, 2, 3, 10, 11)] == [0, 1, 1, 5, 5]

    def test_bad_bandwidth(self):
        with pytest.raises(ChangePointError) as exc:
            gen_dependent(10, 0, 0)
        assert exc.value.code == "bandwidth"


class TestGenerators:
    def test_iid_single(self):
        assert np.isfinite(gen_iid(1, 0).xi).all()

    def test_iid_moments(self):
        xi = gen_iid(100_000, 3).xi
        assert abs(xi.mean()) < 4 / np.sqrt(xi.size)
        assert abs(xi.var() - 1) < 0.05

    def test_reproducible(self):
        assert_array_equal(gen_iid(50, 9).xi, gen_iid(50, 9).xi)
        assert_array_equal(gen_dependent(50, 4, 9).xi, gen_dependent(50, 4, 9).xi)

    def test_ell_one_is_iid(self):
        a = gen_dependent(20, 1, 5).xi
        b = np.random.default_rng(5).standard_normal(20)
        assert_array_equal(a, b)

    def test_matrix_rows_are_substreams(self):
        m = multiplier_matrix(30, 4, "dependent", 3, 11)
        row = gen_dependent(30, 3, np.random.default_rng(substream(11, 2))).xi
        assert_array_equal(m[2], row)

    def test_substream_independent_of_order(self):
        a = np.random.default_rng(substream(5, 3, 1)).standard_normal(3)
        substream(5, 0)
        b = np.random.default_rng(substream(5, 3, 1)).standard_normal(3)
        assert_array_equal(a, b)


class TestBandwidthPolicy:
    def test_fixed(self):
        assert bandwidth_policy(np.zeros((5, 2)), 5) == 5

    def test_iid(self, rng):
        ell = bandwidth_policy(rng.standard_normal((256, 2)))
        assert 1 <= ell <= 8

    def test_grows_with_autocorrelation(self, rng):
        iid, ar = [], []
        for _ in range(100):
            eps = rng.standard_normal((357, 2))
            iid.append(bandwidth_policy(eps[-256:]))
            ar.append(bandwidth_policy(serial_filter(eps, "ar1")[-256:]))
        assert np.mean(ar) > np.mean(iid)

    def test_bad_mode(self):
        with pytest.raises(ChangePointError):
            bandwidth_policy(np.zeros((5, 2)), "wide")
