import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal
from scipy import stats

from cpcopula import ChangePointError
from cpcopula.dgp import (
    CopulaSpec,
    KhoudrajiSpec,
    ScenarioSpec,
    make_scenario,
    param_to_tau,
    sample_copula,
    serial_filter,
    tau_to_param,
)
from cpcopula.multipliers import lag1_autocorrelation

N_BIG = 100_000


def ks_ok(col):
    return stats.kstest(col, "uniform").statistic <= 1.36 / math.sqrt(col.size)


class TestTauToParam:
    def test_clayton(self):
        assert tau_to_param("clayton", 0.5) == pytest.approx(2.0)

    def test_normal(self):
        assert tau_to_param("normal", 0.5) == pytest.approx(math.sin(math.pi / 4))

    def test_gumbel(self):
        assert tau_to_param("gumbel", 0.5) == pytest.approx(2.0)

    @pytest.mark.parametrize("tau", [-0.6, -0.1, 0.1, 0.5, 0.8])
    def test_frank_roundtrip(self, tau):
        assert param_to_tau("frank", tau_to_param("frank", tau)) == pytest.approx(tau, abs=1e-9)

    def test_out_of_range(self):
        with pytest.raises(ChangePointError) as exc:
            tau_to_param("clayton", -0.2)
        assert exc.value.code == "tau-range"

    def test_zero_tau_is_independence(self):
        assert CopulaSpec.from_tau("clayton", 0.0).family == "independence"
        assert CopulaSpec.from_tau("gumbel", 0.0).family == "independence"


@pytest.mark.parametrize("family, tau", [
    ("clayton", 0.5), ("gumbel", 0.5), ("normal", 0.5), ("normal", -0.3),
    ("frank", 0.4), ("frank", -0.4), ("independence", 0.0),
])
def test_sampler_tau_and_margins(family, tau):
    spec = CopulaSpec.from_tau(family, tau)
    u = sample_copula(spec, N_BIG, np.random.default_rng(8))
    assert u.shape == (N_BIG, 2)
    assert abs(stats.kendalltau(u[:, 0], u[:, 1]).statistic - tau) < 0.01
    assert ks_ok(u[:, 0]) and ks_ok(u[:, 1])


@pytest.mark.parametrize("family", ["clayton", "gumbel", "normal", "frank"])
def test_sampler_three_dims(family):
    u = CopulaSpec.from_tau(family, 0.4, d=3).sample(20_000, np.random.default_rng(2))
    for a, b in [(0, 1), (0, 2), (1, 2)]:
        assert abs(stats.kendalltau(u[:, a], u[:, b]).statistic - 0.4) < 0.02


def test_sampler_reproducible():
    spec = CopulaSpec.from_tau("gumbel", 0.3)
    assert_array_equal(spec.sample(50, 4), spec.sample(50, 4))


class TestKhoudraji:
    def test_asymmetric(self):
        c = CopulaSpec.from_tau("gumbel", 0.75)
        u = KhoudrajiSpec(c, c, 0.8, 0.5).sample(N_BIG, np.random.default_rng(1))
        grid = np.linspace(0.1, 0.9, 9)
        z = []
        for s in grid:
            for t in grid:
                diff = ((u[:, 0] <= s) & (u[:, 1] <= t)).astype(float) - ((u[:, 0] <= t) & (u[:, 1] <= s))
                if diff.any():
                    z.append(abs(diff.mean()) / (diff.std() / math.sqrt(N_BIG)))
        # a symmetric copula keeps all 81 z-scores small; 5 is far above their null maximum
        assert max(z) > 5

    def test_equal_shapes_symmetric(self):
        c = CopulaSpec.from_tau("gumbel", 0.75)
        u = KhoudrajiSpec(c, c, 0.6, 0.6).sample(N_BIG, np.random.default_rng(1))
        diff = ((u[:, 0] <= 0.3) & (u[:, 1] <= 0.7)).astype(float) - ((u[:, 0] <= 0.7) & (u[:, 1] <= 0.3))
        assert abs(diff.mean()) / (diff.std() / math.sqrt(N_BIG)) < 4

    def test_margins_uniform(self):
        spec = KhoudrajiSpec(CopulaSpec.from_tau("clayton", 0.5), CopulaSpec.from_tau("gumbel", 0.5))
        u = spec.sample(N_BIG, np.random.default_rng(2))
        assert ks_ok(u[:, 0]) and ks_ok(u[:, 1])

    def test_bad_shape(self):
        with pytest.raises(ChangePointError):
            KhoudrajiSpec(CopulaSpec("independence"), CopulaSpec("independence"), 0.0, 0.5)


class TestSerialFilter:
    def test_ar1_by_hand(self):
        out = serial_filter(np.ones((103, 1)), "ar1", keep_burn_in=True)
        assert_allclose(out[:3, 0], [1.0, 1.5, 1.75])

    def test_expar_at_zero(self):
        eps = np.zeros((103, 2))
        eps[-1] = [0.7, -0.2]
        out = serial_filter(eps, "expar")
        assert_allclose(out[-1], 0.1 * eps[-1])

    def test_drops_burn_in(self):
        assert serial_filter(np.zeros((111, 2)), "ar1").shape == (10, 2)

    def test_too_short(self):
        with pytest.raises(ChangePointError) as exc:
            serial_filter(np.zeros((50, 2)), "ar1")
        assert exc.value.code == "burn-in"

    def test_pure(self, rng):
        eps = rng.standard_normal((200, 2))
        before = eps.copy()
        assert_array_equal(serial_filter(eps, "expar"), serial_filter(eps, "expar"))
        assert_array_equal(eps, before)

    def test_ar1_autocorrelation(self, rng):
        out = serial_filter(rng.standard_normal((N_BIG + 101, 1)), "ar1")
        assert abs(lag1_autocorrelation(out)[0] - 0.5) < 0.05


class TestScenario:
    def test_break_range(self):
        cop = CopulaSpec.from_tau("normal", 0.2)
        with pytest.raises(ChangePointError) as exc:
            ScenarioSpec(100, cop, cop, 1.2)
        assert exc.value.code == "break-range"

    def test_copula_break_position(self):
        spec = ScenarioSpec(4000, CopulaSpec("independence"), CopulaSpec.from_tau("normal", 0.7), 0.25)
        x = make_scenario(spec, 3)
        k = spec.k_break
        assert k == 1000
        before = stats.kendalltau(x[:k, 0], x[:k, 1]).statistic
        after = stats.kendalltau(x[k:, 0], x[k:, 1]).statistic
        assert abs(before) < 0.06 and abs(after - 0.7) < 0.04

    def test_margin_shift(self):
        spec = ScenarioSpec(4000, CopulaSpec("independence"), break_fraction=0.5, margin_shift=(0, 2.0))
        x = make_scenario(spec, 4)
        assert abs(x[2000:, 0].mean() - x[:2000, 0].mean() - 2.0) < 0.15
        assert abs(x[2000:, 1].mean() - x[:2000, 1].mean()) < 0.15

    def test_serial_shape_and_determinism(self):
        spec = ScenarioSpec(60, CopulaSpec.from_tau("clayton", 0.3), serial="expar")
        a, b = make_scenario(spec, 9), make_scenario(spec, 9)
        assert a.shape == (60, 2)
        assert_array_equal(a, b)

    def test_to_dict(self):
        spec = ScenarioSpec(50, CopulaSpec.from_tau("gumbel", 0.5), serial="ar1")
        d = spec.to_dict()
        assert d["n"] == 50 and d["serial"] == "ar1"
        assert d["copula"]["family"] == "gumbel"
