"""Multiplier replicates of the change-point statistics and approximate p-values.

Three replicate schemes are available:

``check``
    window-local ranks, centering and derivative estimates for every split;
``hat``
    full-sample ranks with full-sample derivative estimates;
``r``
    full-sample ranks without derivative correction, paired with the
    full-sample-rank statistic.

Every replicate process is linear in the multipliers, so each split reduces
to one matrix product between the ``(M, m)`` multiplier block and an
``(m, n)`` influence matrix that does not depend on the replicate.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from ._errors import ChangePointError
from ._kernels import cumulative_sup
from .multipliers import KINDS, bandwidth_policy, multiplier_matrix
from .ranks import check_sample, check_scaling, denominator, window_ranks
from .statistic import (
    StatTrajectory,
    _cvm,
    full_indicator,
    full_pseudo_obs,
    statistic_snr,
    window_block,
)

VARIANTS = ("check", "hat", "r")

class DegenerateDataWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ReplicateStat:
    value: float
    variant: str
    index: int = 0


@dataclass(frozen=True)
class PValue:
    p: float
    count: int
    n_replicates: int


def _check_range(n, k_s, k_t):
    if not 0 <= k_s <= k_t <= n:
        raise ChangePointError("split-range", f"need 0 <= k_s <= k_t <= n, got ({k_s}, {k_t}) for n={n}")


def _check_xi(xi, n):
    xi = np.asarray(getattr(xi, "xi", xi), dtype=float)
    if xi.shape[-1] != n:
        raise ChangePointError("shape", f"multipliers have length {xi.shape[-1]}, sample has {n} rows")
    return xi


def _eval_points(u, d):
    u = np.atleast_2d(np.asarray(u, dtype=float))
    if u.shape[1] != d:
        raise ChangePointError("dimension", f"points must have {d} coordinates")
    if np.any(u < 0) or np.any(u > 1):
        raise ChangePointError("domain", "points must lie in [0, 1]^d")
    return u


def hat_b(x, xi, k_s, k_t, u, scaling="lk1"):
    """Full-sample-rank multiplier process over rows ``k_s+1..k_t``.

    ``(1/sqrt(n)) sum_i xi_i [1(U_i <= u) - C_{1:n}(u)]`` with ``U`` the
    full-sample pseudo-observations.
    """
    x = check_sample(x)
    n, d = x.shape
    xi = _check_xi(xi, n)
    _check_range(n, k_s, k_t)
    pts = _eval_points(u, d)
    full = full_pseudo_obs(x, scaling)
    ind = np.all(full[:, None, :] <= pts[None, :, :], axis=2).astype(float)
    centered = ind - ind.mean(axis=0)
    out = xi[k_s:k_t] @ centered[k_s:k_t] / np.sqrt(n)
    return float(out[0]) if np.ndim(u) == 1 else out


def check_b(x, xi, k_s, k_t, u, scaling="lk1"):
    """Window-rank multiplier process over rows ``k_s+1..k_t``, centered multipliers.

    ``(1/sqrt(n)) sum_i (xi_i - mean(xi)) 1(V_i <= u)`` where ``V`` are the
    pseudo-observations ranked inside the window.
    """
    x = check_sample(x)
    n, d = x.shape
    xi = _check_xi(xi, n)
    _check_range(n, k_s, k_t)
    pts = _eval_points(u, d)
    if k_s == k_t:
        out = np.zeros(pts.shape[0])
    else:
        v = window_ranks(x, k_s, k_t) / denominator(k_t - k_s, scaling)
        ind = np.all(v[:, None, :] <= pts[None, :, :], axis=2).astype(float)
        w = xi[k_s:k_t]
        out = (w - w.mean()) @ ind / np.sqrt(n)
    return float(out[0]) if np.ndim(u) == 1 else out


def _cumulative_sup(xis, infl, n):
    """``max_k mean_v [G_k - (k/n) G_n]^2`` with ``G_k = n**-0.5 sum_{i<=k} xi_i infl[i]``."""
    raw = cumulative_sup(np.ascontiguousarray(xis, dtype=float), np.ascontiguousarray(infl, dtype=float))
    return raw / (n * infl.shape[1])


def _hat_influence(x, pts, scaling):
    n = x.shape[0]
    _, infl = window_block(x, 0, n, pts, scaling, influence=True)
    return infl - infl.mean(axis=0)


def _r_influence(pts):
    ind = full_indicator(pts).astype(float)
    return ind - ind.mean(axis=0)


def _check_pass(x, pts, xis, scaling):
    """Observed trajectory and check-replicate sups in one sweep over the splits."""
    n, q = x.shape[0], pts.shape[0]
    values = np.empty(n - 1)
    reps = np.zeros(xis.shape[0]) if xis is not None else None
    for k in range(1, n):
        wl, wr = k / n, (n - k) / n
        left, jl = window_block(x, 0, k, pts, scaling, influence=xis is not None)
        right, jr = window_block(x, k, n, pts, scaling, influence=xis is not None)
        values[k - 1] = _cvm(n, k, left, right)
        if xis is None:
            continue
        # sum_i (xi_i - mean xi) J_i == sum_i xi_i (J_i - mean J), so center J once per split
        both = np.vstack([wr * (jl - jl.mean(axis=0)), -wl * (jr - jr.mean(axis=0))])
        dev = xis @ both
        np.maximum(reps, np.einsum("ij,ij->i", dev, dev) / (n * q), out=reps)
    return values, reps


def replicate_stats(x, xis, variant, scaling="lk1"):
    """Replicate statistics for each row of the ``(M, n)`` multiplier array ``xis``."""
    x = check_sample(x)
    check_scaling(scaling)
    n = x.shape[0]
    xis = np.atleast_2d(_check_xi(xis, n))
    pts = full_pseudo_obs(x, scaling)
    if variant == "check":
        return _check_pass(x, pts, xis, scaling)[1]
    if variant == "hat":
        return _cumulative_sup(xis, _hat_influence(x, pts, scaling), n)
    if variant == "r":
        return _cumulative_sup(xis, _r_influence(pts), n)
    raise ChangePointError("variant", f"variant must be one of {VARIANTS}, got {variant!r}")


def replicate_stat(x, xi, variant, scaling="lk1"):
    """Single replicate statistic for one multiplier sequence."""
    n = np.shape(x)[0]
    xi = _check_xi(xi, n)
    if xi.ndim != 1:
        raise ChangePointError("shape", "expected a single multiplier sequence")
    value = replicate_stats(x, xi[None, :], variant, scaling)[0]
    return ReplicateStat(float(value), variant)


def p_value(observed, reps):
    """Fraction of replicates at least as large as ``observed``.

    ``reps`` holds :class:`ReplicateStat` objects or plain numbers.
    """
    reps = list(reps)
    if not reps:
        raise ChangePointError("no-replicates", "p-value needs at least one replicate")
    if isinstance(reps[0], ReplicateStat):
        if len({r.variant for r in reps}) > 1:
            raise ChangePointError("variant-mix", "replicates come from different variants")
        values = np.array([r.value for r in reps])
    else:
        values = np.asarray(reps, dtype=float)
    count = int(np.count_nonzero(values >= observed))
    return PValue(count / len(values), count, len(values))


@dataclass(frozen=True)
class TestConfig:
    """Settings for one change-point test.

    ``bandwidth`` is ``"auto"`` or a positive integer and only matters for
    dependent multipliers. ``seed`` may be an int, a SeedSequence or None
    (fresh entropy, recorded in the result).
    """

    __test__ = False

    variant: str = "check"
    n_replicates: int = 1000
    multiplier: str = "dependent"
    bandwidth: object = "auto"
    scaling: str = "lk1"
    seed: object = None

    def validate(self):
        if self.variant not in VARIANTS:
            raise ChangePointError("variant", f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.multiplier not in KINDS:
            raise ChangePointError("multiplier", f"multiplier must be one of {KINDS}, got {self.multiplier!r}")
        if int(self.n_replicates) < 1:
            raise ChangePointError("no-replicates", "n_replicates must be >= 1")
        check_scaling(self.scaling)
        return self


@dataclass
class TestResult:
    __test__ = False

    variant: str
    statistic: float
    trajectory: StatTrajectory
    replicates: np.ndarray
    p_value: float
    n_replicates: int
    multiplier: str
    bandwidth: int | None
    scaling: str
    seed_entropy: int
    seed_spawn_key: tuple = field(default_factory=tuple)

    @property
    def k_star(self):
        return self.trajectory.k_star


def _seed_sequence(seed):
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def _warn_if_degenerate(x):
    const = [j for j in range(x.shape[1]) if np.all(x[:, j] == x[0, j])]
    if const:
        warnings.warn(f"columns {const} are constant; the statistic is degenerate",
                      DegenerateDataWarning, stacklevel=3)


def run_variants(x, cfg, variants):
    """Run several replicate schemes on one sample with shared multipliers.

    Returns a dict mapping each variant to its :class:`TestResult`. The
    within-subsample statistic is shared by ``check`` and ``hat``.
    """
    x = check_sample(x)
    cfg.validate()
    for v in variants:
        if v not in VARIANTS:
            raise ChangePointError("variant", f"variant must be one of {VARIANTS}, got {v!r}")
    _warn_if_degenerate(x)
    n = x.shape[0]
    seq = _seed_sequence(cfg.seed)
    ell = bandwidth_policy(x, cfg.bandwidth) if cfg.multiplier == "dependent" else None
    xis = multiplier_matrix(n, int(cfg.n_replicates), cfg.multiplier, ell, seq)
    pts = full_pseudo_obs(x, cfg.scaling)

    trajectories, reps = {}, {}
    if "check" in variants or "hat" in variants:
        values, check_reps = _check_pass(x, pts, xis if "check" in variants else None, cfg.scaling)
        traj = StatTrajectory.from_values(values)
        if "check" in variants:
            trajectories["check"], reps["check"] = traj, check_reps
        if "hat" in variants:
            trajectories["hat"] = traj
            reps["hat"] = _cumulative_sup(xis, _hat_influence(x, pts, cfg.scaling), n)
    if "r" in variants:
        trajectories["r"] = statistic_snr(x, cfg.scaling)
        reps["r"] = _cumulative_sup(xis, _r_influence(pts), n)

    out = {}
    for v in variants:
        traj = trajectories[v]
        pv = p_value(traj.statistic, reps[v])
        out[v] = TestResult(
            variant=v,
            statistic=traj.statistic,
            trajectory=traj,
            replicates=reps[v],
            p_value=pv.p,
            n_replicates=pv.n_replicates,
            multiplier=cfg.multiplier,
            bandwidth=ell,
            scaling=cfg.scaling,
            seed_entropy=seq.entropy,
            seed_spawn_key=tuple(seq.spawn_key),
        )
    return out


def run_test(x, cfg=None):
    """Change-point test of ``x`` under ``cfg`` (defaults to :class:`TestConfig`)."""
    cfg = TestConfig() if cfg is None else cfg
    return run_variants(x, cfg, (cfg.variant,))[cfg.variant]
