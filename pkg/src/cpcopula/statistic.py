"""Difference processes, Cramér-von Mises aggregation and the change-point estimate.

The integral against the full-sample empirical copula is an average over the
``n`` full-sample pseudo-observations, since that measure is atomic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._errors import ChangePointError
from ._kernels import block_copula, block_influence
from .ranks import (
    check_sample,
    check_scaling,
    copula_at,
    denominator,
    fd_bandwidth,
    window_ranks,
)


@dataclass(frozen=True)
class StatTrajectory:
    """Per-split statistics ``S_{n,k}`` for ``k = 1..n-1`` and their maximum.

    ``k_star`` is the smallest maximizing split (1-based).
    """

    values: np.ndarray
    statistic: float
    k_star: int

    @classmethod
    def from_values(cls, values):
        values = np.asarray(values, dtype=float)
        k = int(np.argmax(values))
        return cls(values, float(values[k]), k + 1)


def lambda_weight(n, k_s, k_t):
    """``(k_t - k_s) / n``, the fraction of observations between two split points."""
    return (k_t - k_s) / n


def full_pseudo_obs(x, scaling):
    n = x.shape[0]
    return window_ranks(x, 0, n) / denominator(n, scaling)


def window_block(x, start, stop, points, scaling, influence=False):
    """Empirical copula of rows ``start:stop`` at ``points``, plus optional influence matrix.

    With ``influence=True`` also returns the ``(m, q)`` matrix

        1(V_i <= u_v) - sum_j dC_j(u_v) 1(V_ij <= u_vj)

    where ``V`` are the window pseudo-observations and ``dC_j`` the window's
    finite-difference derivative estimates. A multiplier replicate for this
    window is then a single product ``(xi - mean(xi)) @ influence``.
    """
    m = stop - start
    q, d = points.shape
    if m == 0:
        return np.zeros(q), (np.zeros((0, q)) if influence else None)
    v = window_ranks(x, start, stop) / denominator(m, scaling)
    if not influence:
        return block_copula(v, points), None
    return block_influence(v, points, fd_bandwidth(m))


def _check_split(n, k, lo=0, hi=None):
    hi = n if hi is None else hi
    if not lo <= k <= hi:
        raise ChangePointError("split-range", f"split k={k} outside [{lo}, {hi}] for n={n}")


def _points(u, d):
    u = np.atleast_2d(np.asarray(u, dtype=float))
    if u.shape[1] != d:
        raise ChangePointError("dimension", f"points must have {d} coordinates")
    if np.any(u < 0) or np.any(u > 1):
        raise ChangePointError("domain", "points must lie in [0, 1]^d")
    return u


def difference_process(x, k, u, scaling="lk1"):
    """Weighted difference of the before/after-split empirical copulas at ``u``.

    Subsample copulas use ranks computed within each subsample. Vanishes for
    ``k`` in ``{0, n}``.
    """
    x = check_sample(x)
    check_scaling(scaling)
    n, d = x.shape
    _check_split(n, k)
    pts = _points(u, d)
    left, _ = window_block(x, 0, k, pts, scaling)
    right, _ = window_block(x, k, n, pts, scaling)
    out = np.sqrt(n) * (k / n) * ((n - k) / n) * (left - right)
    return float(out[0]) if np.ndim(u) == 1 else out


def difference_process_r(x, k, u, scaling="lk1"):
    """Like :func:`difference_process` but with ranks taken in the complete sample."""
    x = check_sample(x)
    check_scaling(scaling)
    n, d = x.shape
    _check_split(n, k)
    pts = _points(u, d)
    full = full_pseudo_obs(x, scaling)
    left = copula_at(full[:k], pts)
    right = copula_at(full[k:], pts)
    out = np.sqrt(n) * (k / n) * ((n - k) / n) * (left - right)
    return float(out[0]) if np.ndim(u) == 1 else out


def _cvm(n, k, left, right):
    diff = np.sqrt(n) * (k / n) * ((n - k) / n) * (left - right)
    return float(np.mean(diff ** 2))


def cvm_at_k(x, k, scaling="lk1"):
    """Cramér-von Mises functional of the difference process at split ``k``."""
    x = check_sample(x)
    check_scaling(scaling)
    n = x.shape[0]
    _check_split(n, k, 1, n - 1)
    pts = full_pseudo_obs(x, scaling)
    left, _ = window_block(x, 0, k, pts, scaling)
    right, _ = window_block(x, k, n, pts, scaling)
    return _cvm(n, k, left, right)


def statistic_sn(x, scaling="lk1"):
    """Maximum over splits of the within-subsample-rank statistic."""
    x = check_sample(x)
    check_scaling(scaling)
    n = x.shape[0]
    pts = full_pseudo_obs(x, scaling)
    values = np.empty(n - 1)
    for k in range(1, n):
        left, _ = window_block(x, 0, k, pts, scaling)
        right, _ = window_block(x, k, n, pts, scaling)
        values[k - 1] = _cvm(n, k, left, right)
    return StatTrajectory.from_values(values)


def full_indicator(pts):
    """``ind[i, v] = 1(U_i <= U_v)`` for the full-sample pseudo-observations."""
    return np.all(pts[:, None, :] <= pts[None, :, :], axis=2)


def statistic_snr(x, scaling="lk1"):
    """Maximum over splits of the full-sample-rank statistic."""
    x = check_sample(x)
    check_scaling(scaling)
    n = x.shape[0]
    ind = full_indicator(full_pseudo_obs(x, scaling)).astype(float)
    cum = np.cumsum(ind, axis=0)
    total = cum[-1]
    values = np.empty(n - 1)
    for k in range(1, n):
        left = cum[k - 1] / k
        right = (total - cum[k - 1]) / (n - k)
        values[k - 1] = _cvm(n, k, left, right)
    return StatTrajectory.from_values(values)
