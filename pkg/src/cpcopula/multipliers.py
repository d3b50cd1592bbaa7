"""I.i.d. and serially dependent multiplier sequences.

Dependent sequences use a moving average of i.i.d. standard normals with
Parzen-kernel weights, which makes them exactly dependent over a finite span.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, stats

from ._errors import ChangePointError
from .ranks import check_sample, window_ranks

KINDS = ("iid", "dependent")


def parzen(x):
    """Parzen kernel; accepts scalars or arrays."""
    a = np.abs(np.asarray(x, dtype=float))
    out = np.where(a <= 0.5, 1 - 6 * a ** 2 + 6 * a ** 3,
                   np.where(a <= 1.0, 2 * (1 - a) ** 3, 0.0))
    return float(out) if out.ndim == 0 else out


def _self_convolution(y):
    # kernel pieces change formula at +-1/2, +-1 and the same points shifted by y
    y = abs(y)
    if y >= 2:
        return 0.0
    lo, hi = max(-1.0, y - 1.0), min(1.0, y + 1.0)
    brk = sorted({p for p in (-0.5, 0.0, 0.5, y - 0.5, y, y + 0.5) if lo < p < hi})
    val, _ = integrate.quad(lambda t: parzen(t) * parzen(y - t), lo, hi,
                            points=brk or None, epsabs=1e-13, epsrel=1e-13, limit=200)
    return val


def phi_target(x):
    """Correlation profile ``(k * k)(2x) / (k * k)(0)`` induced by the Parzen kernel ``k``."""
    return _self_convolution(2.0 * x) / _self_convolution(0.0)


def half_width(bandwidth):
    """Moving-average half-width for a requested dependence span."""
    if bandwidth < 1:
        raise ChangePointError("bandwidth", f"bandwidth must be >= 1, got {bandwidth}")
    return math.ceil((bandwidth - 1) / 2)


def ma_weights(bandwidth):
    """Unit-norm moving-average weights ``w_j``, ``j = -b..b``."""
    b = half_width(bandwidth)
    if b == 0:
        return np.ones(1)
    w = parzen(np.arange(-b, b + 1) / b)
    return w / np.sqrt(np.sum(w ** 2))


def weight_autocorrelation(bandwidth, lags):
    """Exact lag-``h`` correlation ``sum_j w_j w_{j+h}`` of the dependent sequence."""
    w = ma_weights(bandwidth)
    lags = np.abs(np.atleast_1d(lags))
    return np.array([np.dot(w[:len(w) - h], w[h:]) if h < len(w) else 0.0 for h in lags])


@dataclass(frozen=True)
class MultiplierSeq:
    xi: np.ndarray
    kind: str
    bandwidth: int | None = None


def gen_iid(n, rng):
    """I.i.d. standard normal multipliers."""
    rng = np.random.default_rng(rng)
    return MultiplierSeq(rng.standard_normal(n), "iid")


def gen_dependent(n, bandwidth, rng):
    """Parzen moving-average multipliers with dependence span ``bandwidth``."""
    w = ma_weights(bandwidth)
    rng = np.random.default_rng(rng)
    z = rng.standard_normal(n + len(w) - 1)
    return MultiplierSeq(np.convolve(z, w, mode="valid"), "dependent", int(bandwidth))


def substream(seed, *keys):
    """Child :class:`~numpy.random.SeedSequence` addressed by ``keys``.

    Children are derived from the parent's entropy and spawn key only, so the
    same address always yields the same stream regardless of call order.
    """
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return np.random.SeedSequence(seed.entropy, spawn_key=tuple(seed.spawn_key) + tuple(keys))


def multiplier_matrix(n, n_replicates, kind, bandwidth, seed):
    """``(n_replicates, n)`` array; row ``m`` comes from ``substream(seed, m)``."""
    if kind not in KINDS:
        raise ChangePointError("multiplier", f"kind must be one of {KINDS}, got {kind!r}")
    out = np.empty((n_replicates, n))
    for m in range(n_replicates):
        rng = np.random.default_rng(substream(seed, m))
        if kind == "iid":
            out[m] = gen_iid(n, rng).xi
        else:
            out[m] = gen_dependent(n, bandwidth, rng).xi
    return out


def normal_scores(x):
    x = check_sample(x)
    n = x.shape[0]
    return stats.norm.ppf(window_ranks(x, 0, n) / (n + 1))


def lag1_autocorrelation(z):
    z = z - z.mean(axis=0)
    den = np.sum(z ** 2, axis=0)
    num = np.sum(z[1:] * z[:-1], axis=0)
    return np.divide(num, den, out=np.zeros_like(num), where=den > 0)


def bandwidth_policy(x, mode="auto"):
    """Dependence span for dependent multipliers.

    An integer ``mode`` is returned unchanged. ``"auto"`` uses the heuristic
    ``max(1, round(n**0.25 * (1 + 3 * rho)))`` where ``rho`` is the mean absolute
    lag-1 autocorrelation of the componentwise normal scores; it grows like
    ``n**0.25`` and so stays ``o(sqrt(n))``.
    """
    if mode != "auto":
        try:
            ell = int(mode)
        except (TypeError, ValueError):
            raise ChangePointError("bandwidth", f"bandwidth must be 'auto' or an integer, got {mode!r}") from None
        if ell < 1:
            raise ChangePointError("bandwidth", f"bandwidth must be >= 1, got {ell}")
        return ell
    z = normal_scores(x)
    rho = float(np.mean(np.abs(lag1_autocorrelation(z))))
    n = z.shape[0]
    return max(1, int(math.floor(n ** 0.25 * (1 + 3 * rho) + 0.5)))
