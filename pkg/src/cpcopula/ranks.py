"""Window-restricted ranks, pseudo-observations and empirical copulas.

Public functions take 1-based inclusive windows ``(k, l)``; an empty window
is written ``k = l + 1``. Internally everything is 0-based and half-open.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._errors import ChangePointError

SCALINGS = ("lk1", "lk2")


def check_sample(x, min_rows=2):
    """Validate an ``(n, d)`` sample and return it as a float array."""
    try:
        x = np.asarray(x, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ChangePointError("invalid-data", str(exc)) from None
    if x.ndim != 2:
        raise ChangePointError("invalid-data", f"expected a 2-d array, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ChangePointError("invalid-data", "sample contains non-finite values")
    if x.shape[0] < min_rows:
        raise ChangePointError("too-short", f"need at least {min_rows} rows, got {x.shape[0]}")
    return x


def check_scaling(scaling):
    if scaling not in SCALINGS:
        raise ChangePointError("scaling", f"scaling must be one of {SCALINGS}, got {scaling!r}")
    return scaling


def denominator(m, scaling):
    """Rank divisor for a window of length ``m``."""
    return m + 1 if check_scaling(scaling) == "lk2" else m


def window_ranks(x, start, stop):
    """Maximal ranks of rows ``start:stop`` of ``x`` within that block (0-based).

    Returns an integer array of shape ``(stop - start, d)``.
    """
    block = x[start:stop]
    srt = np.sort(block, axis=0)
    out = np.empty(block.shape, dtype=np.int64)
    for j in range(block.shape[1]):
        out[:, j] = np.searchsorted(srt[:, j], block[:, j], side="right")
    return out


def _check_window(n, k, l):
    if k < 1 or l > n or k > l + 1:
        raise ChangePointError("window", f"window ({k}, {l}) is not valid for n={n}")


def ranks_in_window(column, k, l):
    """Maximal ranks of ``column[k..l]`` (1-based, inclusive) within the window.

    The rank of ``x_i`` is ``#{t in [k, l] : x_t <= x_i}``, so tied values all
    receive the largest rank of their group.

    Examples
    --------
    >>> ranks_in_window([3.1, 1.2, 2.5], 1, 3).tolist()
    [3, 1, 2]
    >>> ranks_in_window([1.0, 1.0, 2.0], 1, 3).tolist()
    [2, 2, 3]
    """
    column = np.asarray(column, dtype=float)
    if column.ndim != 1:
        raise ChangePointError("invalid-data", "expected a 1-d column")
    if k > l:
        raise ChangePointError("empty-window", f"window ({k}, {l}) is empty")
    _check_window(column.shape[0], k, l)
    if not np.all(np.isfinite(column[k - 1:l])):
        raise ChangePointError("invalid-data", "column contains non-finite values")
    return window_ranks(column[:, None], k - 1, l)[:, 0]


@dataclass(frozen=True)
class PseudoObs:
    """Rescaled window ranks.

    Attributes
    ----------
    window : tuple of int
        1-based inclusive ``(k, l)``.
    values : ndarray of shape (l - k + 1, d)
        Ranks divided by ``l - k + 1`` (``"lk1"``) or ``l - k + 2`` (``"lk2"``).
    scaling : str
    """

    window: tuple
    values: np.ndarray
    scaling: str = "lk1"

    @property
    def size(self):
        return self.values.shape[0]

    @property
    def dim(self):
        return self.values.shape[1]


def pseudo_observations(x, k=1, l=None, scaling="lk1"):
    """Pseudo-observations of rows ``k..l`` of the sample, ranked within the window."""
    x = check_sample(x, min_rows=1)
    n = x.shape[0]
    l = n if l is None else l
    if k > l:
        raise ChangePointError("empty-window", f"window ({k}, {l}) is empty")
    _check_window(n, k, l)
    m = l - k + 1
    values = window_ranks(x, k - 1, l) / denominator(m, scaling)
    return PseudoObs((k, l), values, scaling)


def empty_pseudo_observations(d, k, scaling="lk1"):
    """The empty window ``(k, k - 1)``; its empirical copula is identically 0."""
    return PseudoObs((k, k - 1), np.empty((0, d)), scaling)


def _as_points(u, d):
    u = np.asarray(u, dtype=float)
    single = u.ndim == 1
    u = np.atleast_2d(u)
    if u.shape[1] != d:
        raise ChangePointError("dimension", f"points must have {d} coordinates")
    if np.any(u < 0) or np.any(u > 1) or not np.all(np.isfinite(u)):
        raise ChangePointError("domain", "points must lie in [0, 1]^d")
    return u, single


def copula_at(values, points):
    """Empirical distribution of the rows of ``values`` at each row of ``points``."""
    if values.shape[0] == 0:
        return np.zeros(points.shape[0])
    below = np.all(values[:, None, :] <= points[None, :, :], axis=2)
    return below.mean(axis=0)


def empirical_copula(p, u):
    """Empirical copula of a window evaluated at ``u`` (a point or rows of points).

    Returns 0 for an empty window.
    """
    pts, single = _as_points(u, p.values.shape[1])
    out = copula_at(p.values, pts)
    return float(out[0]) if single else out


def empirical_copula_fullrank(p_full, k, l, u):
    """Empirical distribution of the full-sample pseudo-observations in rows ``k..l``.

    ``p_full`` must be the pseudo-observations of the whole sample, window ``(1, n)``.
    """
    n = p_full.size
    if p_full.window != (1, n):
        raise ChangePointError("window", "p_full must cover the complete sample")
    _check_window(n, k, l)
    pts, single = _as_points(u, p_full.dim)
    out = copula_at(p_full.values[k - 1:l], pts)
    return float(out[0]) if single else out


def fd_bandwidth(m):
    """Finite-difference bandwidth ``min(m**-0.5, 1/2)`` for a window of length ``m``."""
    return min(m ** -0.5, 0.5)


def partial_derivative_hat(p, j, u):
    """Finite-difference estimate of the ``j``-th partial derivative (``j`` is 1-based).

    Evaluation points are clamped to [0, 1] in coordinate ``j`` and the divisor is
    the length of the clamped interval, so the estimate lies in ``[0, 1/h]``.
    """
    d = p.dim
    if not 1 <= j <= d:
        raise ChangePointError("dimension", f"j must be in 1..{d}, got {j}")
    if p.size == 0:
        raise ChangePointError("empty-window", "derivative needs a nonempty window")
    pts, single = _as_points(u, d)
    h = fd_bandwidth(p.size)
    up, lo = pts.copy(), pts.copy()
    up[:, j - 1] = np.minimum(pts[:, j - 1] + h, 1.0)
    lo[:, j - 1] = np.maximum(pts[:, j - 1] - h, 0.0)
    out = (copula_at(p.values, up) - copula_at(p.values, lo)) / (up[:, j - 1] - lo[:, j - 1])
    return float(out[0]) if single else out
