"""Numba kernels for the per-window copula and influence computations."""
import numpy as np
from numba import njit


@njit(cache=True)
def block_copula(v, points):
    """Fraction of rows of ``v`` dominated componentwise by each row of ``points``."""
    m, d = v.shape
    q = points.shape[0]
    out = np.zeros(q)
    for a in range(q):
        c = 0
        for i in range(m):
            ok = True
            for j in range(d):
                if v[i, j] > points[a, j]:
                    ok = False
                    break
            if ok:
                c += 1
        out[a] = c / m
    return out


@njit(cache=True)
def block_influence(v, points, h):
    """Window copula at ``points`` and the ``(m, q)`` influence matrix.

    ``infl[i, a] = 1(v_i <= p_a) - sum_j deriv_j(p_a) 1(v_ij <= p_aj)`` where
    ``deriv_j`` is the clamped central difference of the window copula.
    """
    m, d = v.shape
    q = points.shape[0]
    le = np.empty((m, d), dtype=np.bool_)
    cop = np.empty(q)
    infl = np.empty((m, q))
    deriv = np.empty(d)
    up_cnt = np.empty(d, dtype=np.int64)
    lo_cnt = np.empty(d, dtype=np.int64)
    for a in range(q):
        for j in range(d):
            up_cnt[j] = 0
            lo_cnt[j] = 0
        c = 0
        for i in range(m):
            cnt = 0
            for j in range(d):
                le[i, j] = v[i, j] <= points[a, j]
                if le[i, j]:
                    cnt += 1
            if cnt == d:
                c += 1
            for j in range(d):
                if cnt - le[i, j] == d - 1:
                    up = min(points[a, j] + h, 1.0)
                    lo = max(points[a, j] - h, 0.0)
                    if v[i, j] <= up:
                        up_cnt[j] += 1
                    if v[i, j] <= lo:
                        lo_cnt[j] += 1
        cop[a] = c / m
        for j in range(d):
            up = min(points[a, j] + h, 1.0)
            lo = max(points[a, j] - h, 0.0)
            deriv[j] = (up_cnt[j] - lo_cnt[j]) / (m * (up - lo))
        for i in range(m):
            cnt = 0
            for j in range(d):
                if le[i, j]:
                    cnt += 1
            val = 1.0 if cnt == d else 0.0
            for j in range(d):
                if le[i, j]:
                    val -= deriv[j]
            infl[i, a] = val
    return cop, infl


@njit(cache=True)
def cumulative_sup(xis, infl):
    """Per replicate, ``max_k sum_v (G_k[v] - (k/n) G_n[v])**2`` with ``G_k = sum_{i<k} xi_i infl[i]``.

    Unnormalized: the caller divides by ``n * q``.
    """
    n_rep, n = xis.shape
    q = infl.shape[1]
    out = np.zeros(n_rep)
    g = np.empty(q)
    total = np.empty(q)
    for r in range(n_rep):
        for v in range(q):
            g[v] = 0.0
            total[v] = 0.0
        for i in range(n):
            w = xis[r, i]
            for v in range(q):
                total[v] += w * infl[i, v]
        best = 0.0
        for k in range(1, n):
            w = xis[r, k - 1]
            lam = k / n
            s = 0.0
            for v in range(q):
                g[v] += w * infl[k - 1, v]
                dev = g[v] - lam * total[v]
                s += dev * dev
            if s > best:
                best = s
        out[r] = best
    return out
