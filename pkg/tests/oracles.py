"""Brute-force reference implementations written directly from the definitions.

Nothing here imports the package; loops are plain Python over lists so the
code path is independent of the vectorized library routines.
"""
import math


def ranks(col, k, l):
    """Maximal ranks of col[k..l] (1-based, inclusive) inside that window."""
    win = col[k - 1:l]
    return [sum(1 for y in win if y <= v) for v in win]


def pobs(rows, k, l, scaling="lk1"):
    m = l - k + 1
    if m <= 0:
        return []
    den = m + 1 if scaling == "lk2" else m
    d = len(rows[0])
    cols = [ranks([r[j] for r in rows], k, l) for j in range(d)]
    return [tuple(cols[j][i] / den for j in range(d)) for i in range(m)]


def ecdf(points, u):
    if not points:
        return 0.0
    hits = sum(1 for p in points if all(pj <= uj for pj, uj in zip(p, u)))
    return hits / len(points)


def d_n(rows, k, u, scaling="lk1"):
    n = len(rows)
    left = ecdf(pobs(rows, 1, k, scaling), u)
    right = ecdf(pobs(rows, k + 1, n, scaling), u)
    return math.sqrt(n) * (k / n) * ((n - k) / n) * (left - right)


def d_n_r(rows, k, u, scaling="lk1"):
    n = len(rows)
    full = pobs(rows, 1, n, scaling)
    left = ecdf(full[:k], u)
    right = ecdf(full[k:], u)
    return math.sqrt(n) * (k / n) * ((n - k) / n) * (left - right)


def s_nk(rows, k, scaling="lk1", r=False):
    n = len(rows)
    f = d_n_r if r else d_n
    return sum(f(rows, k, u, scaling) ** 2 for u in pobs(rows, 1, n, scaling)) / n


def s_n(rows, scaling="lk1", r=False):
    """(trajectory, max, smallest argmax 1-based)."""
    traj = [s_nk(rows, k, scaling, r) for k in range(1, len(rows))]
    best = max(traj)
    return traj, best, traj.index(best) + 1


def derivative(points, j, u):
    """Clamped central difference of the empirical copula of ``points`` in coordinate j (0-based)."""
    m = len(points)
    h = min(m ** -0.5, 0.5)
    up = list(u)
    lo = list(u)
    up[j] = min(u[j] + h, 1.0)
    lo[j] = max(u[j] - h, 0.0)
    return (ecdf(points, up) - ecdf(points, lo)) / (up[j] - lo[j])


def _unit(u, j):
    out = [1.0] * len(u)
    out[j] = u[j]
    return out


def hat_b(rows, xi, ks, kt, u, scaling="lk1"):
    n = len(rows)
    full = pobs(rows, 1, n, scaling)
    c = ecdf(full, u)
    tot = 0.0
    for i in range(ks, kt):
        ind = 1.0 if all(a <= b for a, b in zip(full[i], u)) else 0.0
        tot += xi[i] * (ind - c)
    return tot / math.sqrt(n)


def check_b_first_form(rows, xi, ks, kt, u, scaling="lk1"):
    """Window-rank process with the window copula subtracted inside the sum."""
    n = len(rows)
    if ks == kt:
        return 0.0
    win = pobs(rows, ks + 1, kt, scaling)
    c = ecdf(win, u)
    tot = 0.0
    for a, i in enumerate(range(ks, kt)):
        ind = 1.0 if all(p <= q for p, q in zip(win[a], u)) else 0.0
        tot += xi[i] * (ind - c)
    return tot / math.sqrt(n)


def check_b_second_form(rows, xi, ks, kt, u, scaling="lk1"):
    """Window-rank process with centered multipliers."""
    n = len(rows)
    if ks == kt:
        return 0.0
    win = pobs(rows, ks + 1, kt, scaling)
    mean = sum(xi[ks:kt]) / (kt - ks)
    tot = 0.0
    for a, i in enumerate(range(ks, kt)):
        ind = 1.0 if all(p <= q for p, q in zip(win[a], u)) else 0.0
        tot += (xi[i] - mean) * ind
    return tot / math.sqrt(n)


def _hat_c(rows, xi, ks, kt, u, full, scaling):
    d = len(u)
    val = hat_b(rows, xi, ks, kt, u, scaling)
    for j in range(d):
        val -= derivative(full, j, u) * hat_b(rows, xi, ks, kt, _unit(u, j), scaling)
    return val


def _check_c(rows, xi, ks, kt, u, scaling):
    if ks == kt:
        return 0.0
    win = pobs(rows, ks + 1, kt, scaling)
    val = check_b_first_form(rows, xi, ks, kt, u, scaling)
    for j in range(len(u)):
        val -= derivative(win, j, u) * check_b_first_form(rows, xi, ks, kt, _unit(u, j), scaling)
    return val


def replicate(rows, xi, variant, scaling="lk1"):
    """Sup over splits of the mean squared replicate difference process."""
    n = len(rows)
    full = pobs(rows, 1, n, scaling)
    best = 0.0
    for k in range(1, n):
        lam = k / n
        tot = 0.0
        for u in full:
            if variant == "hat":
                v = _hat_c(rows, xi, 0, k, u, full, scaling) - lam * _hat_c(rows, xi, 0, n, u, full, scaling)
            elif variant == "r":
                v = hat_b(rows, xi, 0, k, u, scaling) - lam * hat_b(rows, xi, 0, n, u, scaling)
            else:
                v = (1 - lam) * _check_c(rows, xi, 0, k, u, scaling) - lam * _check_c(rows, xi, k, n, u, scaling)
            tot += v * v
        best = max(best, tot / n)
    return best
