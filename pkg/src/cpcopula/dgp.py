"""Simulation data: copula samplers, serial filters and change-point scenarios."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize, stats

from ._errors import ChangePointError

FAMILIES = ("clayton", "gumbel", "normal", "frank", "independence")
SERIAL_MODELS = ("iid", "ar1", "expar")
BURN_IN = 100

# below this |theta| a Frank copula is treated as independence
_FRANK_EPS = 1e-8
# keeps normal scores finite when a sampler rounds to 0 or 1
_U_EPS = 1e-16


def debye1(theta):
    """First Debye function ``(1/theta) int_0^theta t / (e^t - 1) dt``."""
    if theta == 0:
        return 1.0
    f = lambda t: t / math.expm1(t) if t != 0 else 1.0
    val, _ = integrate.quad(f, 0.0, theta, epsabs=1e-14, epsrel=1e-13, limit=200)
    return val / theta


def frank_tau(theta):
    if abs(theta) < _FRANK_EPS:
        return 0.0
    return 1.0 - 4.0 / theta * (1.0 - debye1(theta))


def tau_to_param(family, tau):
    """Copula parameter with the given Kendall's tau."""
    if family == "independence":
        if tau != 0:
            raise ChangePointError("tau-range", "independence copula has tau = 0")
        return 0.0
    if family == "clayton":
        if not 0 < tau < 1:
            raise ChangePointError("tau-range", f"clayton needs tau in (0, 1), got {tau}")
        return 2 * tau / (1 - tau)
    if family == "gumbel":
        if not 0 <= tau < 1:
            raise ChangePointError("tau-range", f"gumbel needs tau in [0, 1), got {tau}")
        return 1 / (1 - tau)
    if family == "normal":
        if not -1 < tau < 1:
            raise ChangePointError("tau-range", f"normal needs tau in (-1, 1), got {tau}")
        return math.sin(math.pi * tau / 2)
    if family == "frank":
        if tau == 0:
            return 0.0
        lo, hi = (_FRANK_EPS, 50.0) if tau > 0 else (-50.0, -_FRANK_EPS)
        if not frank_tau(lo) < tau < frank_tau(hi):
            raise ChangePointError("tau-range", f"frank tau {tau} not attainable on [-50, 50]")
        return optimize.bisect(lambda t: frank_tau(t) - tau, lo, hi, xtol=1e-10, maxiter=500)
    raise ChangePointError("family", f"unknown family {family!r}")


def param_to_tau(family, param):
    if family == "independence":
        return 0.0
    if family == "clayton":
        return param / (param + 2)
    if family == "gumbel":
        return 1 - 1 / param
    if family == "normal":
        return 2 / math.pi * math.asin(param)
    if family == "frank":
        return frank_tau(param)
    raise ChangePointError("family", f"unknown family {family!r}")


def _positive_stable(alpha, size, rng):
    # Chambers-Mallows-Stuck draw with Laplace transform exp(-s**alpha)
    if alpha == 1:
        return np.ones(size)
    theta = rng.uniform(0, np.pi, size)
    e = rng.exponential(size=size)
    return (np.sin(alpha * theta) / np.sin(theta) ** (1 / alpha)
            * (np.sin((1 - alpha) * theta) / e) ** ((1 - alpha) / alpha))


def _frank_negative_2d(theta, n, rng):
    u = rng.uniform(size=n)
    w = rng.uniform(size=n)
    a = np.exp(-theta * u)
    v = -np.log1p(w * np.expm1(-theta) / (w + (1 - w) * a)) / theta
    return np.column_stack([u, v])


@dataclass(frozen=True)
class CopulaSpec:
    """A parametric copula; build it from Kendall's tau with :meth:`from_tau`."""

    family: str
    param: float = 0.0
    d: int = 2

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ChangePointError("family", f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.d < 2:
            raise ChangePointError("dimension", "copulas need d >= 2")
        p = self.param
        if self.family == "clayton" and not p > 0:
            raise ChangePointError("param", "clayton needs param > 0")
        if self.family == "gumbel" and not p >= 1:
            raise ChangePointError("param", "gumbel needs param >= 1")
        if self.family == "normal" and not -1 < p < 1:
            raise ChangePointError("param", "normal needs param in (-1, 1)")
        if self.family == "normal" and p < -1 / (self.d - 1):
            raise ChangePointError("param", "equicorrelation matrix is not positive definite")
        if self.family == "frank" and p < 0 and self.d != 2:
            raise ChangePointError("param", "negative frank is only available for d = 2")

    @classmethod
    def from_tau(cls, family, tau, d=2):
        if family in ("clayton", "gumbel") and tau == 0:
            family = "independence"
        return cls(family, tau_to_param(family, tau), d)

    @property
    def tau(self):
        return param_to_tau(self.family, self.param)

    def sample(self, n, rng):
        return sample_copula(self, n, rng)

    def to_dict(self):
        return {"family": self.family, "param": self.param, "d": self.d}


def sample_copula(spec, n, rng):
    """``n`` i.i.d. draws from ``spec``; an ``(n, d)`` array in (0, 1)^d."""
    rng = np.random.default_rng(rng)
    fam, p, d = spec.family, spec.param, spec.d
    if fam == "independence" or (fam == "frank" and abs(p) < _FRANK_EPS):
        return rng.uniform(size=(n, d))
    if fam == "normal":
        corr = np.full((d, d), p)
        np.fill_diagonal(corr, 1.0)
        z = rng.standard_normal((n, d)) @ np.linalg.cholesky(corr).T
        return stats.norm.cdf(z)
    if fam == "frank" and p < 0:
        return _frank_negative_2d(p, n, rng)
    # Marshall-Olkin: U_j = psi(E_j / V) with V the frailty of generator psi
    e = rng.exponential(size=(n, d))
    if fam == "clayton":
        v = rng.gamma(1 / p, size=n)
        return (1 + e / v[:, None]) ** (-1 / p)
    if fam == "gumbel":
        v = _positive_stable(1 / p, n, rng)
        return np.exp(-(e / v[:, None]) ** (1 / p))
    # frank, p > 0: log-series frailty
    prob = -math.expm1(-p)
    if prob >= 1:
        raise ChangePointError("param", f"frank parameter {p} too large to sample")
    v = rng.logseries(prob, size=n).astype(float)
    return -np.log1p(np.exp(-e / v[:, None]) * math.expm1(-p)) / p


@dataclass(frozen=True)
class KhoudrajiSpec:
    """Asymmetric bivariate copula ``C1(u**(1-a), v**(1-b)) * C2(u**a, v**b)``."""

    c1: CopulaSpec
    c2: CopulaSpec
    a: float = 0.8
    b: float = 0.5

    def __post_init__(self):
        if self.c1.d != 2 or self.c2.d != 2:
            raise ChangePointError("dimension", "khoudraji combination is bivariate")
        if not (0 < self.a <= 1 and 0 < self.b <= 1):
            raise ChangePointError("param", "shape parameters must lie in (0, 1]")

    @property
    def d(self):
        return 2

    def sample(self, n, rng):
        return khoudraji_sample(self.c1, self.c2, (self.a, self.b), n, rng)

    def to_dict(self):
        return {"family": "khoudraji", "c1": self.c1.to_dict(), "c2": self.c2.to_dict(),
                "a": self.a, "b": self.b}


def khoudraji_sample(c1, c2, shapes, n, rng):
    """Componentwise maximum of power-transformed draws from ``c1`` and ``c2``."""
    if c1.d != 2 or c2.d != 2:
        raise ChangePointError("dimension", "khoudraji combination is bivariate")
    rng = np.random.default_rng(rng)
    shapes = np.asarray(shapes, dtype=float)
    first = sample_copula(c1, n, rng)
    second = sample_copula(c2, n, rng)
    out = second ** (1 / shapes)
    keep = shapes < 1
    if np.any(keep):
        out[:, keep] = np.maximum(out[:, keep], first[:, keep] ** (1 / (1 - shapes[keep])))
    return out


def serial_filter(innovations, model, keep_burn_in=False):
    """Run the AR(1) or EXPAR recursion over innovation rows ``i = -100..n``.

    The first row initializes the process; rows ``-100..0`` are burn-in and
    dropped unless ``keep_burn_in`` is set. ``model="iid"`` returns rows
    ``1..n`` unchanged.
    """
    eps = np.asarray(innovations, dtype=float)
    if eps.ndim != 2 or eps.shape[0] < BURN_IN + 2:
        raise ChangePointError("burn-in", f"need at least {BURN_IN + 2} innovation rows")
    if model not in SERIAL_MODELS:
        raise ChangePointError("serial", f"model must be one of {SERIAL_MODELS}, got {model!r}")
    if model == "iid":
        out = eps.copy()
    else:
        out = np.empty_like(eps)
        out[0] = eps[0]
        for i in range(1, eps.shape[0]):
            prev = out[i - 1]
            if model == "ar1":
                out[i] = 0.5 * prev + eps[i]
            else:
                out[i] = (0.8 - 1.1 * np.exp(-50 * prev ** 2)) * prev + 0.1 * eps[i]
    return out if keep_burn_in else out[BURN_IN + 1:]


@dataclass(frozen=True)
class ScenarioSpec:
    """A simulated sample, with an optional copula or margin break at ``floor(n t)``.

    ``copula_after`` switches the copula after the break. ``margin_shift`` is a
    ``(component, mu)`` pair (0-based component) adding ``mu`` to that margin
    after the break. Margins are standard normal.
    """

    n: int
    copula: object
    copula_after: object = None
    break_fraction: float | None = None
    serial: str = "iid"
    margin_shift: tuple | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ChangePointError("too-short", "scenarios need n >= 2")
        if self.serial not in SERIAL_MODELS:
            raise ChangePointError("serial", f"serial must be one of {SERIAL_MODELS}")
        has_break = self.copula_after is not None or self.margin_shift is not None
        if has_break:
            t = self.break_fraction
            if t is None or not 0 < t < 1:
                raise ChangePointError("break-range", f"break fraction must lie in (0, 1), got {t}")
        if self.copula_after is not None and self.copula_after.d != self.copula.d:
            raise ChangePointError("dimension", "copulas before and after the break differ in d")
        if self.margin_shift is not None and not 0 <= self.margin_shift[0] < self.copula.d:
            raise ChangePointError("dimension", "margin_shift component out of range")

    @property
    def d(self):
        return self.copula.d

    @property
    def k_break(self):
        if self.break_fraction is None:
            return None
        return int(math.floor(self.n * self.break_fraction))

    def to_dict(self):
        return {
            "n": self.n,
            "copula": self.copula.to_dict(),
            "copula_after": None if self.copula_after is None else self.copula_after.to_dict(),
            "break_fraction": self.break_fraction,
            "serial": self.serial,
            "margin_shift": None if self.margin_shift is None else list(self.margin_shift),
        }


def make_scenario(spec, rng):
    """Draw an ``(n, d)`` sample realizing ``spec``."""
    rng = np.random.default_rng(rng)
    n = spec.n
    extra = 0 if spec.serial == "iid" else BURN_IN + 1
    total = n + extra
    k = spec.k_break
    if spec.copula_after is None:
        u = spec.copula.sample(total, rng)
    else:
        head = k + extra
        u = np.vstack([spec.copula.sample(head, rng),
                       spec.copula_after.sample(total - head, rng)])
    eps = stats.norm.ppf(np.clip(u, _U_EPS, 1 - _U_EPS))
    x = eps if spec.serial == "iid" else serial_filter(eps, spec.serial)
    if spec.margin_shift is not None:
        comp, mu = spec.margin_shift
        x = x.copy()
        x[k:, comp] += mu
    return x
