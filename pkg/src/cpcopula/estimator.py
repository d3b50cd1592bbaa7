"""scikit-learn style wrappers around the test and the pseudo-observation map."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .bootstrap import TestConfig, run_test
from .ranks import check_scaling, pseudo_observations


class CopulaChangePointTest(BaseEstimator):
    """Multiplier-bootstrap test for a change in the copula of a multivariate series.

    Rows of ``X`` are time-ordered observations. Fitting computes the
    statistic, its per-split trajectory, the change-point estimate and a
    p-value.

    Parameters
    ----------
    variant : {"check", "hat", "r"}, default="check"
        ``"check"`` and ``"hat"`` test the within-subsample-rank statistic with
        window-local or full-sample replicate processes; ``"r"`` tests the
        full-sample-rank statistic.
    n_replicates : int, default=1000
        Number of multiplier replicates.
    multiplier : {"iid", "dependent"}, default="dependent"
        Use ``"iid"`` for serially independent data.
    bandwidth : "auto" or int, default="auto"
        Dependence span of the dependent multipliers.
    scaling : {"lk1", "lk2"}, default="lk1"
        Divide window ranks by the window length, or by the length plus one.
    random_state : int, SeedSequence or None, default=None

    Attributes
    ----------
    statistic_ : float
    p_value_ : float
    change_point_ : int
        1-based index of the last observation before the estimated break.
    trajectory_ : ndarray of shape (n_samples - 1,)
    replicates_ : ndarray of shape (n_replicates,)
    bandwidth_ : int or None
    result_ : TestResult

    Examples
    --------
    >>> import numpy as np
    >>> X = np.random.default_rng(0).standard_normal((40, 2))
    >>> test = CopulaChangePointTest(n_replicates=50, multiplier="iid", random_state=1).fit(X)
    >>> 0 <= test.p_value_ <= 1
    True
    """

    def __init__(self, variant="check", n_replicates=1000, multiplier="dependent",
                 bandwidth="auto", scaling="lk1", random_state=None):
        self.variant = variant
        self.n_replicates = n_replicates
        self.multiplier = multiplier
        self.bandwidth = bandwidth
        self.scaling = scaling
        self.random_state = random_state

    def _config(self):
        return TestConfig(variant=self.variant, n_replicates=self.n_replicates,
                          multiplier=self.multiplier, bandwidth=self.bandwidth,
                          scaling=self.scaling, seed=self.random_state).validate()

    def fit(self, X, y=None):
        X = check_array(X, dtype=np.float64, ensure_min_samples=2, ensure_min_features=2)
        result = run_test(X, self._config())
        self.n_features_in_ = X.shape[1]
        self.result_ = result
        self.statistic_ = result.statistic
        self.p_value_ = result.p_value
        self.change_point_ = result.k_star
        self.trajectory_ = result.trajectory.values
        self.replicates_ = result.replicates
        self.bandwidth_ = result.bandwidth
        return self

    def reject(self, alpha=0.05):
        """Whether the fitted p-value falls strictly below ``alpha``."""
        check_is_fitted(self, "p_value_")
        return self.p_value_ < alpha


class PseudoObservations(TransformerMixin, BaseEstimator):
    """Map each column to its maximal ranks divided by ``n`` (or ``n + 1``).

    The transform is computed from the rows passed to :meth:`transform`
    itself; :meth:`fit` only records the number of features.
    """

    def __init__(self, scaling="lk1"):
        self.scaling = scaling

    def fit(self, X, y=None):
        check_scaling(self.scaling)
        X = check_array(X, dtype=np.float64)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return pseudo_observations(X, scaling=self.scaling).values
