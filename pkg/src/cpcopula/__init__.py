"""Rank-based change-point tests for the copula of multivariate time series."""
from ._errors import ChangePointError, DegenerateDataError
from .bootstrap import (
    PValue,
    ReplicateStat,
    TestConfig,
    TestResult,
    check_b,
    hat_b,
    p_value,
    replicate_stat,
    replicate_stats,
    run_test,
    run_variants,
)
from .estimator import CopulaChangePointTest, PseudoObservations
from .ranks import (
    PseudoObs,
    empirical_copula,
    empirical_copula_fullrank,
    partial_derivative_hat,
    pseudo_observations,
    ranks_in_window,
)
from .statistic import (
    StatTrajectory,
    cvm_at_k,
    difference_process,
    difference_process_r,
    statistic_sn,
    statistic_snr,
)

__version__ = "0.1.0"

__all__ = [
    "ChangePointError",
    "CopulaChangePointTest",
    "DegenerateDataError",
    "PValue",
    "PseudoObs",
    "PseudoObservations",
    "ReplicateStat",
    "StatTrajectory",
    "TestConfig",
    "TestResult",
    "check_b",
    "cvm_at_k",
    "difference_process",
    "difference_process_r",
    "empirical_copula",
    "empirical_copula_fullrank",
    "hat_b",
    "p_value",
    "partial_derivative_hat",
    "pseudo_observations",
    "ranks_in_window",
    "replicate_stat",
    "replicate_stats",
    "run_test",
    "run_variants",
    "statistic_sn",
    "statistic_snr",
]
