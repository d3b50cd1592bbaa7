"""Monte Carlo rejection rates over scenario grids.

Random streams are addressed by counters: replication ``r`` of cell ``c``
draws its data from ``substream(seed, c, r, 0)`` and its multipliers from
``substream(seed, c, r, 1)``, so serial and parallel runs agree exactly.
"""
from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field, replace

import numpy as np
from joblib import Parallel, delayed

from ._errors import ChangePointError
from .bootstrap import TestConfig, run_variants
from .dgp import CopulaSpec, ScenarioSpec, make_scenario
from .multipliers import substream
from .reference_rates import COLUMNS, reference_rows

TABLE_IDS = (1, 2, 3, 4, 5, 6)


@dataclass
class Cell:
    """One scenario tested with one or more replicate schemes."""

    scenario: ScenarioSpec
    config: TestConfig
    variants: tuple = ("check",)
    factors: dict = field(default_factory=dict)
    reference: dict = field(default_factory=dict)


@dataclass
class ExperimentGrid:
    cells: list
    reps: int = 500
    alpha: float = 0.05
    seed: int = 0

    def __post_init__(self):
        if self.reps < 1:
            raise ChangePointError("reps", "reps must be >= 1")
        if not 0 < self.alpha < 1:
            raise ChangePointError("alpha", "alpha must lie in (0, 1)")


@dataclass
class CellReport:
    rejected: dict
    reps: int
    alpha: float
    bandwidths: list
    seconds: float

    def rate(self, variant):
        return self.rejected[variant] / self.reps

    @property
    def ell_mean(self):
        return float(np.mean(self.bandwidths)) if self.bandwidths else None

    @property
    def ell_std(self):
        # sample standard deviation; zero for a single replication
        if not self.bandwidths:
            return None
        return float(np.std(self.bandwidths, ddof=1)) if len(self.bandwidths) > 1 else 0.0


def _one_rep(scenario, cfg, variants, seed, cell_index, rep):
    stream = substream(seed, cell_index, rep)
    x = make_scenario(scenario, np.random.default_rng(substream(stream, 0)))
    results = run_variants(x, replace(cfg, seed=substream(stream, 1)), variants)
    first = results[variants[0]]
    return {v: r.p_value for v, r in results.items()}, first.bandwidth


def run_cell(scenario, cfg, reps, alpha, seed, variants=None, cell_index=0, n_jobs=1):
    """Rejection counts of each variant over ``reps`` simulated samples.

    A replication rejects when its p-value is strictly below ``alpha``.
    """
    variants = tuple(variants or (cfg.variant,))
    if reps < 1:
        raise ChangePointError("reps", "reps must be >= 1")
    start = time.perf_counter()
    jobs = (delayed(_one_rep)(scenario, cfg, variants, seed, cell_index, r) for r in range(reps))
    out = Parallel(n_jobs=n_jobs)(jobs)
    rejected = {v: sum(p[v] < alpha for p, _ in out) for v in variants}
    bandwidths = [ell for _, ell in out if ell is not None]
    return CellReport(rejected, reps, alpha, bandwidths, time.perf_counter() - start)


@dataclass
class RejectionReport:
    rows: list

    def to_csv(self, path):
        keys = []
        for row in self.rows:
            keys.extend(k for k in row if k not in keys)
        with open(path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=keys)
            writer.writeheader()
            for row in self.rows:
                writer.writerow(row)

    def to_json(self, path):
        with open(path, "w") as fh:
            json.dump({"rows": self.rows}, fh, indent=2)
            fh.write("\n")

    def select(self, **factors):
        return [r for r in self.rows if all(r.get(k) == v for k, v in factors.items())]


def _report_rows(cell, report, cell_index, grid_seed):
    rows = []
    for v in cell.variants:
        row = dict(cell=cell_index, **cell.factors)
        row.update(
            variant=v,
            rejected=report.rejected[v],
            reps=report.reps,
            rate=report.rate(v),
            alpha=report.alpha,
            M=cell.config.n_replicates,
            multiplier=cell.config.multiplier,
            scaling=cell.config.scaling,
            heuristic_ell_mean=report.ell_mean,
            heuristic_ell_std=report.ell_std,
            published_rate=cell.reference.get(v),
            published_ell_mean=cell.reference.get("ell_mean"),
            published_ell_std=cell.reference.get("ell_std"),
            seed=grid_seed,
            seconds=round(report.seconds, 3),
        )
        rows.append(row)
    return rows


def run_grid(grid, n_jobs=1, progress=None):
    """Run every cell of ``grid``; cells keep their position as the stream index."""
    rows = []
    for i, cell in enumerate(grid.cells):
        report = run_cell(cell.scenario, cell.config, grid.reps, grid.alpha, grid.seed,
                          cell.variants, cell_index=i, n_jobs=n_jobs)
        rows.extend(_report_rows(cell, report, i, grid.seed))
        if progress is not None:
            progress(i, cell, report)
    return RejectionReport(rows)


def _scenario_for(table_id, f):
    cop = CopulaSpec.from_tau
    if table_id == 1:
        return ScenarioSpec(f["n"], cop(f["family"], f["tau"], f["d"]))
    if table_id == 2:
        return ScenarioSpec(f["n"], cop(f["family"], f["tau"]), serial=f["serial"])
    if table_id == 3:
        return ScenarioSpec(f["n"], cop(f["family"], 0.2), cop(f["family"], f["tau"]), f["t"])
    if table_id == 4:
        return ScenarioSpec(f["n"], cop("clayton", f["tau"], f["d"]),
                            cop("gumbel", f["tau"], f["d"]), f["t"])
    if table_id == 5:
        return ScenarioSpec(f["n"], cop("normal", f["tau"], f["d"]), break_fraction=f["t"],
                            margin_shift=(0, f["mu"]))
    if table_id == 6:
        return ScenarioSpec(f["n"], cop("gumbel", 0.2), cop("gumbel", f["tau"]), f["t"],
                            serial=f["serial"])
    raise ChangePointError("table", f"table must be one of {TABLE_IDS}, got {table_id}")


def table_cells(table_id, n_replicates=500, scaling="lk2", where=None):
    """Cells of one published table, optionally filtered by factor values.

    ``where`` maps factor names to an allowed value or a collection of values.
    Serially dependent tables use dependent multipliers with the automatic
    bandwidth; the others use i.i.d. multipliers.
    """
    if table_id not in TABLE_IDS:
        raise ChangePointError("table", f"table must be one of {TABLE_IDS}, got {table_id}")
    factor_names = [c for c in COLUMNS[table_id] if c not in ("variant", "rate", "ell_mean", "ell_std")]
    multiplier = "dependent" if table_id in (2, 6) else "iid"
    cfg = TestConfig(n_replicates=n_replicates, multiplier=multiplier, scaling=scaling)
    grouped = {}
    for row in reference_rows(table_id):
        key = tuple(row[c] for c in factor_names)
        entry = grouped.setdefault(key, {"variants": [], "reference": {}})
        entry["variants"].append(row["variant"])
        entry["reference"][row["variant"]] = row["rate"] / 100
        if "ell_mean" in row:
            entry["reference"]["ell_mean"] = row["ell_mean"]
            entry["reference"]["ell_std"] = row["ell_std"]
    cells = []
    for key, entry in grouped.items():
        factors = dict(zip(factor_names, key))
        if where and not all(_matches(factors.get(k), v) for k, v in where.items()):
            continue
        cells.append(Cell(_scenario_for(table_id, factors), cfg, tuple(entry["variants"]),
                          dict(table=table_id, **factors), entry["reference"]))
    return cells


def _matches(value, allowed):
    if isinstance(allowed, (list, tuple, set, frozenset)):
        return value in allowed
    return value == allowed


def reproduce_table(table_id, reps=500, n_replicates=500, seed=0, alpha=0.05,
                    where=None, n_jobs=1, progress=None):
    """Regenerate a published table at reduced scale, alongside the published values."""
    grid = ExperimentGrid(table_cells(table_id, n_replicates, where=where), reps, alpha, seed)
    return run_grid(grid, n_jobs=n_jobs, progress=progress)
