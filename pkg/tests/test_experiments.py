from dataclasses import replace

import numpy as np
import pytest

from cpcopula import ChangePointError, TestConfig
from cpcopula.dgp import CopulaSpec, ScenarioSpec
from cpcopula.experiments import (
    Cell,
    ExperimentGrid,
    reproduce_table,
    run_cell,
    run_grid,
    table_cells,
)
from cpcopula.reference_rates import reference_rows

NULL = ScenarioSpec(30, CopulaSpec.from_tau("normal", 0.3))
CFG = TestConfig(n_replicates=30, multiplier="iid", scaling="lk2")


def test_huge_break_rejects():
    scen = ScenarioSpec(200, CopulaSpec.from_tau("normal", -0.8), CopulaSpec.from_tau("normal", 0.9), 0.5)
    rep = run_cell(scen, replace(CFG, n_replicates=100), reps=1, alpha=0.05, seed=0)
    assert rep.rate("check") == 1.0


def test_rate_is_exact_ratio():
    rep = run_cell(NULL, CFG, reps=7, alpha=0.5, seed=1, variants=("check", "r"))
    for v in ("check", "r"):
        assert rep.rate(v) == rep.rejected[v] / 7


def test_deterministic_and_parallel_equal():
    a = run_cell(NULL, CFG, reps=4, alpha=0.5, seed=3, variants=("check", "hat"))
    b = run_cell(NULL, CFG, reps=4, alpha=0.5, seed=3, variants=("check", "hat"), n_jobs=2)
    assert a.rejected == b.rejected


def test_bandwidth_stats_only_for_dependent():
    iid = run_cell(NULL, CFG, reps=2, alpha=0.05, seed=0)
    assert iid.ell_mean is None and iid.ell_std is None
    dep = run_cell(NULL, replace(CFG, multiplier="dependent"), reps=3, alpha=0.05, seed=0)
    assert dep.ell_mean >= 1 and dep.ell_std >= 0


def test_grid_validation():
    with pytest.raises(ChangePointError):
        ExperimentGrid([], reps=0)
    with pytest.raises(ChangePointError):
        ExperimentGrid([], alpha=1.5)


def test_grid_report(tmp_path):
    grid = ExperimentGrid([Cell(NULL, CFG, ("check", "r"), {"name": "null"})], reps=2, seed=4)
    report = run_grid(grid)
    assert len(report.rows) == 2
    assert report.select(variant="r")[0]["name"] == "null"
    report.to_csv(tmp_path / "r.csv")
    report.to_json(tmp_path / "r.json")
    assert (tmp_path / "r.csv").read_text().count("\n") == 3


@pytest.mark.parametrize("table_id", [1, 2, 3, 4, 5, 6])
def test_table_cells_cover_reference(table_id):
    cells = table_cells(table_id)
    n_rows = sum(len(c.variants) for c in cells)
    assert n_rows == len(reference_rows(table_id))
    dep = table_id in (2, 6)
    assert all((c.config.multiplier == "dependent") == dep for c in cells)


def test_table_cell_scenarios():
    (cell,) = table_cells(3, where={"family": "clayton", "n": 100, "tau": 0.6, "t": 0.5})
    assert cell.scenario.copula.tau == pytest.approx(0.2)
    assert cell.scenario.copula_after.tau == pytest.approx(0.6)
    assert cell.scenario.k_break == 50
    assert cell.reference["check"] == pytest.approx(0.821)


def test_reproduce_table_rows():
    report = reproduce_table(5, reps=2, n_replicates=20, where={"n": 50, "d": 2, "mu": 2.0, "t": 0.5})
    assert {r["variant"] for r in report.rows} == {"check", "hat", "r"}
    assert all(r["published_rate"] is not None for r in report.rows)


def test_unknown_table():
    with pytest.raises(ChangePointError):
        table_cells(9)
