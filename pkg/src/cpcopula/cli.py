"""Command-line interface: ``cpcopula test | simulate | mc``.

Exit codes: 0 success, 2 usage or configuration error, 3 data error,
4 numerical degeneracy.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
import warnings

import numpy as np

from . import __version__
from ._errors import ChangePointError, DegenerateDataError
from .bootstrap import VARIANTS, DegenerateDataWarning, TestConfig, run_test
from .data_io import load_csv, logreturns, rank_digest, write_csv
from .dgp import SERIAL_MODELS, CopulaSpec, KhoudrajiSpec, ScenarioSpec, make_scenario
from .experiments import TABLE_IDS, Cell, ExperimentGrid, reproduce_table, run_grid

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_DEGENERATE = 0, 2, 3, 4


class ConfigError(ChangePointError):
    def __init__(self, path, message):
        super().__init__("config", f"{path}: {message}")


def _get(cfg, key, path, kind=None, default=...):
    if key not in cfg:
        if default is ...:
            raise ConfigError(f"{path}.{key}", "missing required field")
        return default
    val = cfg[key]
    if kind is not None and (not isinstance(val, kind) or isinstance(val, bool)):
        raise ConfigError(f"{path}.{key}", f"expected {getattr(kind, '__name__', kind)}, got {val!r}")
    return val


def copula_from_config(cfg, path="copula", d=2):
    if not isinstance(cfg, dict):
        raise ConfigError(path, "expected a table")
    family = _get(cfg, "family", path, str)
    d = _get(cfg, "d", path, int, d)
    try:
        if family == "khoudraji":
            return KhoudrajiSpec(copula_from_config(_get(cfg, "c1", path), f"{path}.c1"),
                                 copula_from_config(_get(cfg, "c2", path), f"{path}.c2"),
                                 float(_get(cfg, "a", path, (int, float), 0.8)),
                                 float(_get(cfg, "b", path, (int, float), 0.5)))
        if "tau" in cfg:
            return CopulaSpec.from_tau(family, float(_get(cfg, "tau", path, (int, float))), d)
        return CopulaSpec(family, float(_get(cfg, "param", path, (int, float), 0.0)), d)
    except ConfigError:
        raise
    except ChangePointError as exc:
        raise ConfigError(path, str(exc)) from None


def scenario_from_config(cfg, path="scenario"):
    """Build a :class:`ScenarioSpec` from a parsed TOML table.

    Recognized keys: ``n``, ``d``, ``serial``, ``break_fraction``, tables
    ``copula`` and ``copula_after``, and ``margin_shift = {component, mu}``
    with a 0-based component.
    """
    n = _get(cfg, "n", path, int)
    d = _get(cfg, "d", path, int, 2)
    serial = _get(cfg, "serial", path, str, "iid")
    if serial not in SERIAL_MODELS:
        raise ConfigError(f"{path}.serial", f"must be one of {SERIAL_MODELS}")
    copula = copula_from_config(_get(cfg, "copula", path), f"{path}.copula", d)
    after = cfg.get("copula_after")
    after = None if after is None else copula_from_config(after, f"{path}.copula_after", d)
    shift = cfg.get("margin_shift")
    if shift is not None:
        shift = (_get(shift, "component", f"{path}.margin_shift", int, 0),
                 float(_get(shift, "mu", f"{path}.margin_shift", (int, float))))
    t = cfg.get("break_fraction")
    try:
        return ScenarioSpec(n, copula, after, None if t is None else float(t), serial, shift)
    except ChangePointError as exc:
        raise ConfigError(path, str(exc)) from None


def test_config_from(cfg, path):
    variants = cfg.get("variants", ["check"])
    if isinstance(variants, str):
        variants = [variants]
    for v in variants:
        if v not in VARIANTS:
            raise ConfigError(f"{path}.variants", f"unknown variant {v!r}")
    conf = TestConfig(variant=variants[0],
                      n_replicates=_get(cfg, "M", path, int, 500),
                      multiplier=_get(cfg, "multiplier", path, str, "iid"),
                      bandwidth=cfg.get("bandwidth", "auto"),
                      scaling=_get(cfg, "scaling", path, str, "lk2"))
    try:
        conf.validate()
    except ChangePointError as exc:
        raise ConfigError(path, str(exc)) from None
    return conf, tuple(variants)


def grid_from_config(cfg):
    cells = _get(cfg, "cell", "grid", list)
    out = []
    for i, c in enumerate(cells):
        path = f"cell[{i}]"
        conf, variants = test_config_from(c, path)
        scen = scenario_from_config(_get(c, "scenario", path, dict), f"{path}.scenario")
        out.append(Cell(scen, conf, variants, dict(c.get("label", {})) | {"name": c.get("name", str(i))}))
    try:
        return ExperimentGrid(out, _get(cfg, "reps", "grid", int, 100),
                              float(_get(cfg, "alpha", "grid", (int, float), 0.05)),
                              _get(cfg, "seed", "grid", int, 0))
    except ChangePointError as exc:
        raise ConfigError("grid", str(exc)) from None


def _read_toml(path):
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(str(path), exc.strerror or str(exc)) from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(str(path), f"invalid TOML: {exc}") from None


def _bandwidth_arg(text):
    if text == "auto":
        return text
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'auto' or a positive integer") from None
    if val < 1:
        raise argparse.ArgumentTypeError("bandwidth must be >= 1")
    return val


def build_report(table, result, cfg, alpha, preprocessing, warning_list):
    k = result.k_star
    return {
        "statistic_variant": result.variant,
        "S": result.statistic,
        "p_value": result.p_value,
        "reject": bool(result.p_value < alpha),
        "alpha": alpha,
        "k_star": k,
        "k_star_date": table.times[k - 1] if table.times is not None else None,
        "n": table.n,
        "d": table.d,
        "columns": list(table.names),
        "trajectory": [float(v) for v in result.trajectory.values],
        "M": result.n_replicates,
        "multiplier": result.multiplier,
        "bandwidth_used": result.bandwidth,
        "warnings": warning_list,
        "manifest": {
            "version": __version__,
            "config": {
                "variant": cfg.variant,
                "n_replicates": cfg.n_replicates,
                "multiplier": cfg.multiplier,
                "bandwidth": cfg.bandwidth,
                "scaling": cfg.scaling,
            },
            "seed": result.seed_entropy,
            "preprocessing": preprocessing,
            "rank_digest": rank_digest(table.values),
        },
    }


def cmd_test(args):
    table = load_csv(args.input, header=args.header, time_column=args.time_column)
    preprocessing = "none"
    if args.logreturns:
        table = logreturns(table)
        preprocessing = "logreturns"
    if table.d < 2:
        raise ChangePointError("invalid-data", "need at least two value columns")
    if table.n < 4:
        raise ChangePointError("too-short", f"need at least 4 observations, got {table.n}")
    const = [name for name, col in zip(table.names, table.values.T) if np.all(col == col[0])]
    if len(const) == table.d:
        raise DegenerateDataError("all-ties", "every column is constant")
    seed = args.seed if args.seed is not None else np.random.SeedSequence().entropy
    cfg = TestConfig(variant=args.stat, n_replicates=args.M, multiplier=args.multiplier,
                     bandwidth=args.bandwidth, scaling=args.scaling, seed=seed).validate()
    limiter = contextlib.nullcontext()
    if args.threads:
        from threadpoolctl import threadpool_limits
        limiter = threadpool_limits(args.threads)
    with limiter, warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateDataWarning)
        result = run_test(table.values, cfg)
    if not np.isfinite(result.statistic) or not np.all(np.isfinite(result.replicates)):
        raise DegenerateDataError("non-finite", "statistic or replicates are not finite")
    warning_list = [f"column {c!r} is constant; the statistic is degenerate" for c in const]
    report = build_report(table, result, cfg, args.alpha, preprocessing, warning_list)
    for w in warning_list:
        print(f"warning: {w}", file=sys.stderr)

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.format == "json":
            json.dump(report, out, indent=2)
            out.write("\n")
        else:
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["k", "date", "S_nk"])
            for k, v in enumerate(report["trajectory"], start=1):
                w.writerow([k, table.times[k - 1] if table.times else "", repr(v)])
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_simulate(args):
    cfg = _read_toml(args.scenario)
    scen = scenario_from_config(cfg.get("scenario", cfg))
    x = make_scenario(scen, np.random.default_rng(args.seed))
    write_csv(args.out, x)
    return EXIT_OK


def _where(pairs):
    out = {}
    for item in pairs or []:
        key, _, raw = item.partition("=")
        if not raw:
            raise ConfigError("--where", f"expected key=value, got {item!r}")
        vals = []
        for part in raw.split(","):
            try:
                vals.append(int(part))
            except ValueError:
                try:
                    vals.append(float(part))
                except ValueError:
                    vals.append(part)
        out[key] = tuple(vals)
    return out


def cmd_mc(args):
    def progress(i, cell, rep):
        print(f"cell {i}: {cell.factors} -> "
              + ", ".join(f"{v}={rep.rate(v):.3f}" for v in cell.variants)
              + f" ({rep.seconds:.1f}s)", file=sys.stderr)

    if args.table is not None:
        report = reproduce_table(args.table, reps=args.reps, n_replicates=args.M, seed=args.seed,
                                 alpha=args.alpha, where=_where(args.where),
                                 n_jobs=args.threads or 1, progress=progress)
    else:
        grid = grid_from_config(_read_toml(args.grid))
        if args.reps is not None:
            grid.reps = args.reps
        report = run_grid(grid, n_jobs=args.threads or 1, progress=progress)
    report.to_csv(f"{args.out}.csv")
    report.to_json(f"{args.out}.json")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="cpcopula", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", help="test a CSV series for a change point")
    t.add_argument("--input", required=True)
    t.add_argument("--stat", choices=VARIANTS, default="check")
    t.add_argument("--M", type=int, default=1000)
    t.add_argument("--multiplier", choices=("iid", "dependent"), default="dependent")
    t.add_argument("--bandwidth", type=_bandwidth_arg, default="auto")
    t.add_argument("--scaling", choices=("lk1", "lk2"), default="lk1")
    t.add_argument("--alpha", type=float, default=0.05, help="only used for the 'reject' field")
    t.add_argument("--seed", type=int)
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--logreturns", action="store_true", help="treat columns as prices")
    t.add_argument("--time-column", default=None,
                   help="name of the date column (default: first column if it holds ISO dates)")
    t.add_argument("--header", dest="header", action="store_true", default=None)
    t.add_argument("--no-header", dest="header", action="store_false")
    t.add_argument("--threads", type=int, default=None, help="upper bound on worker threads")
    t.add_argument("--out")
    t.set_defaults(func=cmd_test)

    s = sub.add_parser("simulate", help="draw a sample from a scenario file")
    s.add_argument("--scenario", required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_simulate)

    m = sub.add_parser("mc", help="Monte Carlo rejection rates")
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", type=int, choices=TABLE_IDS)
    src.add_argument("--grid", help="TOML grid file")
    m.add_argument("--reps", type=int, default=None)
    m.add_argument("--M", type=int, default=500)
    m.add_argument("--alpha", type=float, default=0.05)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--where", action="append", metavar="KEY=V1,V2",
                   help="restrict --table cells, e.g. --where n=100 --where family=clayton")
    m.add_argument("--threads", type=int, default=None)
    m.add_argument("--out", default="mc_report")
    m.set_defaults(func=cmd_mc)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "mc" and args.table is not None and args.reps is None:
        args.reps = 500
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ChangePointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
