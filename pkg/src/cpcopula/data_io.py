"""CSV ingestion and price-to-logreturn preprocessing."""
from __future__ import annotations

import csv
import datetime as dt
import hashlib
import math
from dataclasses import dataclass, replace

import numpy as np

from ._errors import ChangePointError
from .ranks import window_ranks


@dataclass(frozen=True)
class InputTable:
    """Time-ordered numeric columns with optional names and dates."""

    values: np.ndarray
    names: tuple
    times: tuple | None = None

    @property
    def n(self):
        return self.values.shape[0]

    @property
    def d(self):
        return self.values.shape[1]


def _parse_float(text):
    try:
        val = float(text)
    except ValueError:
        return None
    return val if math.isfinite(val) else None


def _is_date(text):
    try:
        dt.date.fromisoformat(text.strip()[:10])
    except ValueError:
        return False
    return True


def load_csv(path, header=None, time_column=None):
    """Read a comma-separated file of observations, preserving row order.

    Parameters
    ----------
    path : str or path-like
    header : bool or None
        ``None`` detects a header from a non-numeric first row.
    time_column : int, str or None
        Column holding dates. ``None`` uses the first column when its first
        data cell is an ISO date.

    Raises
    ------
    ChangePointError
        ``"parse"`` with the 1-based line and column of the offending cell, or
        ``"ragged"`` when rows differ in length.
    """
    with open(path, newline="") as fh:
        rows = [(i + 1, r) for i, r in enumerate(csv.reader(fh)) if r and any(c.strip() for c in r)]
    if not rows:
        raise ChangePointError("parse", f"{path}: no data rows")
    width = len(rows[0][1])
    for line, r in rows:
        if len(r) != width:
            raise ChangePointError("ragged", f"{path}: line {line} has {len(r)} fields, expected {width}")

    first = [c.strip() for c in rows[0][1]]
    if header is None:
        header = not all(_parse_float(c) is not None or _is_date(c) for c in first)
    names = tuple(first) if header else tuple(f"x{j + 1}" for j in range(width))
    body = rows[1:] if header else rows
    if not body:
        raise ChangePointError("parse", f"{path}: no data rows")

    if isinstance(time_column, str):
        if time_column not in names:
            raise ChangePointError("parse", f"{path}: no column named {time_column!r}")
        time_column = names.index(time_column)
    elif time_column is None and _parse_float(body[0][1][0]) is None and _is_date(body[0][1][0]):
        time_column = 0
    value_cols = [j for j in range(width) if j != time_column]

    values = np.empty((len(body), len(value_cols)))
    for a, (line, r) in enumerate(body):
        for b, j in enumerate(value_cols):
            val = _parse_float(r[j].strip())
            if val is None:
                raise ChangePointError(
                    "parse", f"{path}: line {line}, column {j + 1} ({names[j]!r}): "
                             f"cannot read {r[j]!r} as a finite number")
            values[a, b] = val
    times = tuple(r[time_column].strip() for _, r in body) if time_column is not None else None
    return InputTable(values, tuple(names[j] for j in value_cols), times)


def logreturns(table):
    """Differences of log prices; row ``i`` of the result belongs to time ``i + 1``."""
    if table.n < 2:
        raise ChangePointError("too-short", "need at least two prices")
    if np.any(table.values <= 0):
        raise ChangePointError("nonpositive-price", "prices must be strictly positive")
    out = np.diff(np.log(table.values), axis=0)
    times = table.times[1:] if table.times is not None else None
    return replace(table, values=out, times=times)


def rank_digest(values):
    """SHA-256 of the full-sample maximal ranks.

    Identifies the input up to strictly increasing transformations of each
    column, which is exactly the information the rank-based test uses.
    """
    x = np.asarray(values, dtype=float)
    ranks = window_ranks(x, 0, x.shape[0]).astype("<i8")
    h = hashlib.sha256()
    h.update(np.array(x.shape, dtype="<i8").tobytes())
    h.update(ranks.tobytes())
    return h.hexdigest()


def write_csv(path, values, names=None):
    """Write values at full ``repr`` precision so they read back exactly."""
    values = np.asarray(values, dtype=float)
    names = names or [f"x{j + 1}" for j in range(values.shape[1])]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(names)
        for row in values:
            w.writerow([repr(float(v)) for v in row])
