"""Manageability sweeps over map parameters.

A sweep runs one base configuration across a Cartesian product of map
parameter axes and grades each cell: the run must complete, its global
sup of sup|u| must stay below a cap, and the maximum of sup|u| within
every full map period must stay above a floor (the pulse survives without
collapsing or dissolving).  Cells are independent, so they are farmed out
to a process pool; the MNLS_THREADS environment variable caps the worker
count.  Results keep the deterministic Cartesian cell order regardless of
completion order.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, MnlsError
from .harness import _build, resolve_config
from .profiles import field_from_record
from .propagator import evolve
from .runio import atomic_write_text

__all__ = ["ManageabilityCriterion", "sweep_manageability", "verdict"]

_AXIS_KEYS = ("gamma", "gamma_minus", "gamma_plus", "t_star", "t_period", "epsilon")


@dataclass(frozen=True)
class ManageabilityCriterion:
    """Thresholds: floor for per-period peaks, cap for the global sup."""

    peak_floor: float  # c0
    sup_cap: float  # C0
    t_end: float | None = None  # horizon override; default: the config's


def verdict(status: str, sup_linf: float, min_period_peak: float,
            criterion: ManageabilityCriterion) -> bool:
    """Monotone grading: shrinking sup or raising every period peak never
    flips a manageable cell to unmanageable under the same thresholds."""
    if status != "completed":
        return False
    if not (sup_linf <= criterion.sup_cap):
        return False
    return bool(min_period_peak >= criterion.peak_floor)


def _apply_axis(map_dict: dict, key: str, value: float) -> dict:
    d = dict(map_dict)
    if key == "gamma":
        d["gamma_minus"] = value
        d["gamma_plus"] = value
    elif key in _AXIS_KEYS:
        d[key] = value
    else:
        raise ConfigError(f"unknown sweep axis {key!r}; allowed: {_AXIS_KEYS}")
    return d


def _run_cell(args):
    index, config, criterion = args
    try:
        model, disp_map, grid, policy, dt_target, t_end, sample_every = _build(config)
        if criterion.t_end is not None:
            t_end = float(criterion.t_end)
        u0 = field_from_record(grid, config["profile"])
        log, _ = evolve(model, disp_map, u0, 0.0, t_end, dt_target, sample_every, policy)
        ts = np.array([s.t for s in log.samples])
        linf = np.array([s.linf for s in log.samples])
        sup = float(np.max(linf))
        period = disp_map.period
        full = int(math.floor((t_end + 1e-12) / period))
        peaks = []
        for k in range(full):
            inside = (ts > k * period) & (ts <= (k + 1) * period)
            if np.any(inside):
                peaks.append(float(np.max(linf[inside])))
        min_peak = min(peaks) if peaks else float("nan")
        status = log.status
        ok = verdict(status, sup, min_peak, criterion)
        return index, {
            "status": status,
            "sup_linf": sup,
            "min_period_peak": min_peak,
            "periods": len(peaks),
            "manageable": ok,
            "error": "",
        }
    except MnlsError as exc:
        return index, {
            "status": "error",
            "sup_linf": float("nan"),
            "min_period_peak": float("nan"),
            "periods": 0,
            "manageable": False,
            "error": f"{type(exc).__name__}: {exc}",
        }


def sweep_manageability(
    base_config: str | dict,
    axes: dict[str, list[float]],
    criterion: ManageabilityCriterion,
    out_csv: str | Path | None = None,
    max_workers: int | None = None,
) -> list[dict]:
    """Grade every cell of the axes product; optionally write a CSV table.

    Returns one row dict per cell in Cartesian order (first axis slowest),
    each carrying the axis values, run status, sup of sup|u|, the smallest
    per-period peak, and the manageable verdict.
    """
    base = resolve_config(base_config)
    for key in axes:
        if key not in _AXIS_KEYS:
            raise ConfigError(f"unknown sweep axis {key!r}; allowed: {_AXIS_KEYS}")
    names = list(axes)
    values = [list(map(float, axes[k])) for k in names]
    if any(len(v) == 0 for v in values):
        raise ConfigError("every sweep axis needs at least one value")
    jobs = []
    for index, combo in enumerate(itertools.product(*values)):
        cfg = dict(base)
        m = dict(base["map"])
        for key, val in zip(names, combo):
            m = _apply_axis(m, key, val)
        cfg["map"] = m
        jobs.append((index, cfg, criterion))

    if max_workers is None:
        env = os.environ.get("MNLS_THREADS", "")
        max_workers = int(env) if env.isdigit() and int(env) > 0 else (os.cpu_count() or 1)
    max_workers = max(1, min(max_workers, len(jobs)))

    results: list[dict | None] = [None] * len(jobs)
    if max_workers == 1:
        for job in jobs:
            index, row = _run_cell(job)
            results[index] = row
    else:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            for index, row in pool.map(_run_cell, jobs):
                results[index] = row

    rows = []
    for index, (combo, row) in enumerate(zip(itertools.product(*values), results)):
        full = {"cell": index}
        full.update({k: v for k, v in zip(names, combo)})
        full.update(row)
        rows.append(full)

    if out_csv is not None:
        header = ["cell", *names, "status", "sup_linf", "min_period_peak", "periods",
                  "manageable", "error"]
        lines = [",".join(header)]
        for r in rows:
            lines.append(",".join(_cell_fmt(r[h]) for h in header))
        atomic_write_text(out_csv, "\n".join(lines) + "\n")
    return rows


def _cell_fmt(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)
