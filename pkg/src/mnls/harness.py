"""Run resolution and artifact emission for single experiments.

A run configuration is a plain dict (see `catalog` for the schema).  The
harness resolves it into model/map/grid/profile objects, evolves, and
writes series.csv, events.jsonl, meta.json, field snapshots, and two SVG
plots into the output directory.  Reruns of the same configuration are
byte-identical in series.csv.
"""

from __future__ import annotations

import platform
from pathlib import Path

import numpy as np

from . import __version__
from .catalog import catalog_entry
from .constructor import backward_blowup_data
from .errors import BlowupDuringConstruction, ConfigError
from .lattice import Grid, make_grid
from .mgmt_map import DispersionMap
from .plotting import emit_plot
from .profiles import field_from_record
from .propagator import BlowupPolicy, ModelSpec, evolve
from .runio import write_events_jsonl, write_meta_json, write_series_csv, write_snapshot

__all__ = ["resolve_config", "run_experiment"]

_REQUIRED = ("model", "map", "profile", "grid", "dt_target", "t_end")


def resolve_config(target: str | dict, overrides: dict | None = None) -> dict:
    """Expand a catalog id or explicit dict into a full configuration."""
    if isinstance(target, str):
        config = catalog_entry(target)
    elif isinstance(target, dict):
        if "experiment" in target and not all(k in target for k in _REQUIRED):
            config = catalog_entry(target["experiment"])
            config.update({k: v for k, v in target.items() if k != "experiment"})
        else:
            config = dict(target)
    else:
        raise ConfigError(f"config must be an experiment name or dict, got {type(target)}")
    if overrides:
        for key, value in overrides.items():
            if isinstance(value, dict) and isinstance(config.get(key), dict):
                config[key] = {**config[key], **value}
            else:
                config[key] = value
    missing = [k for k in _REQUIRED if k not in config]
    if missing:
        raise ConfigError(f"config is missing keys: {missing}")
    config.setdefault("sample_every", 10)
    config.setdefault("policy", {})
    return config


def _build(config: dict):
    try:
        model = ModelSpec(kind=config["model"]["kind"], p=config["model"].get("p"))
        disp_map = DispersionMap.from_dict(config["map"])
        g = config["grid"]
        grid = make_grid(int(g["dim"]), float(g["half_width"]), int(g["n"]))
        policy = BlowupPolicy(
            amplitude_factor=float(config["policy"].get("amplitude_factor", 1e3)),
            mass_drift_tol=float(config["policy"].get("mass_drift_tol", 1e-4)),
            amplitude_ceiling=float(config["policy"].get("amplitude_ceiling", 1e9)),
        )
        dt_target = float(config["dt_target"])
        t_end = float(config["t_end"])
        sample_every = int(config["sample_every"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad run configuration: {exc}") from exc
    if dt_target <= 0 or t_end <= 0:
        raise ConfigError("dt_target and t_end must be positive")
    return model, disp_map, grid, policy, dt_target, t_end, sample_every


def _meta_skeleton(config, grid: Grid, status, t_detect, log=None):
    meta = {
        "experiment": config.get("experiment"),
        "title": config.get("title"),
        "model": config["model"],
        "map": config["map"],
        "profile": config["profile"],
        "grid": {
            "dim": grid.dim,
            "half_width": grid.half_width,
            "n": grid.n,
            "dx": grid.dx,
        },
        "dt_target": config["dt_target"],
        "t_end": config["t_end"],
        "sample_every": config["sample_every"],
        "policy": config["policy"],
        "reference": config.get("reference", {}),
        "status": status,
        "t_detect": t_detect,
        "versions": {
            "mnls": __version__,
            "numpy": np.__version__,
            "python": platform.python_version(),
        },
    }
    if log is not None:
        dts = [ls["dt"] for ls in log.layer_steps]
        meta["stepping"] = {
            "layers": len(log.layer_steps),
            "dt_min": min(dts) if dts else None,
            "dt_max": max(dts) if dts else None,
            "total_steps": sum(ls["steps"] for ls in log.layer_steps),
        }
    return meta


def run_experiment(target: str | dict, out_dir: str | Path, overrides: dict | None = None) -> dict:
    """Run one experiment and write its artifacts under out_dir."""
    config = resolve_config(target, overrides)
    model, disp_map, grid, policy, dt_target, t_end, sample_every = _build(config)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    profile = config["profile"]
    construction_log = None
    if profile.get("kind") == "backward_construction":
        try:
            u0, construction_log = backward_blowup_data(
                kind=model.kind,
                layer_index=int(profile["layer_index"]),
                blowup_time=float(profile["blowup_time"]),
                grid=grid,
                omega=float(profile.get("omega", 1.0)),
                dt_target=dt_target,
                sample_every=sample_every,
                policy=policy,
            )
        except BlowupDuringConstruction as exc:
            # expected for the managed-Laplacian attempt: persist the
            # auxiliary trajectory as the run's primary record
            status = "blowup_during_construction"
            write_series_csv(out / "series.csv", exc.log.samples)
            write_events_jsonl(out / "events.jsonl", exc.log.events)
            meta = _meta_skeleton(config, grid, status, exc.t_detect, exc.log)
            write_meta_json(out / "meta.json", meta)
            emit_plot(out / "series.csv", "linf", out / "linf.svg")
            emit_plot(out / "series.csv", "energy", out / "energy.svg")
            return {"status": status, "t_detect": exc.t_detect, "out_dir": str(out), "meta": meta}
        write_snapshot(out / "u0.mnls", u0)
        write_series_csv(out / "construction.csv", construction_log.samples)
    else:
        u0 = field_from_record(grid, profile)

    log, final = evolve(
        model, disp_map, u0,
        t_begin=0.0, t_end=t_end,
        dt_target=dt_target, sample_every=sample_every, policy=policy,
    )
    status = "completed" if log.completed else "blowup"
    write_series_csv(out / "series.csv", log.samples)
    write_events_jsonl(out / "events.jsonl", log.events)
    snap_name = "final.mnls" if log.completed else "last_stable.mnls"
    write_snapshot(out / snap_name, final)
    meta = _meta_skeleton(config, grid, status, log.t_detect, log)
    if construction_log is not None:
        meta["construction"] = {
            "layers": len(construction_log.layer_steps),
            "samples": len(construction_log.samples),
        }
    write_meta_json(out / "meta.json", meta)
    emit_plot(out / "series.csv", "linf", out / "linf.svg")
    emit_plot(out / "series.csv", "energy", out / "energy.svg")
    return {
        "status": status,
        "t_detect": log.t_detect,
        "out_dir": str(out),
        "meta": meta,
        "log": log,
        "final": final,
    }
