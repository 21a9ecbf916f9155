"""Command-line front end.

Subcommands:

* ``force``    -- single-separation force (optionally with the
                  evanescent/propagating breakdown), JSON or CSV out.
* ``sweep``    -- separation sweep to CSV (the data behind the figures).
* ``response`` -- material response functions vs frequency to CSV.
* ``validate`` -- oracle suite; exit 0 iff every check passes.

Configuration comes from flags and/or a JSON config file (flags win).
Energies are accepted in eV, separations in um, temperatures in K; all
conversions happen here at the boundary.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys

import numpy as np

from .errors import ConfigError, ConvergenceError
from .materials import MaterialSpec, PRESETS
from .matsubara import NumericsConfig, PlateSystem, force_total, system_for_scenario
from .realfreq import force_breakdown
from .sweeps import (
    SweepTable,
    default_omega_grid,
    sweep_forces,
    sweep_material_response,
)
from .units import ev_to_angular_frequency
from .validate import CHECK_NAMES, run_validation

SCENARIOS = ("au-ni", "ni-ni", "au-au", "custom")
MODELS = ("drude", "plasma", "both")


# ---------------------------------------------------------------- config


def default_config() -> dict:
    return {
        "scenario": "au-ni",
        "model": "both",
        "temperature": 300.0,
        "separations": {"min_um": 0.5, "max_um": 6.0, "count": 23, "spacing": "log"},
        "breakdown": False,
        "numerics": {},
        "output": {"path": None, "format": None},
        "materials": {},
    }


def parse_config(text: str) -> dict:
    """Parse a JSON config document onto the defaults, validating keys."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: invalid JSON ({exc})") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config: top level must be a JSON object")
    cfg = default_config()
    for key, value in raw.items():
        if key not in cfg:
            raise ConfigError(f"config: unknown key {key!r}")
        if isinstance(cfg[key], dict) and not isinstance(value, dict):
            raise ConfigError(f"config: key {key!r} must be an object")
        if isinstance(cfg[key], dict):
            cfg[key] = {**cfg[key], **value}
        else:
            cfg[key] = value
    return cfg


def serialize_config(cfg: dict) -> str:
    return json.dumps(cfg, indent=2, sort_keys=True)


def _material_from_dict(name: str, d: dict) -> MaterialSpec:
    known = {
        "name",
        "omega_p_ev",
        "gamma_ev",
        "mu_static",
        "mu_omega1",
        "mu_omega2",
        "mu_omega_ch",
    }
    bad = set(d) - known
    if bad:
        raise ConfigError(f"materials.{name}: unknown key(s) {sorted(bad)}")
    if "omega_p_ev" not in d:
        raise ConfigError(f"materials.{name}: omega_p_ev is required")
    kwargs = {
        "name": d.get("name", name),
        "omega_p": ev_to_angular_frequency(float(d["omega_p_ev"])),
        "gamma": ev_to_angular_frequency(float(d.get("gamma_ev", 0.0))),
        "mu_static": float(d.get("mu_static", 1.0)),
    }
    for key in ("mu_omega1", "mu_omega2", "mu_omega_ch"):
        if key in d:
            kwargs[key] = float(d[key])
    try:
        return MaterialSpec(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"materials.{name}: {exc}") from exc


def _numerics_from_dict(d: dict) -> NumericsConfig:
    known = {
        "rel_tol",
        "matsubara_tail_tol",
        "l_max_cap",
        "inner_quadrature",
        "t_min_cutoff",
    }
    bad = set(d) - known
    if bad:
        raise ConfigError(f"numerics: unknown key(s) {sorted(bad)}")
    try:
        return NumericsConfig(**d)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"numerics: {exc}") from exc


def _system(cfg: dict, a: float) -> PlateSystem:
    scenario = cfg["scenario"]
    if scenario not in SCENARIOS:
        raise ConfigError(f"scenario: must be one of {SCENARIOS}, got {scenario!r}")
    T = float(cfg["temperature"])
    if T <= 0:
        raise ConfigError(f"temperature: must be > 0, got {T}")
    if scenario != "custom":
        sys_ = system_for_scenario(scenario, a, T)
        # allow preset overrides (e.g. mu_static) via the materials block
        mats = cfg.get("materials", {})
        plates = {}
        for slot in ("plate1", "plate2"):
            if slot in mats:
                plates[slot] = _material_from_dict(slot, mats[slot])
        if plates:
            sys_ = dataclasses.replace(sys_, **plates)
        return sys_
    mats = cfg.get("materials", {})
    if "plate1" not in mats or "plate2" not in mats:
        raise ConfigError(
            "materials: custom scenario requires 'plate1' and 'plate2' entries"
        )
    return PlateSystem(
        plate1=_material_from_dict("plate1", mats["plate1"]),
        plate2=_material_from_dict("plate2", mats["plate2"]),
        a=a,
        T=T,
    )


def _models(cfg: dict) -> list:
    model = cfg["model"]
    if model not in MODELS:
        raise ConfigError(f"model: must be one of {MODELS}, got {model!r}")
    return ["drude", "plasma"] if model == "both" else [model]


def _separations(cfg: dict) -> list:
    sep = cfg["separations"]
    if isinstance(sep, dict) and "list_um" in sep:
        vals = [float(x) * 1e-6 for x in sep["list_um"]]
        if not vals:
            raise ConfigError("separations.list_um: must be nonempty")
        return vals
    if not isinstance(sep, dict):
        raise ConfigError("separations: must be an object")
    try:
        lo, hi = float(sep["min_um"]), float(sep["max_um"])
        count = int(sep["count"])
        spacing = sep.get("spacing", "log")
    except KeyError as exc:
        raise ConfigError(f"separations: missing key {exc.args[0]!r}") from exc
    if count < 1:
        raise ConfigError(f"separations.count: must be >= 1, got {count}")
    if not 0 < lo <= hi:
        raise ConfigError("separations: need 0 < min_um <= max_um")
    if spacing == "log":
        grid = np.logspace(math.log10(lo), math.log10(hi), count)
    elif spacing == "lin":
        grid = np.linspace(lo, hi, count)
    else:
        raise ConfigError(f"separations.spacing: must be 'lin' or 'log', got {spacing!r}")
    return [float(g) * 1e-6 for g in grid]


def _breakdown_dict(bd) -> dict:
    out = {
        "schema_version": 1,
        "a_um": bd.a * 1e6,
        "T_K": bd.T,
        "model": bd.model,
        "F_total_Pa": bd.F_total,
        "F_TM_Pa": bd.F_TM,
        "F_TE_Pa": bd.F_TE,
        "F_TM_evan_Pa": bd.F_TM_evan,
        "F_TM_prop_Pa": bd.F_TM_prop,
        "F_TE_evan_Pa": bd.F_TE_evan,
        "F_TE_prop_Pa": bd.F_TE_prop,
        "F_ref_Pa": bd.F_ref,
        "ratios": bd.ratios,
    }
    return out


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


# ------------------------------------------------------------- commands


def cmd_force(cfg: dict) -> int:
    seps = _separations(cfg)
    if len(seps) != 1:
        raise ConfigError(
            f"separations: the force command needs exactly one separation, got {len(seps)}"
        )
    a = seps[0]
    if a <= 0:
        raise ConfigError(f"separations: must be > 0, got {a * 1e6} um")
    ncfg = _numerics_from_dict(cfg["numerics"])
    records = []
    for model in _models(cfg):
        sys_ = _system(cfg, a)
        bd = (
            force_breakdown(sys_, model, ncfg)
            if cfg["breakdown"]
            else force_total(sys_, model, ncfg)
        )
        records.append(_breakdown_dict(bd))
    fmt = cfg["output"]["format"] or "json"
    if fmt == "json":
        _emit(json.dumps(records, indent=2), cfg["output"]["path"])
    elif fmt == "csv":
        # reuse the sweep writer for a single-row table
        table = sweep_forces(
            _system(cfg, a),
            _models(cfg),
            [a],
            ncfg,
            breakdown=cfg["breakdown"],
            scenario=cfg["scenario"],
        )
        _emit(table.to_csv(), cfg["output"]["path"])
    else:
        raise ConfigError(f"output.format: must be 'csv' or 'json', got {fmt!r}")
    return 0


def cmd_sweep(cfg: dict) -> int:
    seps = _separations(cfg)
    ncfg = _numerics_from_dict(cfg["numerics"])
    table = sweep_forces(
        _system(cfg, seps[0]),
        _models(cfg),
        sorted(seps),
        ncfg,
        breakdown=cfg["breakdown"],
        scenario=cfg["scenario"],
    )
    fmt = cfg["output"]["format"] or "csv"
    if fmt == "csv":
        payload = table.to_csv()
    elif fmt == "json":
        payload = json.dumps(
            {
                "schema_version": 1,
                "scenario": table.scenario,
                "columns": table.columns,
                "rows": table.rows,
                "metadata": table.metadata,
            },
            indent=2,
        )
    else:
        raise ConfigError(f"output.format: must be 'csv' or 'json', got {fmt!r}")
    _emit(payload, cfg["output"]["path"])
    return 0


def cmd_response(cfg: dict, materials: list, omega_grid) -> int:
    tables = []
    for name in materials:
        key = name.lower()
        if key in PRESETS:
            spec = PRESETS[key]()
        else:
            mats = cfg.get("materials", {})
            if key not in mats:
                raise ConfigError(f"material: unknown material {name!r}")
            spec = _material_from_dict(key, mats[key])
        tables.append(sweep_material_response(spec, omega_grid))
    merged = SweepTable(
        scenario="response",
        columns=tables[0].columns,
        rows=[row for t in tables for row in t.rows],
        metadata={"materials": [t.metadata["material"] for t in tables]},
    )
    fmt = cfg["output"]["format"] or "csv"
    if fmt != "csv":
        raise ConfigError("output.format: response supports only 'csv'")
    _emit(merged.to_csv(), cfg["output"]["path"])
    return 0


def cmd_validate(cfg: dict, checks, tamper: bool) -> int:
    ncfg = _numerics_from_dict(cfg["numerics"])
    scenario = cfg["scenario"]
    scenarios = ("au-ni", "ni-ni", "au-au") if scenario == "custom" else (scenario,)
    if "scenario" not in cfg.get("_explicit", ()):
        scenarios = ("au-ni", "ni-ni", "au-au")
    report = run_validation(
        ncfg,
        checks=checks or CHECK_NAMES,
        scenarios=scenarios,
        tamper=1.01 if tamper else 1.0,
    )
    _emit(json.dumps(report, indent=2), cfg["output"]["path"])
    return 0 if report["passed"] else 1


# ----------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="casimir-plates",
        description="Casimir force per unit area between parallel metal plates",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="JSON config file; flags override it")
        sp.add_argument("--scenario", choices=SCENARIOS)
        sp.add_argument("--model", choices=MODELS)
        sp.add_argument("--temperature", type=float, help="kelvin")
        sp.add_argument("--output", help="output file path (default: stdout)")
        sp.add_argument("--format", choices=("csv", "json"))
        sp.add_argument("--rel-tol", type=float)
        sp.add_argument("--tail-tol", type=float)
        sp.add_argument("--l-max", type=int)
        sp.add_argument("--t-min", type=float)

    sp = sub.add_parser("force", help="force at a single separation")
    common(sp)
    sp.add_argument("--a-um", type=float, help="separation in micrometers")
    sp.add_argument("--breakdown", action="store_true",
                    help="include evanescent/propagating fractions")

    sp = sub.add_parser("sweep", help="separation sweep to CSV")
    common(sp)
    sp.add_argument("--a-min-um", type=float)
    sp.add_argument("--a-max-um", type=float)
    sp.add_argument("--a-count", type=int)
    sp.add_argument("--spacing", choices=("lin", "log"))
    sp.add_argument("--a-list-um", help="comma-separated explicit separations")
    sp.add_argument("--breakdown", action="store_true")

    sp = sub.add_parser("response", help="material response functions to CSV")
    common(sp)
    sp.add_argument("--material", action="append",
                    help="au, ni, or a key from the config materials block; repeatable")
    sp.add_argument("--omega-min", type=float, default=1e3)
    sp.add_argument("--omega-max", type=float, default=1e16)
    sp.add_argument("--omega-count", type=int, default=400)

    sp = sub.add_parser("validate", help="run the oracle validation suite")
    common(sp)
    sp.add_argument("--check", action="append", choices=CHECK_NAMES,
                    help="restrict to specific checks; repeatable")
    sp.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)

    return p


def _merge_flags(cfg: dict, args: argparse.Namespace) -> dict:
    explicit = set()
    if getattr(args, "scenario", None):
        cfg["scenario"] = args.scenario
        explicit.add("scenario")
    if getattr(args, "model", None):
        cfg["model"] = args.model
    if getattr(args, "temperature", None) is not None:
        cfg["temperature"] = args.temperature
    if getattr(args, "output", None):
        cfg["output"]["path"] = args.output
    if getattr(args, "format", None):
        cfg["output"]["format"] = args.format
    for flag, key in (
        ("rel_tol", "rel_tol"),
        ("tail_tol", "matsubara_tail_tol"),
        ("l_max", "l_max_cap"),
        ("t_min", "t_min_cutoff"),
    ):
        val = getattr(args, flag, None)
        if val is not None:
            cfg["numerics"][key] = val
    if getattr(args, "breakdown", False):
        cfg["breakdown"] = True
    if getattr(args, "a_um", None) is not None:
        if args.a_um <= 0:
            raise ConfigError(f"a-um: must be > 0, got {args.a_um}")
        cfg["separations"] = {"list_um": [args.a_um]}
    if getattr(args, "a_list_um", None) is not None:
        try:
            vals = [float(x) for x in args.a_list_um.split(",") if x.strip()]
        except ValueError as exc:
            raise ConfigError(f"a-list-um: {exc}") from exc
        if not vals:
            raise ConfigError("a-list-um: must list at least one separation")
        cfg["separations"] = {"list_um": vals}
    grid_flags = [getattr(args, k, None) for k in ("a_min_um", "a_max_um", "a_count")]
    if any(v is not None for v in grid_flags):
        sep = dict(cfg["separations"]) if "list_um" not in cfg["separations"] else {}
        sep.setdefault("min_um", 0.5)
        sep.setdefault("max_um", 6.0)
        sep.setdefault("count", 23)
        sep.setdefault("spacing", "log")
        if args.a_min_um is not None:
            sep["min_um"] = args.a_min_um
        if args.a_max_um is not None:
            sep["max_um"] = args.a_max_um
        if args.a_count is not None:
            sep["count"] = args.a_count
        if getattr(args, "spacing", None):
            sep["spacing"] = args.spacing
        cfg["separations"] = sep
    cfg["_explicit"] = tuple(explicit)
    return cfg


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.config:
            if not os.path.exists(args.config):
                raise ConfigError(f"config: file not found: {args.config}")
            with open(args.config, encoding="utf-8") as fh:
                cfg = parse_config(fh.read())
        else:
            cfg = default_config()
        cfg = _merge_flags(cfg, args)
        if args.command == "force":
            if "list_um" not in cfg["separations"]:
                raise ConfigError("a-um: the force command requires --a-um")
            return cmd_force(cfg)
        if args.command == "sweep":
            return cmd_sweep(cfg)
        if args.command == "response":
            mats = args.material or ["au", "ni"]
            if args.omega_count < 2 or args.omega_min <= 0 or args.omega_min >= args.omega_max:
                raise ConfigError("omega grid: need omega-min < omega-max and count >= 2")
            grid = default_omega_grid(args.omega_count, args.omega_min, args.omega_max)
            return cmd_response(cfg, mats, grid)
        if args.command == "validate":
            return cmd_validate(cfg, args.check, args.tamper)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"numerical non-convergence: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
