"""Separation sweeps and material-response sweeps behind the plotted data.

Every row normalizes the pressures by the high-temperature reference, so
tables are directly comparable across separations.  Rows are computed in
grid order (optionally on a thread pool, see CASIMIR_PLATES_THREADS) and
always emitted in grid order, so identical configurations produce
byte-identical CSV files.
"""

from __future__ import annotations

import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .materials import MaterialSpec, eps_real, mu_real
from .matsubara import ForceBreakdown, NumericsConfig, PlateSystem, force_total
from .realfreq import force_breakdown

SWEEP_COLUMNS = [
    "a_um",
    "model",
    "F_total_Pa",
    "F_TM_Pa",
    "F_TE_Pa",
    "F_TM_evan_Pa",
    "F_TM_prop_Pa",
    "F_TE_evan_Pa",
    "F_TE_prop_Pa",
    "F_ref_Pa",
    "ratio_total",
    "ratio_TM",
    "ratio_TE",
    "ratio_TM_evan",
    "ratio_TM_prop",
    "ratio_TE_evan",
    "ratio_TE_prop",
]

RESPONSE_COLUMNS = [
    "material",
    "omega_rad_s",
    "abs_re_eps_drude",
    "im_eps_drude",
    "abs_eps_plasma",
    "re_mu",
    "im_mu",
]


@dataclass
class SweepTable:
    """Rows plus enough metadata to reproduce them bit-identically."""

    scenario: str
    columns: list
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        """Locale-independent CSV: comma separator, LF newlines, repr floats."""
        buf = io.StringIO()
        buf.write(",".join(self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        return buf.getvalue()


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _n_threads() -> int:
    raw = os.environ.get("CASIMIR_PLATES_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _breakdown_row(bd: ForceBreakdown, a: float) -> list:
    r = bd.ratios
    return [
        a * 1e6,
        bd.model,
        bd.F_total,
        bd.F_TM,
        bd.F_TE,
        bd.F_TM_evan,
        bd.F_TM_prop,
        bd.F_TE_evan,
        bd.F_TE_prop,
        bd.F_ref,
        r.get("total"),
        r.get("TM"),
        r.get("TE"),
        r.get("TM_evan"),
        r.get("TM_prop"),
        r.get("TE_evan"),
        r.get("TE_prop"),
    ]


def sweep_forces(
    sys_template: PlateSystem,
    models,
    a_grid,
    cfg: NumericsConfig = NumericsConfig(),
    *,
    breakdown: bool = False,
    scenario: str = "custom",
) -> SweepTable:
    """One row per (separation, model), ratios normalized by the reference.

    ``a_grid`` must be nonempty, sorted ascending and inside [0.1, 100] um.
    """
    a_grid = list(a_grid)
    if not a_grid:
        raise ValueError("a_grid must be nonempty")
    if any(not 1e-7 <= a <= 1e-4 for a in a_grid):
        raise ValueError("separations must lie within [0.1, 100] um")
    if any(b <= a for a, b in zip(a_grid, a_grid[1:])):
        raise ValueError("a_grid must be strictly increasing")
    if isinstance(models, str):
        models = [models]

    tasks = [(a, model) for model in models for a in a_grid]

    def compute(task):
        a, model = task
        sys = replace(sys_template, a=a)
        bd = force_breakdown(sys, model, cfg) if breakdown else force_total(sys, model, cfg)
        return _breakdown_row(bd, a)

    n = _n_threads()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            rows = list(pool.map(compute, tasks))
    else:
        rows = [compute(t) for t in tasks]

    return SweepTable(
        scenario=scenario,
        columns=SWEEP_COLUMNS,
        rows=rows,
        metadata={
            "T_K": sys_template.T,
            "models": list(models),
            "breakdown": breakdown,
            "rel_tol": cfg.rel_tol,
            "t_min_cutoff": cfg.t_min_cutoff,
            "constants": "CODATA2018",
        },
    )


def sweep_material_response(spec: MaterialSpec, omega_grid) -> SweepTable:
    """Response-function columns per frequency for one material."""
    omega_grid = np.asarray(list(omega_grid), dtype=float)
    if omega_grid.size == 0:
        raise ValueError("omega_grid must be nonempty")
    if np.any(omega_grid <= 0):
        raise ValueError("omega_grid must be positive")
    if np.any(np.diff(omega_grid) <= 0):
        raise ValueError("omega_grid must be strictly increasing")
    eps_d = eps_real(spec, omega_grid, "drude")
    eps_p = eps_real(spec, omega_grid, "plasma")
    mu = mu_real(spec, omega_grid)
    rows = [
        [
            spec.name,
            float(om),
            abs(float(ed.real)),
            float(ed.imag),
            abs(float(ep.real)),
            float(m.real),
            float(m.imag),
        ]
        for om, ed, ep, m in zip(omega_grid, eps_d, eps_p, mu)
    ]
    return SweepTable(
        scenario=f"response-{spec.name}",
        columns=RESPONSE_COLUMNS,
        rows=rows,
        metadata={"material": spec.name, "constants": "CODATA2018"},
    )


def default_separation_grid(n: int = 23, lo_um: float = 0.5, hi_um: float = 6.0):
    """Log-spaced separations in meters (defaults match the figure sweeps)."""
    return list(np.logspace(np.log10(lo_um), np.log10(hi_um), n) * 1e-6)


def default_omega_grid(n: int = 400, lo: float = 1e3, hi: float = 1e16):
    """Log-spaced angular frequencies for response sweeps."""
    return list(np.logspace(np.log10(lo), np.log10(hi), n))
