"""Oracle-based validation suite.

Each check compares an engine output against an independent closed form
or a stated bound and reports {name, measured, bound, passed}.  The CLI
`validate` subcommand and the acceptance tests both run these.
"""

from __future__ import annotations

from dataclasses import replace

from .matsubara import (
    NumericsConfig,
    force_polarization_matsubara,
    force_total,
    reference_high_temperature,
    system_for_scenario,
)
from .realfreq import (
    PLASMA_NULL_BOUND,
    T_MAX,
    W_MAX,
    certify_plasma_null,
    force_evanescent,
)
from .reference import (
    classical_total,
    ideal_metal_zero_temperature,
    polylog3,
)
from .units import ZETA3

STANDARD_GRID_UM = (0.5, 1.0, 2.0, 4.0, 6.0)

CHECK_NAMES = (
    "classical-limit",
    "plasma-null",
    "ideal-metal",
    "mu-independence",
    "convergence",
)


def _entry(name, measured, bound, passed, **extra):
    out = {"name": name, "measured": measured, "bound": bound, "passed": bool(passed)}
    out.update(extra)
    return out


def check_classical_limit(cfg: NumericsConfig, tamper: float = 1.0) -> list:
    """force_total at 30 um against the Li3 closed forms."""
    a, T = 30e-6, 300.0
    out = []
    for scenario, target, tol in (
        ("au-ni", 1.0, 0.005),
        ("ni-ni", 1.0 + polylog3((109.0 / 111.0) ** 2) / ZETA3, 0.01),
    ):
        sys = system_for_scenario(scenario, a, T)
        ratio = force_total(sys, "drude", cfg).F_total / (
            reference_high_temperature(a, T) * tamper
        )
        rel = abs(ratio - target) / target
        out.append(
            _entry(
                f"classical-limit/{scenario}",
                ratio,
                f"{target:.6f} +- {tol:.1%}",
                rel < tol,
            )
        )
        # cross-check the closed-form sum against the engine as well
        cl = classical_total(sys, "drude") / reference_high_temperature(a, T)
        out.append(
            _entry(
                f"classical-limit/{scenario}/closed-form-consistency",
                cl,
                f"{target:.6f} +- 1%",
                abs(cl - target) / target < 0.01,
            )
        )
    return out


def check_plasma_null(
    cfg: NumericsConfig, scenarios=("au-ni", "ni-ni", "au-au"), grid_um=STANDARD_GRID_UM
) -> list:
    systems = [
        system_for_scenario(s, a_um * 1e-6, 300.0)
        for s in scenarios
        for a_um in grid_um
    ]
    report = certify_plasma_null(systems, cfg)
    out = [
        _entry(
            f"plasma-null/{c['plates']}/{c['polarization']}/a={c['a_um']:g}um",
            c["ratio"],
            PLASMA_NULL_BOUND,
            c["passed"],
        )
        for c in report["checks"]
    ]
    return out


def check_ideal_metal(cfg: NumericsConfig) -> list:
    """Plasma model, omega_p x100, T = 1 K, a = 0.5 um vs the 0 K closed form."""
    a, T = 0.5e-6, 1.0
    base = system_for_scenario("au-au", a, T)
    sys = replace(
        base,
        plate1=replace(base.plate1, omega_p=base.plate1.omega_p * 100.0),
        plate2=replace(base.plate2, omega_p=base.plate2.omega_p * 100.0),
    )
    total = force_total(sys, "plasma", cfg).F_total
    target = ideal_metal_zero_temperature(a)
    rel = abs(total - target) / abs(target)
    return [_entry("ideal-metal", total / target, "1 +- 1%", rel < 0.01)]


def check_mu_independence(cfg: NumericsConfig, grid_um=STANDARD_GRID_UM) -> list:
    out = []
    for scenario in ("au-ni", "ni-ni"):
        for a_um in grid_um:
            sys = system_for_scenario(scenario, a_um * 1e-6, 300.0)
            sys1 = sys.with_mu_static(1.0)
            f = force_polarization_matsubara("TM", sys, "drude", cfg)
            f1 = force_polarization_matsubara("TM", sys1, "drude", cfg)
            rel = abs(f - f1) / abs(f)
            out.append(
                _entry(
                    f"mu-independence/TM/{scenario}/a={a_um:g}um", rel, 1e-3, rel < 1e-3
                )
            )
            e = force_evanescent("TE", sys, "drude", cfg).value
            e1 = force_evanescent("TE", sys1, "drude", cfg).value
            rel = abs(e - e1) / abs(e)
            out.append(
                _entry(
                    f"mu-independence/TE-evan-drude/{scenario}/a={a_um:g}um",
                    rel,
                    1e-3,
                    rel < 1e-3,
                )
            )
    # magnetism must act through the TE propagating fraction (plasma, Ni-Ni)
    sys = system_for_scenario("ni-ni", 1e-6, 300.0)
    sys1 = sys.with_mu_static(1.0)
    prop = force_polarization_matsubara("TE", sys, "plasma", cfg) - force_evanescent(
        "TE", sys, "plasma", cfg
    ).value
    prop1 = force_polarization_matsubara("TE", sys1, "plasma", cfg) - force_evanescent(
        "TE", sys1, "plasma", cfg
    ).value
    rel = abs(prop - prop1) / abs(prop)
    out.append(_entry("mu-independence/TE-prop-plasma/ni-ni/a=1um", rel, ">5e-2", rel > 0.05))
    return out


def check_convergence(cfg: NumericsConfig) -> list:
    """Halve tolerances / move domain edges; changes must sit inside the
    previously reported error estimate."""
    sys = system_for_scenario("au-ni", 1e-6, 300.0)
    out = []
    for pol in ("TM", "TE"):
        base = force_evanescent(pol, sys, "drude", cfg)
        tight = force_evanescent(
            pol, sys, "drude", replace(cfg, rel_tol=0.5 * cfg.rel_tol)
        )
        out.append(
            _entry(
                f"convergence/rel-tol-halved/{pol}",
                abs(tight.value - base.value),
                base.error,
                abs(tight.value - base.value) < base.error,
            )
        )
        half_tmin = force_evanescent(
            pol, sys, "drude", replace(cfg, t_min_cutoff=0.5 * cfg.t_min_cutoff)
        )
        out.append(
            _entry(
                f"convergence/t-min-halved/{pol}",
                abs(half_tmin.value - base.value),
                base.error,
                abs(half_tmin.value - base.value) < base.error,
            )
        )
        wide_t = force_evanescent(pol, sys, "drude", cfg, t_max=2.0 * T_MAX)
        out.append(
            _entry(
                f"convergence/t-max-doubled/{pol}",
                abs(wide_t.value - base.value),
                base.error,
                abs(wide_t.value - base.value) < base.error,
            )
        )
        wide_w = force_evanescent(pol, sys, "drude", cfg, w_max=2.0 * W_MAX)
        out.append(
            _entry(
                f"convergence/w-max-doubled/{pol}",
                abs(wide_w.value - base.value),
                base.error,
                abs(wide_w.value - base.value) < base.error,
            )
        )
    # Matsubara side: halving rel_tol must stay within the tail tolerance
    f = force_polarization_matsubara("TM", sys, "drude", cfg)
    f2 = force_polarization_matsubara(
        "TM", sys, "drude", replace(cfg, rel_tol=0.5 * cfg.rel_tol,
                                    matsubara_tail_tol=0.5 * cfg.matsubara_tail_tol)
    )
    rel = abs(f - f2) / abs(f)
    out.append(_entry("convergence/matsubara-rel-tol-halved", rel,
                      10.0 * cfg.matsubara_tail_tol, rel < 10.0 * cfg.matsubara_tail_tol))
    return out


def run_validation(
    cfg: NumericsConfig | None = None,
    checks=CHECK_NAMES,
    scenarios=("au-ni", "ni-ni", "au-au"),
    tamper: float = 1.0,
) -> dict:
    """Run the selected checks and assemble the machine-readable report."""
    cfg = cfg or NumericsConfig()
    runners = {
        "classical-limit": lambda: check_classical_limit(cfg, tamper),
        "plasma-null": lambda: check_plasma_null(cfg, scenarios),
        "ideal-metal": lambda: check_ideal_metal(cfg),
        "mu-independence": lambda: check_mu_independence(cfg),
        "convergence": lambda: check_convergence(cfg),
    }
    unknown = [c for c in checks if c not in runners]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}; expected subset of {CHECK_NAMES}")
    results = []
    for name in checks:
        results.extend(runners[name]())
    return {
        "schema_version": 1,
        "checks": results,
        "passed": all(c["passed"] for c in results),
        "n_failed": sum(not c["passed"] for c in results),
    }
