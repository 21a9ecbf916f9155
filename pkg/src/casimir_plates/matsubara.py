"""Casimir pressure from the Matsubara-frequency formulation.

Each polarization contributes a sum over Matsubara indices of a
semi-infinite transverse-momentum integral.  With the substitution
y = 2 a q_l the l-th inner integral becomes

    G_l = int_{y0}^{inf} y^2 x / (1 - x) dy,   x = r1 r2 e^{-y},

with y0 = 2 a xi_l / c, and the pressure is

    F_pol = -(k_B T / (8 pi a^3)) * sum_l G_l.

The l = 0 term enters at full weight: this normalization makes the
high-temperature limit of the total force equal the reference pressure
-k_B T zeta(3)/(4 pi a^3) (the TM zero-frequency term alone reproduces
it exactly), which anchors all normalized outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import ConvergenceError
from .materials import MaterialSpec, eps_imaginary, gold, nickel
from .quadrature import adaptive_gk15
from .reflection import r_imag_scaled, r_zero_frequency
from .units import CONST, ZETA3, matsubara_frequency

# The y-integrand carries e^{-y}; 45 e-foldings bound the discarded tail
# by ~1e-16 relative even against y^2 growth.
_Y_SPAN = 45.0


@dataclass(frozen=True)
class PlateSystem:
    """Two plate materials, separation and temperature."""

    plate1: MaterialSpec
    plate2: MaterialSpec
    a: float   # m
    T: float   # K

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"separation must be > 0, got {self.a}")
        if self.T <= 0:
            raise ValueError(f"temperature must be > 0, got {self.T}")

    def with_mu_static(self, mu_static: float) -> "PlateSystem":
        """Both plates' initial permeability replaced (for mu sensitivity checks)."""
        return replace(
            self,
            plate1=self.plate1.with_mu_static(
                mu_static if self.plate1.mu_static != 1.0 else 1.0
            ),
            plate2=self.plate2.with_mu_static(
                mu_static if self.plate2.mu_static != 1.0 else 1.0
            ),
        )


def system_for_scenario(scenario: str, a: float, T: float = 300.0) -> PlateSystem:
    """Preset plate pairs: 'au-ni', 'ni-ni' or 'au-au'."""
    pairs = {
        "au-ni": (gold, nickel),
        "ni-ni": (nickel, nickel),
        "au-au": (gold, gold),
    }
    if scenario not in pairs:
        raise ValueError(f"unknown scenario {scenario!r}; expected one of {sorted(pairs)}")
    f1, f2 = pairs[scenario]
    return PlateSystem(plate1=f1(), plate2=f2(), a=a, T=T)


@dataclass(frozen=True)
class NumericsConfig:
    """Quadrature tolerances and truncation policy."""

    rel_tol: float = 1e-9
    matsubara_tail_tol: float = 1e-10
    l_max_cap: int = 20_000
    inner_quadrature: str = "gk15-adaptive"
    t_min_cutoff: float = 1e-8

    def __post_init__(self):
        if not (0.0 < self.matsubara_tail_tol <= self.rel_tol < 1.0):
            raise ValueError(
                "tolerances must satisfy 0 < matsubara_tail_tol <= rel_tol < 1"
            )
        if self.inner_quadrature != "gk15-adaptive":
            raise ValueError(
                f"unsupported inner_quadrature {self.inner_quadrature!r}"
            )
        if self.t_min_cutoff <= 0:
            raise ValueError("t_min_cutoff must be > 0")


@dataclass
class ForceBreakdown:
    """Signed pressures in Pa; evanescent/propagating fields are optional."""

    a: float
    T: float
    model: str
    F_total: float
    F_TM: float
    F_TE: float
    F_ref: float
    F_TM_evan: Optional[float] = None
    F_TM_prop: Optional[float] = None
    F_TE_evan: Optional[float] = None
    F_TE_prop: Optional[float] = None
    ratios: dict = field(default_factory=dict)

    def fill_ratios(self):
        r = {
            "total": self.F_total / self.F_ref,
            "TM": self.F_TM / self.F_ref,
            "TE": self.F_TE / self.F_ref,
        }
        for key in ("TM_evan", "TM_prop", "TE_evan", "TE_prop"):
            v = getattr(self, "F_" + key)
            if v is not None:
                r[key] = v / self.F_ref
        self.ratios = r
        return self


def reference_high_temperature(a: float, T: float) -> float:
    """High-temperature reference pressure -k_B T zeta(3) / (4 pi a^3)."""
    if a <= 0 or T <= 0:
        raise ValueError("need a > 0 and T > 0")
    return -CONST.k_B * T * ZETA3 / (4.0 * math.pi * a**3)


def _inner_integral_zero(pol, sys: PlateSystem, model: str, eps_quad: float) -> float:
    """G_0: zero-frequency inner integral (q_0 = k_perp, y = 2 a k_perp)."""
    inv_2a = 1.0 / (2.0 * sys.a)

    def f(y):
        k = y * inv_2a
        r1 = r_zero_frequency(pol, sys.plate1, k, model)
        r2 = r_zero_frequency(pol, sys.plate2, k, model)
        x = r1 * r2 * np.exp(-y)
        return y * y * x / (1.0 - x)

    res = adaptive_gk15(f, 0.0, _Y_SPAN, epsabs=1e-300, epsrel=eps_quad)
    return res.value


def _inner_integral(pol, sys: PlateSystem, model: str, l: int, eps_quad: float) -> float:
    """G_l for l >= 1 over y in [y0, y0 + span]."""
    xi = matsubara_frequency(l, sys.T)
    y0 = 2.0 * sys.a * xi / CONST.c
    e1 = eps_imaginary(sys.plate1, xi, model)
    e2 = eps_imaginary(sys.plate2, xi, model)

    def f(y):
        r1 = r_imag_scaled(pol, y, y0, e1)
        r2 = r_imag_scaled(pol, y, y0, e2)
        x = r1 * r2 * np.exp(-y)
        return y * y * x / (1.0 - x)

    res = adaptive_gk15(f, y0, y0 + _Y_SPAN, epsabs=1e-300, epsrel=eps_quad)
    return res.value


def force_polarization_matsubara(
    pol: str, sys: PlateSystem, model: str, cfg: NumericsConfig = NumericsConfig()
) -> float:
    """One polarization's pressure (Pa) from the truncated Matsubara sum.

    Truncates once the last term is below matsubara_tail_tol times the
    accumulated sum for 3 consecutive indices (individual TE terms can be
    anomalously small, so a single quiet term is not trusted).
    """
    eps_quad = 0.1 * cfg.rel_tol
    pref = -CONST.k_B * sys.T / (8.0 * math.pi * sys.a**3)
    total = _inner_integral_zero(pol, sys, model, eps_quad)
    consecutive = 0
    for l in range(1, cfg.l_max_cap + 1):
        g = _inner_integral(pol, sys, model, l, eps_quad)
        total += g
        if abs(g) < cfg.matsubara_tail_tol * abs(total):
            consecutive += 1
            if consecutive >= 3:
                return pref * total
        else:
            consecutive = 0
    raise ConvergenceError(
        f"Matsubara sum not converged at l_max_cap={cfg.l_max_cap} "
        f"(pol={pol}, a={sys.a}, model={model})",
        estimate=pref * total,
        error_bound=abs(pref * total) * cfg.matsubara_tail_tol * cfg.l_max_cap,
    )


def force_total(
    sys: PlateSystem, model: str, cfg: NumericsConfig = NumericsConfig()
) -> ForceBreakdown:
    """Total pressure and its TM/TE split (Matsubara fields only)."""
    f_tm = force_polarization_matsubara("TM", sys, model, cfg)
    f_te = force_polarization_matsubara("TE", sys, model, cfg)
    out = ForceBreakdown(
        a=sys.a,
        T=sys.T,
        model=model,
        F_total=f_tm + f_te,
        F_TM=f_tm,
        F_TE=f_te,
        F_ref=reference_high_temperature(sys.a, sys.T),
    )
    return out.fill_ratios()
