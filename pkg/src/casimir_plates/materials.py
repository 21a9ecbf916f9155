"""Dielectric permittivity and magnetic permeability models for the plate metals.

Two permittivity models for conduction electrons:

* ``drude``  -- dissipative, relaxation parameter gamma,
* ``plasma`` -- dissipationless, double pole at zero frequency,

evaluated either at pure imaginary Matsubara frequencies (real-valued,
> 1) or at real frequencies (complex).  The magnetic response of a soft
ferromagnet is a step on the Matsubara axis (initial permeability at
l = 0, unity above) and a piecewise Debye relaxation on the real axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .units import ev_to_angular_frequency

EPS_MODELS = ("drude", "plasma")


@dataclass(frozen=True)
class MaterialSpec:
    """Electromagnetic response parameters of one plate material.

    Frequencies are angular, rad/s.  ``mu_static`` is the zero-field
    initial permeability; the Debye band (omega_1, omega_2] with
    characteristic frequency omega_ch describes its decay to 1 on the
    real axis.  Nonmagnetic metals use mu_static = 1 (the band values
    are then irrelevant).
    """

    name: str
    omega_p: float          # plasma frequency, rad/s
    gamma: float            # relaxation parameter at 300 K, rad/s
    mu_static: float = 1.0
    mu_omega1: float = 2 * math.pi * 1e5
    mu_omega2: float = 6 * math.pi * 1e9
    mu_omega_ch: float = 2 * math.pi * 1e7

    def __post_init__(self):
        if self.omega_p <= 0:
            raise ValueError(f"omega_p must be > 0, got {self.omega_p}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if self.mu_static < 1:
            raise ValueError(f"mu_static must be >= 1, got {self.mu_static}")
        if not (0 < self.mu_omega1 < self.mu_omega_ch < self.mu_omega2):
            raise ValueError(
                "permeability band must satisfy 0 < omega_1 < omega_ch < omega_2"
            )

    def with_mu_static(self, mu_static: float) -> "MaterialSpec":
        """Copy of this spec with a different initial permeability."""
        return replace(self, mu_static=mu_static)


def gold() -> MaterialSpec:
    """Au preset: hbar*omega_p = 9.0 eV, hbar*gamma = 0.035 eV, nonmagnetic."""
    return MaterialSpec(
        name="Au",
        omega_p=ev_to_angular_frequency(9.0),
        gamma=ev_to_angular_frequency(0.035),
    )


def nickel() -> MaterialSpec:
    """Ni preset: hbar*omega_p = 4.89 eV, hbar*gamma = 0.0436 eV, mu(0) = 110."""
    return MaterialSpec(
        name="Ni",
        omega_p=ev_to_angular_frequency(4.89),
        gamma=ev_to_angular_frequency(0.0436),
        mu_static=110.0,
    )


PRESETS = {"au": gold, "ni": nickel}


def eps_imaginary(spec: MaterialSpec, xi: float, model: str) -> float:
    """Permittivity at the imaginary frequency i*xi (xi > 0), real valued.

    Drude: 1 + omega_p^2 / (xi (xi + gamma)); plasma: 1 + omega_p^2 / xi^2.
    Both diverge at xi = 0: the zero-frequency physics lives in the
    analytic reflection-coefficient limits, so xi <= 0 is rejected here.
    """
    if xi <= 0:
        raise ValueError(
            "eps_imaginary requires xi > 0; use the zero-frequency "
            "reflection limits for the l = 0 term"
        )
    if model == "drude":
        return 1.0 + spec.omega_p**2 / (xi * (xi + spec.gamma))
    if model == "plasma":
        return 1.0 + spec.omega_p**2 / xi**2
    raise ValueError(f"unknown permittivity model {model!r}")


def eps_real(spec: MaterialSpec, omega, model: str):
    """Permittivity at a real frequency omega > 0 (complex valued).

    Drude: 1 - omega_p^2 / (omega (omega + i gamma)); plasma:
    1 - omega_p^2 / omega^2.  Accepts scalars or numpy arrays.
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0):
        raise ValueError("eps_real requires omega > 0")
    if model == "drude":
        out = 1.0 - spec.omega_p**2 / (omega * (omega + 1j * spec.gamma))
    elif model == "plasma":
        out = (1.0 - spec.omega_p**2 / omega**2) + 0j
    else:
        raise ValueError(f"unknown permittivity model {model!r}")
    return out if out.ndim else complex(out)


def mu_matsubara(spec: MaterialSpec, l: int) -> float:
    """Permeability at the l-th Matsubara frequency: mu(0) at l = 0, else 1."""
    if l < 0:
        raise ValueError(f"Matsubara index must be >= 0, got {l}")
    return spec.mu_static if l == 0 else 1.0


def mu_real(spec: MaterialSpec, omega):
    """Debye-model permeability at a real frequency omega >= 0 (complex).

    mu(0) up to omega_1; 1 + (mu(0)-1)/(1 - i omega/omega_ch) inside
    (omega_1, omega_2]; exactly 1 above omega_2.  The jumps at the band
    edges are kept as written.  Accepts scalars or numpy arrays.
    """
    scalar = np.ndim(omega) == 0
    om = np.atleast_1d(np.asarray(omega, dtype=float))
    if np.any(om < 0):
        raise ValueError("mu_real requires omega >= 0")
    out = np.ones(om.shape, dtype=complex)
    if spec.mu_static != 1.0:
        out[om <= spec.mu_omega1] = spec.mu_static
        band = (om > spec.mu_omega1) & (om <= spec.mu_omega2)
        out[band] = 1.0 + (spec.mu_static - 1.0) / (
            1.0 - 1j * om[band] / spec.mu_omega_ch
        )
    return complex(out[0]) if scalar else out
