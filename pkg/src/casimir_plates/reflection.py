"""Fresnel-type reflection coefficients at a vacuum-metal interface.

Three forms are needed by the force engines:

* on the imaginary frequency axis at Matsubara points (real valued),
* analytic zero-frequency limits (the Matsubara l = 0 term),
* on the real frequency axis in the dimensionless evanescent variables
  t = 2 a omega / c and w = 2 a k_perp - t  (complex valued).

The inner radical uses the principal complex square root (Re >= 0, cut
on the negative real axis); for absorbing media the radicand has a
negative imaginary part, which yields decay into the medium.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .materials import MaterialSpec, eps_imaginary, eps_real, mu_matsubara, mu_real
from .units import CONST

POLARIZATIONS = ("TM", "TE")


@dataclass(frozen=True)
class ImagAxisPoint:
    """One (Matsubara index, transverse wave number) evaluation point."""

    l: int
    xi: float       # rad/s
    k_perp: float   # rad/m

    @property
    def q_l(self) -> float:
        return np.hypot(self.k_perp, self.xi / CONST.c)


@dataclass(frozen=True)
class DimensionlessPoint:
    """Real-axis point in the scaled variables; evanescent iff w > 0."""

    t: float
    w: float
    a: float        # separation, m; needed to map back to omega = c t / (2a)


def _check_pol(pol: str):
    if pol not in POLARIZATIONS:
        raise ValueError(f"polarization must be one of {POLARIZATIONS}, got {pol!r}")


def r_imag(pol: str, point: ImagAxisPoint, spec: MaterialSpec, model: str) -> float:
    """Reflection coefficient at the l-th Matsubara frequency, l >= 1.

    mu(i xi_l) = 1 for l >= 1, so only the permittivity enters.  The
    result is real with |r| <= 1; TM is positive, TE negative.
    """
    _check_pol(pol)
    if point.l < 1:
        raise ValueError("r_imag requires l >= 1; use r_zero_frequency for l = 0")
    eps = eps_imaginary(spec, point.xi, model)
    q = point.q_l
    p = np.sqrt(point.k_perp**2 + eps * (point.xi / CONST.c) ** 2)
    if pol == "TM":
        return (eps * q - p) / (eps * q + p)
    return (q - p) / (q + p)


def r_imag_scaled(pol: str, y, y0: float, eps: float, mu: float = 1.0):
    """Same coefficient in the scaled variable y = 2 a q (vectorized).

    y0 = 2 a xi / c; p and q scale by the common 2a factor, so the ratio
    is unchanged:  p_scaled = sqrt(y^2 + (eps mu - 1) y0^2).
    """
    p = np.sqrt(y * y + (eps * mu - 1.0) * y0 * y0)
    if pol == "TM":
        return (eps * y - p) / (eps * y + p)
    return (mu * y - p) / (mu * y + p)


def r_zero_frequency(pol: str, spec: MaterialSpec, k_perp, model: str):
    """Analytic xi -> 0 limit of the reflection coefficient (vectorized).

    TM: exactly 1 for both models (eps diverges at zero frequency).
    TE Drude: (mu(0)-1)/(mu(0)+1), since eps xi^2 -> 0.
    TE plasma: eps xi^2 -> omega_p^2, so the medium wave number keeps a
    plasma term:  (mu0 k - p0)/(mu0 k + p0), p0 = sqrt(k^2 + mu0 omega_p^2/c^2).
    """
    _check_pol(pol)
    k_perp = np.asarray(k_perp, dtype=float)
    if np.any(k_perp <= 0):
        raise ValueError("r_zero_frequency requires k_perp > 0")
    mu0 = mu_matsubara(spec, 0)
    if pol == "TM":
        out = np.ones(k_perp.shape)
    elif model == "drude":
        out = np.full(k_perp.shape, (mu0 - 1.0) / (mu0 + 1.0))
    elif model == "plasma":
        p0 = np.sqrt(k_perp**2 + mu0 * (spec.omega_p / CONST.c) ** 2)
        out = (mu0 * k_perp - p0) / (mu0 * k_perp + p0)
    else:
        raise ValueError(f"unknown permittivity model {model!r}")
    return float(out) if out.ndim == 0 else out


def r_real_scaled(pol: str, t, w, eps, mu):
    """Real-axis coefficient in the (t, w) variables, evanescent side (vectorized).

    s = sqrt(w^2 + 2 w t) is the scaled vacuum decay constant (real,
    positive for w > 0); the medium radical sqrt((w+t)^2 - eps mu t^2)
    takes the principal branch.
    """
    s = np.sqrt(w * (w + 2.0 * t))
    u = np.sqrt((w + t) ** 2 - eps * mu * t * t + 0j)
    if pol == "TM":
        return (eps * s - u) / (eps * s + u)
    return (mu * s - u) / (mu * s + u)


def r_real_dimensionless(
    pol: str, point: DimensionlessPoint, spec: MaterialSpec, model: str
) -> complex:
    """Reflection coefficient at a real-axis evanescent point (w > 0)."""
    _check_pol(pol)
    if point.t <= 0:
        raise ValueError(f"need t > 0, got {point.t}")
    if point.w <= 0:
        raise ValueError(
            "r_real_dimensionless is defined on the evanescent side only (w > 0)"
        )
    omega = CONST.c * point.t / (2.0 * point.a)
    eps = eps_real(spec, omega, model)
    mu = mu_real(spec, omega)
    return complex(r_real_scaled(pol, point.t, point.w, eps, mu))
