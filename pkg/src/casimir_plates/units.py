"""Physical constants (CODATA 2018) and the unit conversions used everywhere else.

Internally everything is SI: frequencies in rad/s, separations in m,
temperatures in K, pressures in Pa.  Electronvolts appear only at the
input boundary (material parameters are quoted in eV).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants, SI units (CODATA 2018 exact values)."""

    hbar: float = 1.054571817e-34   # J s
    k_B: float = 1.380649e-23       # J/K
    c: float = 299792458.0          # m/s
    eV: float = 1.602176634e-19     # J


CONST = PhysicalConstants()

# Riemann zeta(3), used by the high-temperature reference pressure.
ZETA3 = 1.2020569031595943


def ev_to_angular_frequency(energy_ev: float) -> float:
    """Convert a photon energy in eV to an angular frequency in rad/s."""
    if energy_ev < 0:
        raise ValueError(f"energy must be >= 0, got {energy_ev}")
    return energy_ev * CONST.eV / CONST.hbar


def angular_frequency_to_ev(omega: float) -> float:
    """Inverse of :func:`ev_to_angular_frequency`."""
    if omega < 0:
        raise ValueError(f"angular frequency must be >= 0, got {omega}")
    return omega * CONST.hbar / CONST.eV


def matsubara_frequency(l: int, T: float) -> float:
    """l-th Matsubara angular frequency 2*pi*k_B*T*l/hbar in rad/s.

    Zero at l = 0 and strictly increasing (linear) in l.
    """
    if T <= 0:
        raise ValueError(f"temperature must be > 0, got {T}")
    if l < 0:
        raise ValueError(f"Matsubara index must be >= 0, got {l}")
    return 2.0 * math.pi * CONST.k_B * T * l / CONST.hbar
