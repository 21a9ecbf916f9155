"""Closed-form oracles: trilogarithm, classical (high-temperature) limits,
and the ideal-metal zero-temperature pressure.

These are validation anchors, deliberately kept out of the production
force path: the engines never shortcut through them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .matsubara import PlateSystem, reference_high_temperature
from .reflection import r_zero_frequency
from .units import CONST, ZETA3

_ZETA2 = math.pi**2 / 6.0


def polylog3(x: float) -> float:
    """Trilogarithm Li_3(x) = sum x^n / n^3 on [-1, 1], to ~1e-12 absolute.

    Direct series away from 1; near x = 1 the series tail decays too
    slowly, so the standard log-expansion around the singularity is used:
    Li_3(e^-u) = zeta(3) - zeta(2) u + u^2 (3/2 - ln u)/2 + u^3/12
                 - u^4/288 + u^6/86400 - ...
    """
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"polylog3 domain is [-1, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return ZETA3
    if x < -0.5:
        # square-duplication identity keeps the series fast near -1
        return 0.25 * polylog3(x * x) - polylog3(-x)
    if x > 0.93:
        u = -math.log(x)
        return (
            ZETA3
            - _ZETA2 * u
            + 0.5 * u * u * (1.5 - math.log(u))
            + u**3 / 12.0
            - u**4 / 288.0
            + u**6 / 86400.0
            - u**8 / 10160640.0
        )
    total = 0.0
    term = x
    n = 1
    while abs(term) / n**3 > 1e-17:
        total += term / n**3
        n += 1
        term *= x
        if n > 2000:
            break
    return total


@dataclass(frozen=True)
class ClassicalLimitResult:
    pol: str
    r1r2: float     # product of zero-frequency reflection coefficients
    value: float    # Pa


def classical_limit(
    pol: str, sys: PlateSystem, model: str, k_perp: float | None = None
) -> ClassicalLimitResult:
    """High-temperature limit -(k_B T / 4 pi a^3) Li_3(r1(0) r2(0)).

    For TM this equals the reference pressure for every metal preset
    (r = 1).  The plasma-model TE zero-frequency coefficient depends on
    k_perp; the classical limit then uses its k_perp -> 0 value unless a
    specific k_perp is given (the constant-coefficient closed form is
    exact only where r(0) is k-independent, i.e. TM and Drude TE).
    """
    k = 1.0 / (2.0 * sys.a) if k_perp is None else k_perp
    r1 = r_zero_frequency(pol, sys.plate1, k, model)
    r2 = r_zero_frequency(pol, sys.plate2, k, model)
    value = (
        -CONST.k_B * sys.T / (4.0 * math.pi * sys.a**3) * polylog3(r1 * r2)
    )
    return ClassicalLimitResult(pol=pol, r1r2=r1 * r2, value=value)


def ideal_metal_zero_temperature(a: float) -> float:
    """Zero-temperature ideal-metal pressure -pi^2 hbar c / (240 a^4)."""
    if a <= 0:
        raise ValueError(f"separation must be > 0, got {a}")
    return -math.pi**2 * CONST.hbar * CONST.c / (240.0 * a**4)


def classical_total(sys: PlateSystem, model: str) -> float:
    """TM + TE classical limits; matches force_total at large separations."""
    return (
        classical_limit("TM", sys, model).value
        + classical_limit("TE", sys, model).value
    )


__all__ = [
    "polylog3",
    "ClassicalLimitResult",
    "classical_limit",
    "classical_total",
    "ideal_metal_zero_temperature",
    "reference_high_temperature",
    "ZETA3",
]
