import math

import pytest

from casimir_plates.errors import ConvergenceError
from casimir_plates.matsubara import (
    NumericsConfig,
    PlateSystem,
    _inner_integral,
    _inner_integral_zero,
    force_polarization_matsubara,
    force_total,
    reference_high_temperature,
    system_for_scenario,
)
from casimir_plates.reference import polylog3
from casimir_plates.units import CONST

from oracles import matsubara_inner_trapezoid


def test_reference_pressure_value():
    # -k_B T zeta(3) / (4 pi a^3) at 1 um, 300 K
    assert reference_high_temperature(1e-6, 300.0) == pytest.approx(
        -3.9620477e-4, rel=1e-6
    )


def test_reference_pressure_scaling():
    base = reference_high_temperature(1e-6, 300.0)
    assert reference_high_temperature(2e-6, 300.0) == pytest.approx(base / 8.0, rel=1e-14)
    assert reference_high_temperature(1e-6, 600.0) == pytest.approx(2.0 * base, rel=1e-14)


def test_numerics_config_validation():
    with pytest.raises(ValueError):
        NumericsConfig(rel_tol=1e-9, matsubara_tail_tol=1e-8)
    with pytest.raises(ValueError):
        NumericsConfig(inner_quadrature="simpson")
    with pytest.raises(ValueError):
        NumericsConfig(t_min_cutoff=0.0)


def test_plate_system_validation():
    with pytest.raises(ValueError):
        system_for_scenario("au-ni", -1e-6)
    with pytest.raises(ValueError):
        system_for_scenario("au-ni", 1e-6, T=0.0)
    with pytest.raises(ValueError):
        system_for_scenario("cu-cu", 1e-6)


def test_l0_tm_equals_reference(cfg, au_ni_1um):
    # the TM zero-frequency term alone carries -(k_B T / 4 pi a^3) Li3(1)
    g0 = _inner_integral_zero("TM", au_ni_1um, "drude", 1e-11)
    term = -CONST.k_B * 300.0 / (8.0 * math.pi * (1e-6) ** 3) * g0
    assert term == pytest.approx(reference_high_temperature(1e-6, 300.0), rel=1e-9)


def test_l0_te_closed_forms(cfg):
    # Au-Au drude: r_TE(0) = 0 on both plates
    sys_au = system_for_scenario("au-au", 6e-6, 300.0)
    assert _inner_integral_zero("TE", sys_au, "drude", 1e-11) == 0.0
    # Ni-Ni drude: geometric series gives 2 Li3((109/111)^2)
    sys_ni = system_for_scenario("ni-ni", 6e-6, 300.0)
    g0 = _inner_integral_zero("TE", sys_ni, "drude", 1e-12)
    assert g0 == pytest.approx(2.0 * polylog3((109.0 / 111.0) ** 2), rel=1e-9)


@pytest.mark.parametrize("pol", ["TM", "TE"])
@pytest.mark.parametrize("l", [0, 1, 2, 3])
def test_inner_integrals_match_trapezoid_oracle(pol, l, au_ni_1um):
    # dense 1e6-node trapezoid on the same mapped interval
    if l == 0:
        mine = _inner_integral_zero(pol, au_ni_1um, "drude", 1e-11)
    else:
        mine = _inner_integral(pol, au_ni_1um, "drude", l, 1e-11)
    oracle = matsubara_inner_trapezoid(pol, au_ni_1um, "drude", l)
    if oracle == 0.0:
        assert mine == 0.0
    else:
        assert mine == pytest.approx(oracle, rel=1e-6)


def test_plate_swap_symmetry(cfg):
    sys_ab = system_for_scenario("au-ni", 1e-6, 300.0)
    sys_ba = PlateSystem(plate1=sys_ab.plate2, plate2=sys_ab.plate1, a=1e-6, T=300.0)
    for pol in ("TM", "TE"):
        f_ab = force_polarization_matsubara(pol, sys_ab, "drude", cfg)
        f_ba = force_polarization_matsubara(pol, sys_ba, "drude", cfg)
        assert f_ab == pytest.approx(f_ba, rel=1e-12)


def test_total_is_sum_of_polarizations(cfg, au_ni_1um):
    bd = force_total(au_ni_1um, "drude", cfg)
    assert bd.F_total == pytest.approx(bd.F_TM + bd.F_TE, rel=1e-14)
    assert bd.F_total < 0.0
    assert bd.ratios["total"] == pytest.approx(bd.F_total / bd.F_ref, rel=1e-14)


def test_force_magnitude_decreases_with_separation(cfg):
    for scenario in ("au-ni", "ni-ni", "au-au"):
        for model in ("drude", "plasma"):
            mags = []
            for a_um in (0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0):
                sys_ = system_for_scenario(scenario, a_um * 1e-6, 300.0)
                mags.append(abs(force_total(sys_, model, cfg).F_total))
            assert all(x > y for x, y in zip(mags, mags[1:])), (scenario, model)


def test_tm_matsubara_is_mu_independent(cfg, ni_ni_1um):
    demag = ni_ni_1um.with_mu_static(1.0)
    f = force_polarization_matsubara("TM", ni_ni_1um, "drude", cfg)
    f1 = force_polarization_matsubara("TM", demag, "drude", cfg)
    assert f == f1


def test_nonconvergence_raises():
    sys_ = system_for_scenario("au-ni", 0.5e-6, 300.0)
    tiny_cap = NumericsConfig(l_max_cap=3)
    with pytest.raises(ConvergenceError) as exc:
        force_polarization_matsubara("TM", sys_, "drude", tiny_cap)
    assert exc.value.estimate < 0.0
