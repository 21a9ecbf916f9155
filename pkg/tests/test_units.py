import pytest

from casimir_plates.units import (
    CONST,
    angular_frequency_to_ev,
    ev_to_angular_frequency,
    matsubara_frequency,
)


def test_constants_codata2018():
    assert CONST.hbar == 1.054571817e-34
    assert CONST.k_B == 1.380649e-23
    assert CONST.c == 299792458.0
    assert CONST.eV == 1.602176634e-19


def test_ev_conversion_zero():
    assert ev_to_angular_frequency(0.0) == 0.0


@pytest.mark.parametrize(
    "ev,expected",
    [
        (9.0, 1.3673407039285594e16),      # Au plasma frequency
        (0.0436, 6.624006076809466e13),    # Ni relaxation parameter
    ],
)
def test_ev_conversion_values(ev, expected):
    assert ev_to_angular_frequency(ev) == pytest.approx(expected, rel=1e-12)


def test_ev_conversion_rejects_negative():
    with pytest.raises(ValueError):
        ev_to_angular_frequency(-1.0)


def test_ev_roundtrip():
    for ev in (1e-6, 0.035, 9.0, 1e4):
        back = angular_frequency_to_ev(ev_to_angular_frequency(ev))
        assert back == pytest.approx(ev, rel=1e-12)


def test_matsubara_zero_index():
    assert matsubara_frequency(0, 300.0) == 0.0


def test_matsubara_first_300K():
    # 2 pi k_B T / hbar at 300 K
    assert matsubara_frequency(1, 300.0) == pytest.approx(2.4677902e14, rel=1e-6)


def test_matsubara_linear_in_l():
    xi1 = matsubara_frequency(1, 300.0)
    for l in (2, 5, 117):
        assert matsubara_frequency(l, 300.0) == pytest.approx(l * xi1, rel=1e-14)


def test_matsubara_rejects_bad_args():
    with pytest.raises(ValueError):
        matsubara_frequency(1, 0.0)
    with pytest.raises(ValueError):
        matsubara_frequency(-1, 300.0)


def test_matsubara_magnitude_check():
    # first Matsubara frequency at room temperature is of order 1e14 rad/s
    assert 1e14 < matsubara_frequency(1, 300.0) < 1e15
