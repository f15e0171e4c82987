import math

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from core.exceptions import DomainError
from fields.profiles import ConstantFlux, RampFlux, SinusoidFlux
from fields.solenoid import CylPoint, SolenoidConfig, field_at, is_interior

sinusoids = st.builds(
    SinusoidFlux,
    phi0=st.floats(-5.0, 5.0),
    phi1=st.floats(-2.0, 2.0),
    omega=st.floats(0.1, 5.0),
)


def test_exterior_constant_flux_example():
    cfg = SolenoidConfig(R=1.0, profile=ConstantFlux(phi0=2.0 * math.pi))
    sample = field_at(cfg, CylPoint(rho=2.0), 3.0)
    assert sample.a_phi == pytest.approx(0.5, abs=1e-15)
    assert sample.e_phi == 0.0
    assert sample.b_z == 0.0


def test_axis_has_no_azimuthal_fields(sinusoid):
    cfg = SolenoidConfig(R=1.0, profile=sinusoid)
    sample = field_at(cfg, CylPoint(rho=0.0), 0.3)
    assert sample.a_phi == 0.0
    assert sample.e_phi == 0.0


def test_interior_field_is_flux_over_area():
    cfg = SolenoidConfig(R=2.0, profile=ConstantFlux(phi0=3.0))
    assert field_at(cfg, CylPoint(rho=1.0), 0.0).b_z == pytest.approx(3.0 / (4.0 * math.pi))


def test_boundary_uses_exterior_branch():
    cfg = SolenoidConfig(R=1.0, profile=ConstantFlux(phi0=1.0))
    assert not is_interior(cfg, 1.0)
    assert field_at(cfg, CylPoint(rho=1.0), 0.0).b_z == 0.0


def test_invalid_geometry():
    with pytest.raises(DomainError):
        SolenoidConfig(R=0.0, profile=ConstantFlux(phi0=1.0))
    with pytest.raises(DomainError):
        CylPoint(rho=-1.0)


@hsettings(max_examples=50, derandomize=True)
@given(profile=sinusoids, t=st.floats(0.0, 10.0), R=st.floats(0.1, 5.0))
def test_continuity_at_radius(profile, t, R):
    cfg = SolenoidConfig(R=R, profile=profile)
    eps = 1e-8 * R
    inside = field_at(cfg, CylPoint(rho=R - eps), t)
    outside = field_at(cfg, CylPoint(rho=R + eps), t)
    assert inside.a_phi == pytest.approx(outside.a_phi, rel=1e-6, abs=1e-12)
    assert inside.e_phi == pytest.approx(outside.e_phi, rel=1e-6, abs=1e-12)


@hsettings(max_examples=50, derandomize=True)
@given(profile=sinusoids, t=st.floats(0.0, 10.0), rho=st.floats(1.01, 20.0))
def test_faraday_loop_law(profile, t, rho):
    cfg = SolenoidConfig(R=1.0, profile=profile)
    e_phi = field_at(cfg, CylPoint(rho=rho), t).e_phi
    assert 2.0 * math.pi * rho * e_phi == pytest.approx(-float(profile.derivative(t)), rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("profile", [
    SinusoidFlux(phi0=1.0, phi1=0.4, omega=1.7),
    RampFlux(phi0=0.2, rate=0.9),
])
@pytest.mark.parametrize("t", [0.0, 0.8, 2.5])
def test_exterior_electric_field_is_minus_time_derivative(profile, t):
    cfg = SolenoidConfig(R=1.0, profile=profile)
    p = CylPoint(rho=3.0)
    h = 1e-5
    dA = (field_at(cfg, p, t + h).a_phi - field_at(cfg, p, t - h).a_phi) / (2 * h)
    assert field_at(cfg, p, t).e_phi == pytest.approx(-dA, rel=1e-6)


@pytest.mark.parametrize("rho", [0.2, 0.5, 0.9])
def test_interior_curl_gives_axial_field(sinusoid, rho):
    cfg = SolenoidConfig(R=1.0, profile=sinusoid)
    t, h = 0.7, 1e-6

    def rho_a(r):
        return r * field_at(cfg, CylPoint(rho=r), t).a_phi

    curl = (rho_a(rho + h) - rho_a(rho - h)) / (2 * h) / rho
    assert curl == pytest.approx(field_at(cfg, CylPoint(rho=rho), t).b_z, rel=1e-6)


@hsettings(max_examples=30, derandomize=True)
@given(profile=sinusoids, t=st.floats(0.0, 10.0), rho=st.floats(1.0, 50.0))
def test_axial_field_vanishes_outside(profile, t, rho):
    cfg = SolenoidConfig(R=1.0, profile=profile)
    assert field_at(cfg, CylPoint(rho=rho), t).b_z == 0.0


def test_constant_flux_has_no_electric_field():
    cfg = SolenoidConfig(R=1.0, profile=ConstantFlux(phi0=4.0))
    for rho in (0.0, 0.5, 1.0, 7.0):
        assert field_at(cfg, CylPoint(rho=rho, phi=1.0, z=-2.0), 1.0).e_phi == 0.0
