import math

import numpy as np
import pytest

from core.exceptions import DomainError
from dynamics.electron import (
    Branch,
    CouplingMode,
    ElectronParams,
    angular_momentum,
    check_orbit,
    coupling_coefficient,
    max_step,
    omega_closed_form,
    torque_rhs,
)
from fields.profiles import ConstantFlux, RampFlux, SinusoidFlux
from fields.solenoid import SolenoidConfig


class TestCouplingCoefficient:

    @pytest.mark.parametrize("mode", list(CouplingMode))
    def test_unit_radius_modes_coincide(self, mode):
        params = ElectronParams(m=1.0, e=2.0 * math.pi, rho=1.0, omega0=1.0, coupling_mode=mode)
        assert coupling_coefficient(params) == pytest.approx(1.0, rel=1e-15)

    def test_consistent(self):
        params = ElectronParams(m=1.0, e=2.0 * math.pi, rho=2.0, omega0=1.0)
        assert coupling_coefficient(params) == pytest.approx(0.25, rel=1e-15)

    def test_paper_literal(self):
        params = ElectronParams(m=1.0, e=2.0 * math.pi, rho=2.0, omega0=1.0, coupling_mode="paper_literal")
        assert params.coupling_mode is CouplingMode.PAPER_LITERAL
        assert coupling_coefficient(params) == pytest.approx(0.5, rel=1e-15)


@pytest.mark.parametrize("field_name", ["m", "e", "rho", "omega0"])
@pytest.mark.parametrize("bad", [0.0, -1.0, float("inf"), float("nan")])
def test_electron_parameters_must_be_positive(field_name, bad):
    kwargs = dict(m=1.0, e=1.0, rho=2.0, omega0=1.0)
    kwargs[field_name] = bad
    with pytest.raises(DomainError):
        ElectronParams(**kwargs)


def test_orbit_must_enclose_solenoid(electron):
    check_orbit(electron, SolenoidConfig(R=1.0, profile=ConstantFlux(phi0=1.0)))
    with pytest.raises(DomainError, match="must exceed solenoid R"):
        check_orbit(electron, SolenoidConfig(R=2.0, profile=ConstantFlux(phi0=1.0)))


class TestClosedForm:

    def test_constant_flux_keeps_launch_speed(self, unit_kappa, constant):
        for t in (0.0, 1.0, 17.0):
            assert omega_closed_form(unit_kappa, constant, Branch.C1, t) == 1.0
            assert omega_closed_form(unit_kappa, constant, Branch.C2, t) == -1.0

    def test_sinusoid_c1(self, unit_kappa, sinusoid):
        assert omega_closed_form(unit_kappa, sinusoid, Branch.C1, math.pi / 2) == pytest.approx(1.1, rel=1e-15)

    def test_sinusoid_c2_gets_the_same_correction(self, unit_kappa, sinusoid):
        assert omega_closed_form(unit_kappa, sinusoid, Branch.C2, math.pi / 2) == pytest.approx(-0.9, rel=1e-15)

    def test_equal_corrections_on_both_branches(self, electron, sinusoid):
        t = np.linspace(0.0, 10.0, 101)
        w1 = omega_closed_form(electron, sinusoid, Branch.C1, t)
        w2 = omega_closed_form(electron, sinusoid, Branch.C2, t)
        np.testing.assert_allclose(w1 - electron.omega0, w2 + electron.omega0, rtol=0, atol=1e-15)

    def test_vectorised(self, unit_kappa):
        ramp = RampFlux(phi0=0.0, rate=2.0)
        t = np.array([0.0, 0.5, 1.0])
        np.testing.assert_allclose(omega_closed_form(unit_kappa, ramp, Branch.C1, t), [1.0, 2.0, 3.0])


class TestTorque:

    def test_constant_flux(self, unit_kappa, constant):
        assert torque_rhs(unit_kappa, constant, 2.0) == 0.0

    def test_ramp(self, unit_kappa):
        assert torque_rhs(unit_kappa, RampFlux(phi0=0.0, rate=0.7), 5.0) == pytest.approx(0.7)

    def test_sinusoid(self, unit_kappa):
        profile = SinusoidFlux(phi0=1.0, phi1=0.1, omega=2.0)
        assert torque_rhs(unit_kappa, profile, 0.0) == pytest.approx(0.2, rel=1e-15)


def test_angular_momentum(electron):
    np.testing.assert_allclose(angular_momentum(electron, [1.0, -2.0]), [4.0, -8.0])


class TestMaxStep:

    def test_run_length_bound(self, constant):
        assert max_step(constant, math.pi) == pytest.approx(math.pi / 100)

    def test_flux_timescale_bound(self):
        assert max_step(SinusoidFlux(phi0=1.0, phi1=0.1, omega=10.0), math.pi) == pytest.approx(0.005)

    def test_rejects_non_positive_run(self, constant):
        with pytest.raises(DomainError):
            max_step(constant, 0.0)
