import math
from pathlib import Path

import numpy as np
import pytest

from core.logging_config import setup_logging
from dynamics.electron import CouplingMode, ElectronParams
from fields.profiles import ConstantFlux, RampFlux, SinusoidFlux, TabulatedFlux
from fields.solenoid import SolenoidConfig


@pytest.fixture(autouse=True, scope="session")
def _quiet_logging():
    setup_logging(level="WARNING", file_logging=False)


def cubic_flux(t):
    # a cubic is reproduced exactly by the not-a-knot spline
    t = np.asarray(t, dtype=float)
    return 1.0 + 0.1 * t - 0.02 * t ** 2 + 0.003 * t ** 3


@pytest.fixture
def constant():
    return ConstantFlux(phi0=1.0)


@pytest.fixture
def ramp():
    return RampFlux(phi0=0.5, rate=0.3)


@pytest.fixture
def sinusoid():
    return SinusoidFlux(phi0=1.0, phi1=0.1, omega=1.0)


@pytest.fixture
def tabulated():
    times = np.linspace(0.0, 4.0, 41)
    return TabulatedFlux(times=tuple(times), values=tuple(cubic_flux(times)))


@pytest.fixture
def unit_kappa():
    """e = 2 pi, m = 1, rho = 1: kappa = 1 in either coupling mode"""
    return ElectronParams(m=1.0, e=2.0 * math.pi, rho=1.0, omega0=1.0)


@pytest.fixture
def literal_unit_kappa():
    return ElectronParams(m=1.0, e=2.0 * math.pi, rho=1.0, omega0=1.0, coupling_mode=CouplingMode.PAPER_LITERAL)


@pytest.fixture
def electron():
    return ElectronParams(m=1.0, e=1.0, rho=2.0, omega0=1.0)


@pytest.fixture
def make_solenoid():
    def _make(profile, R=0.5):
        return SolenoidConfig(R=R, profile=profile)
    return _make


@pytest.fixture
def minimal_config():
    return """
[solenoid]
R = 1.0

[solenoid.profile]
kind = "constant"
phi0 = 1.0

[electron]
m = 1.0
e = 1.0
rho = 2.0
omega0 = 1.0
"""


@pytest.fixture
def sweep_config(minimal_config):
    def _text(lo, hi, points, ratio=0.1):
        return minimal_config + (
            "\n[sweep]\n"
            f"omega_T_min = {lo!r}\n"
            f"omega_T_max = {hi!r}\n"
            f"points = {points}\n"
            f"ratio = {ratio!r}\n"
        )
    return _text


@pytest.fixture
def write_config(tmp_path):
    def _write(text: str, name: str = "run.toml") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write
