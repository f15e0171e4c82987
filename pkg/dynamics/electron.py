"""
Electron parameters, coupling coefficient and closed-form angular motion
path: dynamics/electron.py

The electron (charge -e) is held on a circle of radius rho > R. The
induced field exerts the torque dL/dt = (e / 2 pi) dPhi/dt, the same on
both beams, so each angular speed picks up the same correction
kappa * [Phi(t) - Phi(0)] on top of its initial value +-omega0.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from core.config import settings
from core.exceptions import DomainError
from fields.profiles import FluxProfile
from fields.solenoid import SolenoidConfig

ArrayLike = Union[float, np.ndarray]


class CouplingMode(str, Enum):
    """How the angular momentum relates to the angular speed"""
    CONSISTENT = "consistent"        # L = m rho^2 omega
    PAPER_LITERAL = "paper_literal"  # L = m rho omega as printed


class Branch(str, Enum):
    """The two beams, launched with +omega0 (C1) and -omega0 (C2)"""
    C1 = "c1"
    C2 = "c2"

    @property
    def sign(self) -> int:
        return 1 if self is Branch.C1 else -1


@dataclass(frozen=True)
class ElectronParams:
    """Mass, charge magnitude, orbit radius and launch speed"""
    m: float
    e: float
    rho: float
    omega0: float
    coupling_mode: CouplingMode = CouplingMode.CONSISTENT

    def __post_init__(self):
        for name in ("m", "e", "rho", "omega0"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise DomainError(f"electron {name} must be a finite value > 0, got {value!r}")
        object.__setattr__(self, "coupling_mode", CouplingMode(self.coupling_mode))


def check_orbit(params: ElectronParams, cfg: SolenoidConfig):
    """The orbit must lie outside the solenoid"""
    if not params.rho > cfg.R:
        raise DomainError(f"electron rho ({params.rho:g}) must exceed solenoid R ({cfg.R:g})")


def coupling_coefficient(params: ElectronParams) -> float:
    """kappa such that d omega / dt = kappa * dPhi/dt"""
    if params.coupling_mode is CouplingMode.PAPER_LITERAL:
        return params.e / (2.0 * math.pi * params.m * params.rho)
    return params.e / (2.0 * math.pi * params.m * params.rho ** 2)


def omega_closed_form(params: ElectronParams, profile: FluxProfile, branch: Branch, t: ArrayLike) -> ArrayLike:
    """omega(t) = sign * omega0 + kappa * [Phi(t) - Phi(0)]"""
    kappa = coupling_coefficient(params)
    return branch.sign * params.omega0 + kappa * (profile.value(t) - profile.value(0.0))


def torque_rhs(params: ElectronParams, profile: FluxProfile, t: ArrayLike) -> ArrayLike:
    """Angular acceleration kappa * dPhi/dt, identical on both branches"""
    return coupling_coefficient(params) * profile.derivative(t)


def angular_momentum(params: ElectronParams, omega: ArrayLike) -> ArrayLike:
    """L = m rho^2 omega"""
    return params.m * params.rho ** 2 * np.asarray(omega, dtype=float)


def max_step(profile: FluxProfile, t_end: float) -> float:
    """Largest RK4 step that resolves both the run length and the flux timescale"""
    if not t_end > 0.0:
        raise DomainError(f"t_end must be > 0, got {t_end!r}")
    return min(t_end / settings.MIN_STEPS_PER_RUN, profile.resolution_step())
