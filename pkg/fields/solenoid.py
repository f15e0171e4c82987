"""
Field configuration of an infinitely long solenoid with time-dependent flux
path: fields/solenoid.py

Flux normalisation: Phi = pi R^2 B, so that the interior vector potential
rho Phi / (2 pi R^2) curls to B_z. The scalar potential is zero and all
non-azimuthal/non-axial components vanish by symmetry.
"""

import math
from dataclasses import dataclass

from core.exceptions import DomainError
from fields.profiles import FluxProfile


@dataclass(frozen=True)
class SolenoidConfig:
    """Solenoid radius R and its flux profile"""
    R: float
    profile: FluxProfile

    def __post_init__(self):
        if not self.R > 0.0:
            raise DomainError(f"solenoid radius must be > 0, got {self.R!r}")


@dataclass(frozen=True)
class CylPoint:
    """Point in cylindrical coordinates; phi is kept unwrapped"""
    rho: float
    phi: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if not self.rho >= 0.0:
            raise DomainError(f"rho must be >= 0, got {self.rho!r}")


@dataclass(frozen=True)
class FieldSample:
    """Non-vanishing field components at one point and time"""
    b_z: float
    a_phi: float
    e_phi: float


def is_interior(cfg: SolenoidConfig, rho: float) -> bool:
    # rho == R belongs to the exterior branch; both agree there
    return rho < cfg.R


def field_at(cfg: SolenoidConfig, p: CylPoint, t: float) -> FieldSample:
    """B_z, A_phi and E_phi = -dA_phi/dt at point p and time t"""
    flux = float(cfg.profile.value(t))
    flux_rate = float(cfg.profile.derivative(t))
    rho = p.rho

    if is_interior(cfg, rho):
        area = math.pi * cfg.R * cfg.R
        return FieldSample(
            b_z=flux / area,
            a_phi=rho * flux / (2.0 * area),
            e_phi=-rho * flux_rate / (2.0 * area),
        )

    circumference = 2.0 * math.pi * rho
    return FieldSample(
        b_z=0.0,
        a_phi=flux / circumference,
        e_phi=-flux_rate / circumference,
    )
