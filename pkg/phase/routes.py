"""
AB phase shift by independent routes
path: phase/routes.py

  mean_flux    e times the time-averaged flux over [0, T]
  closed_form  line integrals of A along closed-form beam trajectories
  numeric      line integrals of A along RK4 beam trajectories
  field_free   line integrals along uniform circular motion (no induced torque)

Along a beam A . dx = Phi(t) / (2 pi rho) * rho * omega dt, so each line
integral is (1 / 2 pi) int Phi(t) omega(t) dt; the induced torque shifts
both beams by the same amount and drops out of their difference.
"""

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, List, Optional

import numpy as np

from core.exceptions import DomainError
from dynamics.electron import Branch, ElectronParams, check_orbit, max_step
from dynamics.encounter import encounter_angle, encounter_time
from dynamics.integrator import (
    Trajectory,
    integrate_trajectory,
    sample_closed_form,
    sample_field_free,
)
from fields.profiles import FluxProfile
from fields.solenoid import SolenoidConfig
from phase.quadrature import composite_simpson, flux_integral

logger = logging.getLogger(__name__)


class PhaseRoute(str, Enum):
    MEAN_FLUX = "mean"
    CLOSED_FORM = "closed"
    NUMERIC = "numeric"
    FIELD_FREE = "field_free"


TRAJECTORY_ROUTES = (PhaseRoute.CLOSED_FORM, PhaseRoute.NUMERIC, PhaseRoute.FIELD_FREE)


@dataclass(frozen=True)
class PhaseResult:
    """AB phase at the encounter time and the encounter angle"""
    T: float
    phi_AB: float
    phi_f: float
    route: PhaseRoute


@dataclass(frozen=True)
class VelocityRow:
    omega0: float
    T: float
    phi_AB: float
    phi_f: float


def mean_flux(profile: FluxProfile, T: float, rel_tol: Optional[float] = None) -> float:
    """(1/T) int_0^T Phi(t) dt"""
    if not T > 0.0:
        raise DomainError(f"T must be > 0, got {T!r}")
    return flux_integral(profile, 0.0, T, rel_tol) / T


def ab_phase_mean_flux(profile: FluxProfile, params: ElectronParams, rel_tol: Optional[float] = None) -> PhaseResult:
    T = encounter_time(params)
    return PhaseResult(
        T=T,
        phi_AB=params.e * mean_flux(profile, T, rel_tol),
        phi_f=encounter_angle(params, profile, rel_tol),
        route=PhaseRoute.MEAN_FLUX,
    )


def line_integral_A(profile: FluxProfile, traj: Trajectory) -> float:
    """(1 / 2 pi) int Phi(t) omega(t) dt by composite Simpson over the samples"""
    if len(traj) < 3:
        raise DomainError(f"line integral needs at least 3 trajectory samples, got {len(traj)}")
    integrand = np.asarray(profile.value(traj.times), dtype=float) * traj.omega
    return composite_simpson(integrand, traj.times) / (2.0 * math.pi)


def beam_trajectories(
    profile: FluxProfile,
    params: ElectronParams,
    cfg: SolenoidConfig,
    route: PhaseRoute,
    T: float,
    step: float,
) -> List[Trajectory]:
    """C1 and C2 trajectories on [0, T] for a trajectory route"""
    if route is PhaseRoute.NUMERIC:
        solenoid = cfg if cfg.profile == profile else replace(cfg, profile=profile)
        return [integrate_trajectory(params, solenoid, b, T, step) for b in (Branch.C1, Branch.C2)]
    if route is PhaseRoute.CLOSED_FORM:
        return [sample_closed_form(params, profile, b, T, step) for b in (Branch.C1, Branch.C2)]
    if route is PhaseRoute.FIELD_FREE:
        return [sample_field_free(params, b, T, step) for b in (Branch.C1, Branch.C2)]
    raise DomainError(f"route {route.value!r} does not build trajectories")


def ab_phase_trajectories(
    profile: FluxProfile,
    params: ElectronParams,
    cfg: SolenoidConfig,
    route: PhaseRoute,
    step: Optional[float] = None,
) -> PhaseResult:
    """phi_AB = e [int_C1 A.dx - int_C2 A.dx] along the two beams.

    `profile` drives the flux; `cfg` supplies the solenoid radius checked
    against the orbit. The encounter angle is the C1 angle at T.
    """
    route = PhaseRoute(route)
    check_orbit(params, cfg)
    T = encounter_time(params)
    step = max_step(profile, T) if step is None else step

    c1, c2 = beam_trajectories(profile, params, cfg, route, T, step)
    return phase_from_trajectories(profile, params, c1, c2, route)


def phase_from_trajectories(
    profile: FluxProfile,
    params: ElectronParams,
    c1: Trajectory,
    c2: Trajectory,
    route: PhaseRoute = PhaseRoute.NUMERIC,
) -> PhaseResult:
    """Loop integral over two sampled beams that end at the same time"""
    T = c1.final[0]
    if abs(c2.final[0] - T) > 1e-12 * max(T, 1.0):
        raise DomainError(f"beams end at different times: {T!r} and {c2.final[0]!r}")
    loop = line_integral_A(profile, c1) - line_integral_A(profile, c2)
    logger.debug(f"Route {route.value}: {len(c1)} samples, loop integral {loop:.15g}")
    return PhaseResult(T=T, phi_AB=params.e * loop, phi_f=c1.final[1], route=route)


def ab_phase(
    profile: FluxProfile,
    params: ElectronParams,
    cfg: SolenoidConfig,
    route: PhaseRoute,
    step: Optional[float] = None,
    rel_tol: Optional[float] = None,
) -> PhaseResult:
    """Dispatch on route"""
    route = PhaseRoute(route)
    if route is PhaseRoute.MEAN_FLUX:
        check_orbit(params, cfg)
        return ab_phase_mean_flux(profile, params, rel_tol)
    return ab_phase_trajectories(profile, params, cfg, route, step)


def velocity_scan(
    profile: FluxProfile,
    params: ElectronParams,
    omega0_grid: Iterable[float],
    rel_tol: Optional[float] = None,
) -> List[VelocityRow]:
    """phi_AB and phi_f as the launch speed varies; T = pi / omega0 per point"""
    rows = []
    for omega0 in omega0_grid:
        beam = replace(params, omega0=float(omega0))
        result = ab_phase_mean_flux(profile, beam, rel_tol)
        rows.append(VelocityRow(omega0=beam.omega0, T=result.T, phi_AB=result.phi_AB, phi_f=result.phi_f))
    return rows
