"""
Re-encounter time and angle of the two beams
path: dynamics/encounter.py

The beams meet again once their angular separation phi1 - phi2 reaches
2 pi. Because the induced torque is the same on both beams, omega1 -
omega2 stays 2 omega0 and the encounter time is pi / omega0 whatever the
flux; the meeting point is shifted from pi by kappa * int_0^T [Phi - Phi(0)].
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from scipy.optimize import bisect

from core.config import settings
from core.exceptions import SolverError
from dynamics.electron import ElectronParams, check_orbit, coupling_coefficient
from dynamics.integrator import check_step, integrate_pair, step_count
from fields.profiles import AnalyticProfile, FluxProfile, TabulatedFlux
from fields.solenoid import SolenoidConfig
from phase.quadrature import adaptive_simpson

logger = logging.getLogger(__name__)

CLOSED_FORM = "closed_form"
NUMERIC_ROOT = "numeric_root"


@dataclass(frozen=True)
class EncounterResult:
    """Where and when the beams meet again"""
    T: float
    phi_f: float
    method: str


def encounter_time(params: ElectronParams) -> float:
    """T = pi / omega0"""
    return math.pi / params.omega0


def flux_excess_integral(profile: FluxProfile, T: float, rel_tol: Optional[float] = None) -> float:
    """int_0^T [Phi(t) - Phi(0)] dt"""
    phi_start = float(profile.value(0.0))
    if isinstance(profile, AnalyticProfile):
        return profile.integral(0.0, T) - phi_start * T
    return adaptive_simpson(lambda t: float(profile.value(t)) - phi_start, 0.0, T, rel_tol)


def encounter_angle(params: ElectronParams, profile: FluxProfile, rel_tol: Optional[float] = None) -> float:
    """phi_f = pi + kappa * int_0^T [Phi(t) - Phi(0)] dt with T = pi / omega0"""
    T = encounter_time(params)
    return math.pi + coupling_coefficient(params) * flux_excess_integral(profile, T, rel_tol)


def encounter_closed_form(params: ElectronParams, profile: FluxProfile, rel_tol: Optional[float] = None) -> EncounterResult:
    return EncounterResult(
        T=encounter_time(params),
        phi_f=encounter_angle(params, profile, rel_tol),
        method=CLOSED_FORM,
    )


def _bracket(g, T0: float, limits: Tuple[float, float] = (0.0, math.inf)) -> Tuple[float, float]:
    width = settings.BRACKET_EXPANSION
    for _ in range(settings.MAX_BRACKET_TRIES):
        lo = max(T0 * max(1.0 - width, 1e-3), limits[0])
        hi = min(T0 * (1.0 + width), limits[1])
        if lo < hi and g(lo) * g(hi) <= 0.0:
            return lo, hi
        logger.debug(f"Encounter root not bracketed by [{lo:g}, {hi:g}], widening")
        width *= 2.0
    raise SolverError(
        f"encounter time not bracketed around T0={T0:g} after "
        f"{settings.MAX_BRACKET_TRIES} widenings"
    )


def solve_encounter(params: ElectronParams, cfg: SolenoidConfig, step: float) -> EncounterResult:
    """Encounter time by bisection on RK4 trajectories of both beams"""
    check_orbit(params, cfg)
    T0 = encounter_time(params)
    check_step(cfg.profile, T0, step)

    def separation_gap(T: float) -> float:
        # trial grids never get coarser than the requested step
        c1, c2 = integrate_pair(params, cfg, T, step_count(T, step))
        return float(c1.phi[-1] - c2.phi[-1]) - 2.0 * math.pi

    # trial times stay inside a tabulated flux's sample range
    limits = cfg.profile.interval if isinstance(cfg.profile, TabulatedFlux) else (0.0, math.inf)
    lo, hi = _bracket(separation_gap, T0, limits)
    try:
        T = bisect(
            separation_gap, lo, hi,
            xtol=settings.BISECTION_XTOL,
            maxiter=settings.BISECTION_MAXITER,
        )
    except (RuntimeError, ValueError) as e:
        raise SolverError(f"encounter-time bisection failed: {e}") from e

    c1, _ = integrate_pair(params, cfg, T, step_count(T, step))
    logger.debug(f"Encounter root T={T:.15g} (closed form {T0:.15g})")
    return EncounterResult(T=float(T), phi_f=float(c1.phi[-1]), method=NUMERIC_ROOT)


def encounter_time_numeric(params: ElectronParams, cfg: SolenoidConfig, step: float) -> float:
    return solve_encounter(params, cfg, step).T
