"""
Parameter sweeps: the f(Omega T) curve and the launch-speed scan
path: cli/sweep.py

The sweep keeps the electron kinematics fixed (T = pi / omega0) and varies
the flux frequency Omega = (Omega T) / T on a uniform grid.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

import numpy as np

from cli.schema import RunConfig
from core.config import settings
from core.exceptions import ConfigError
from dynamics.electron import ElectronParams, max_step
from dynamics.encounter import encounter_angle, encounter_time
from fields.profiles import SinusoidFlux
from fields.solenoid import SolenoidConfig
from phase.routes import PhaseRoute, VelocityRow, ab_phase_trajectories, velocity_scan
from phase.sinusoid import f_factor, f_factor_mirror

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    omega_T: float
    f: float
    phi_AB: float
    phi_f: float
    f_mirror: float


def sweep_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.sweep is None:
        raise ConfigError("sweep: section missing from the configuration")
    return np.linspace(cfg.sweep.omega_T_min, cfg.sweep.omega_T_max, cfg.sweep.points)


def _sweep_point(job: Tuple[float, float, float, ElectronParams, SolenoidConfig, Optional[float], float]) -> SweepRow:
    omega_T, ratio, phi0, electron, solenoid, step, rel_tol = job
    T = encounter_time(electron)
    profile = SinusoidFlux(phi0=phi0, phi1=ratio * phi0, omega=omega_T / T)
    bound = max_step(profile, T)
    point_step = bound if step is None else min(step, bound)

    result = ab_phase_trajectories(profile, electron, replace(solenoid, profile=profile),
                                   PhaseRoute.NUMERIC, point_step)
    return SweepRow(
        omega_T=float(omega_T),
        f=f_factor(ratio, omega_T),
        phi_AB=result.phi_AB,
        phi_f=encounter_angle(electron, profile, rel_tol),
        f_mirror=f_factor_mirror(ratio, omega_T),
    )


def run_sweep(cfg: RunConfig, workers: Optional[int] = None) -> List[SweepRow]:
    """One row per Omega*T grid point, in ascending grid order"""
    grid = sweep_grid(cfg)
    phi0 = float(cfg.profile.phi0)
    jobs = [
        (float(x), cfg.sweep.ratio, phi0, cfg.electron, cfg.solenoid, cfg.rk4_step, cfg.quad_rel_tol)
        for x in grid
    ]
    workers = settings.SWEEP_WORKERS if workers is None else workers
    logger.info(f"Sweeping {len(jobs)} points over Omega*T in [{grid[0]:g}, {grid[-1]:g}] with {workers} worker(s)")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves submission order
            return list(pool.map(_sweep_point, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [_sweep_point(job) for job in jobs]


def run_dispersion(cfg: RunConfig) -> List[VelocityRow]:
    """phi_AB and phi_f across launch speeds for the configured flux"""
    if cfg.dispersion is None:
        raise ConfigError("dispersion: section missing from the configuration")
    grid = np.linspace(cfg.dispersion.omega0_min, cfg.dispersion.omega0_max, cfg.dispersion.points)
    return velocity_scan(cfg.profile, cfg.electron, grid, cfg.quad_rel_tol)
