"""
Fixed-step RK4 integration of the angular motion
path: dynamics/integrator.py
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

from core.exceptions import DomainError, StepTooCoarseError
from dynamics.electron import (
    Branch,
    ElectronParams,
    check_orbit,
    coupling_coefficient,
    max_step,
    omega_closed_form,
)
from fields.profiles import FluxProfile
from fields.solenoid import SolenoidConfig

logger = logging.getLogger(__name__)

RHS = Callable[[float, np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Samples (t, phi, omega) of one beam; phi is unwrapped"""
    branch: Branch
    times: np.ndarray
    phi: np.ndarray
    omega: np.ndarray
    step: float
    method: str

    def __len__(self) -> int:
        return int(self.times.size)

    @property
    def final(self) -> Tuple[float, float, float]:
        return float(self.times[-1]), float(self.phi[-1]), float(self.omega[-1])

    def samples(self) -> Iterator[Tuple[float, float, float]]:
        for t, phi, omega in zip(self.times, self.phi, self.omega):
            yield float(t), float(phi), float(omega)


def step_count(t_end: float, step: float) -> int:
    """Smallest even number of uniform steps of size <= step covering t_end"""
    n = max(2, math.ceil(t_end / step - 1e-9))
    return n + (n % 2)


def time_grid(t_end: float, step: float) -> np.ndarray:
    return np.linspace(0.0, t_end, step_count(t_end, step) + 1)


def rk4_step(rhs: RHS, t: float, y: np.ndarray, h: float) -> np.ndarray:
    """One classical Runge-Kutta step"""
    k1 = rhs(t, y)
    k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1)
    k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2)
    k4 = rhs(t + h, y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)


def rk4_integrate(rhs: RHS, y0: np.ndarray, times: np.ndarray) -> np.ndarray:
    """Integrate y' = rhs(t, y) over the given grid; returns one state row per time"""
    ys = np.empty((times.size, np.size(y0)), dtype=float)
    ys[0] = y0
    for i in range(times.size - 1):
        t = float(times[i])
        ys[i + 1] = rk4_step(rhs, t, ys[i], float(times[i + 1]) - t)
    return ys


def check_step(profile: FluxProfile, t_end: float, step: float):
    if not t_end > 0.0:
        raise DomainError(f"t_end must be > 0, got {t_end!r}")
    if not 0.0 < step <= t_end:
        raise DomainError(f"step must satisfy 0 < step <= t_end, got step={step!r}, t_end={t_end!r}")
    bound = max_step(profile, t_end)
    if step > bound * (1.0 + 1e-12):
        raise StepTooCoarseError(step, bound)


def _angular_rhs(kappa: float, profile: FluxProfile) -> RHS:
    # state: (phi, omega) per beam; torque is beam-independent
    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        accel = kappa * float(profile.derivative(t))
        out = np.empty_like(y)
        out[0::2] = y[1::2]
        out[1::2] = accel
        return out
    return rhs


def integrate_trajectory(
    params: ElectronParams,
    cfg: SolenoidConfig,
    branch: Branch,
    t_end: float,
    step: float,
) -> Trajectory:
    """RK4 trajectory of one beam from (0, sign * omega0) up to t_end"""
    check_orbit(params, cfg)
    check_step(cfg.profile, t_end, step)

    times = time_grid(t_end, step)
    rhs = _angular_rhs(coupling_coefficient(params), cfg.profile)
    ys = rk4_integrate(rhs, np.array([0.0, branch.sign * params.omega0]), times)

    logger.debug(f"RK4 {branch.value}: {times.size - 1} steps to t={t_end:g}")
    return Trajectory(
        branch=branch,
        times=times,
        phi=ys[:, 0],
        omega=ys[:, 1],
        step=float(times[1] - times[0]),
        method="rk4",
    )


def integrate_pair(
    params: ElectronParams,
    cfg: SolenoidConfig,
    t_end: float,
    n_steps: int,
) -> Tuple[Trajectory, Trajectory]:
    """Both beams integrated jointly on n_steps uniform steps (n_steps even)"""
    if n_steps < 2 or n_steps % 2:
        raise DomainError(f"n_steps must be even and >= 2, got {n_steps}")
    times = np.linspace(0.0, t_end, n_steps + 1)
    rhs = _angular_rhs(coupling_coefficient(params), cfg.profile)
    y0 = np.array([0.0, params.omega0, 0.0, -params.omega0])
    ys = rk4_integrate(rhs, y0, times)
    h = float(times[1] - times[0])
    return (
        Trajectory(Branch.C1, times, ys[:, 0], ys[:, 1], h, "rk4"),
        Trajectory(Branch.C2, times, ys[:, 2], ys[:, 3], h, "rk4"),
    )


def sample_closed_form(
    params: ElectronParams,
    profile: FluxProfile,
    branch: Branch,
    t_end: float,
    step: float,
) -> Trajectory:
    """Closed-form trajectory sampled on the same grid RK4 would use"""
    times = time_grid(t_end, step)
    kappa = coupling_coefficient(params)
    phi0 = float(profile.value(0.0))
    flux_area = np.array([profile.integral(0.0, float(t)) for t in times])
    phi = branch.sign * params.omega0 * times + kappa * (flux_area - phi0 * times)
    omega = np.asarray(omega_closed_form(params, profile, branch, times), dtype=float)
    return Trajectory(branch, times, phi, omega, float(times[1] - times[0]), "closed_form")


def sample_field_free(params: ElectronParams, branch: Branch, t_end: float, step: float) -> Trajectory:
    """Uniform circular motion: the induced-field torque is ignored"""
    times = time_grid(t_end, step)
    omega = np.full(times.shape, branch.sign * params.omega0)
    return Trajectory(branch, times, omega * times, omega, float(times[1] - times[0]), "field_free")
