"""
Offset-sinusoid flux Phi0 + Phi1 sin(Omega t): f-factor and limits
path: phase/sinusoid.py

f(x) = mean flux / Phi0 = 1 + ratio (1 - cos x) / x with x = Omega T, so
phi_AB = e Phi0 f. The mirror curve 1 - ratio (1 - cos x) / x is the one
obtained with the opposite sign on the oscillating term; it is kept for
comparison with plots drawn that way.
"""

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from core.exceptions import DomainError, SolverError
from dynamics.electron import ElectronParams, coupling_coefficient
from dynamics.encounter import encounter_time

ArrayLike = Union[float, np.ndarray]

SMALL_X_SAMPLES = np.logspace(-8, -1, 15)
LARGE_X_SAMPLES = np.logspace(1, 8, 15)


@dataclass(frozen=True)
class SinusoidSummary:
    ratio: float
    f: float
    omega_T: float


def one_minus_cos_over(x: ArrayLike, scale: ArrayLike) -> ArrayLike:
    """(1 - cos x) / scale, free of cancellation for small x"""
    half = np.sin(0.5 * np.asarray(x, dtype=float))
    return 2.0 * half * half / scale


def _checked_x(x: ArrayLike) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0.0)):
        raise DomainError("f-factor needs Omega*T > 0; use f_limits for the endpoints")
    return arr


def f_factor(ratio: float, x: ArrayLike) -> ArrayLike:
    """1 + ratio (1 - cos x) / x"""
    arr = _checked_x(x)
    out = 1.0 + ratio * one_minus_cos_over(arr, arr)
    return out if np.ndim(x) else float(out)


def f_factor_mirror(ratio: float, x: ArrayLike) -> ArrayLike:
    """1 - ratio (1 - cos x) / x"""
    arr = _checked_x(x)
    out = 1.0 - ratio * one_minus_cos_over(arr, arr)
    return out if np.ndim(x) else float(out)


def f_limits(ratio: float) -> Tuple[float, float]:
    """Limits of f as Omega T -> 0 and -> infinity.

    Both are 1. Samples check the Taylor bound ratio x / 2 near zero and the
    envelope 2 ratio / x far out.
    """
    ratio = float(ratio)
    small = np.abs(f_factor(ratio, SMALL_X_SAMPLES) - 1.0)
    if np.any(small > abs(ratio) * SMALL_X_SAMPLES / 2.0 + 1e-12):
        raise SolverError(f"f-factor violates the small-x bound for ratio={ratio:g}")
    large = np.abs(f_factor(ratio, LARGE_X_SAMPLES) - 1.0)
    if np.any(large > 2.0 * abs(ratio) / LARGE_X_SAMPLES + 1e-15):
        raise SolverError(f"f-factor violates the large-x envelope for ratio={ratio:g}")
    return 1.0, 1.0


def encounter_angle_sinusoid(params: ElectronParams, phi1: float, omega: float) -> float:
    """pi + kappa Phi1 (1 - cos Omega T) / Omega with T = pi / omega0"""
    if omega == 0.0:
        return math.pi
    T = encounter_time(params)
    return math.pi + coupling_coefficient(params) * phi1 * float(one_minus_cos_over(omega * T, omega))


def sinusoid_summary(ratio: float, omega_T: float) -> SinusoidSummary:
    return SinusoidSummary(ratio=float(ratio), f=f_factor(ratio, omega_T), omega_T=float(omega_T))
