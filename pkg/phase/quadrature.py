"""
Quadrature: composite Simpson on sampled grids and an adaptive Simpson oracle
path: phase/quadrature.py
"""

import logging
import math
from collections.abc import Callable
from typing import Optional

import numpy as np
from scipy.integrate import simpson

from core.config import settings
from core.exceptions import DomainError, SolverError
from fields.profiles import AnalyticProfile, FluxProfile

logger = logging.getLogger(__name__)

_GOLDEN = 0.5 * (math.sqrt(5.0) - 1.0)


def _scatter_offsets(n: int) -> np.ndarray:
    """Quasi-random points in (0, 1), off any uniform grid"""
    return np.mod((np.arange(n) + 0.5) * _GOLDEN, 1.0)


def composite_simpson(values: np.ndarray, times: np.ndarray) -> float:
    """Composite Simpson over an odd number of uniformly spaced samples"""
    values = np.asarray(values, dtype=float)
    times = np.asarray(times, dtype=float)
    if values.size < 3:
        raise DomainError(f"Simpson quadrature needs at least 3 samples, got {values.size}")
    if values.size % 2 == 0:
        raise DomainError(f"Simpson quadrature needs an odd sample count, got {values.size}")
    return float(simpson(values, x=times))


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: Optional[float] = None,
    max_depth: Optional[int] = None,
    initial_panels: int = 16,
    max_evals: Optional[int] = None,
) -> float:
    """Adaptive Simpson's rule with a relative tolerance.

    The interval is first cut into `initial_panels` pieces so that periodic
    integrands cannot fool the first error estimate. The relative target is
    turned into an absolute one with an estimate of the integral of |f|:
    the coarse Simpson grid, or the mean over quasi-random scattered points when
    the grid sees much less than those points (an integrand aliased to the
    uniform grid). The absolute target never drops below the rounding level
    eps * (b - a) * max|f|. More than `max_evals` integrand evaluations
    raise SolverError.
    """
    rel_tol = settings.DEFAULT_QUAD_REL_TOL if rel_tol is None else rel_tol
    max_depth = settings.QUAD_MAX_DEPTH if max_depth is None else max_depth
    max_evals = settings.QUAD_MAX_EVALS if max_evals is None else max_evals

    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, rel_tol, max_depth, initial_panels, max_evals)

    evals = 0

    def g(t: float) -> float:
        nonlocal evals
        evals += 1
        if evals > max_evals:
            raise SolverError(
                f"adaptive Simpson on [{a:g}, {b:g}] exceeded {max_evals} integrand evaluations"
            )
        return float(f(t))

    def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
        return h / 6.0 * (fa + 4.0 * fm + fb)

    def _adaptive(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = g(lm)
        frm = g(rm)
        left = _simpson(fa, flm, fm, m - a)
        right = _simpson(fm, frm, fb, b - m)
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15.0 * tol:
            # Richardson extrapolation
            return left + right + delta / 15.0
        return (_adaptive(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
                + _adaptive(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1))

    edges = np.linspace(a, b, initial_panels + 1)
    panels = []
    grid_scale = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        flo, fmid, fhi = g(lo), g(0.5 * (lo + hi)), g(hi)
        panels.append((lo, hi, flo, fmid, fhi))
        grid_scale += _simpson(abs(flo), abs(fmid), abs(fhi), hi - lo)

    spots = np.abs([g(a + (b - a) * t) for t in _scatter_offsets(2 * initial_panels)])
    scatter_scale = (b - a) * float(np.mean(spots))
    f_max = max(float(np.max(spots)), max(max(abs(p[2]), abs(p[3]), abs(p[4])) for p in panels))

    scale = grid_scale
    if grid_scale < 0.5 * scatter_scale:
        logger.debug(f"Simpson grid on [{a:g}, {b:g}] aliases the integrand, scaling by scattered points")
        scale = scatter_scale

    tol = max(rel_tol * scale, np.finfo(float).eps * (b - a) * f_max) / initial_panels
    total = 0.0
    for lo, hi, flo, fmid, fhi in panels:
        whole = _simpson(flo, fmid, fhi, hi - lo)
        total += _adaptive(lo, hi, flo, fmid, fhi, whole, tol, 0)
    logger.debug(f"Adaptive Simpson on [{a:g}, {b:g}]: {evals} evaluations")
    return total


def flux_integral(profile: FluxProfile, a: float, b: float, rel_tol: Optional[float] = None) -> float:
    """Integral of Phi(t) over [a, b]: closed form when available"""
    if isinstance(profile, AnalyticProfile):
        return profile.integral(a, b)
    return adaptive_simpson(lambda t: float(profile.value(t)), a, b, rel_tol)
