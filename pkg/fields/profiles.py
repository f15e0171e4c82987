"""
Time-dependent flux profiles Phi(t)
path: fields/profiles.py

Every profile evaluates on floats or numpy arrays. Analytic variants also
provide a closed-form antiderivative; the tabulated variant is a cubic
spline through its samples and is integrated numerically by callers.
"""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.interpolate import CubicSpline

from core.config import settings
from core.exceptions import DomainError, FluxRangeError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

TABULATED_MIN_SAMPLES = 4
TABULATED_CSV_HEADER = "t,phi"


@dataclass(frozen=True)
class ConstantFlux:
    """Phi(t) = phi0"""
    phi0: float
    kind: ClassVar[str] = "constant"

    def value(self, t: ArrayLike) -> ArrayLike:
        return self.phi0 + np.zeros_like(t, dtype=float)

    def derivative(self, t: ArrayLike) -> ArrayLike:
        return np.zeros_like(t, dtype=float)

    def integral(self, a: float, b: float) -> float:
        return self.phi0 * (b - a)

    def resolution_step(self) -> float:
        return math.inf


@dataclass(frozen=True)
class RampFlux:
    """Phi(t) = phi0 + rate * t"""
    phi0: float
    rate: float
    kind: ClassVar[str] = "ramp"

    def value(self, t: ArrayLike) -> ArrayLike:
        return self.phi0 + self.rate * np.asarray(t, dtype=float)

    def derivative(self, t: ArrayLike) -> ArrayLike:
        return self.rate + np.zeros_like(t, dtype=float)

    def integral(self, a: float, b: float) -> float:
        return self.phi0 * (b - a) + 0.5 * self.rate * (b * b - a * a)

    def resolution_step(self) -> float:
        return math.inf


@dataclass(frozen=True)
class SinusoidFlux:
    """Phi(t) = phi0 + phi1 * sin(omega * t)"""
    phi0: float
    phi1: float
    omega: float
    kind: ClassVar[str] = "sinusoid"

    def __post_init__(self):
        if not self.omega >= 0.0:
            raise DomainError(f"sinusoid omega must be >= 0, got {self.omega!r}")

    def value(self, t: ArrayLike) -> ArrayLike:
        return self.phi0 + self.phi1 * np.sin(self.omega * np.asarray(t, dtype=float))

    def derivative(self, t: ArrayLike) -> ArrayLike:
        return self.phi1 * self.omega * np.cos(self.omega * np.asarray(t, dtype=float))

    def integral(self, a: float, b: float) -> float:
        if self.omega == 0.0:
            return self.phi0 * (b - a)
        # cos(wa) - cos(wb) = 2 sin(w(a+b)/2) sin(w(b-a)/2)
        w = self.omega
        oscillating = 2.0 * math.sin(0.5 * w * (a + b)) * math.sin(0.5 * w * (b - a)) / w
        return self.phi0 * (b - a) + self.phi1 * oscillating

    def resolution_step(self) -> float:
        if self.omega == 0.0:
            return math.inf
        return settings.STEP_FRACTION_PER_PERIOD / self.omega


@dataclass(frozen=True)
class TabulatedFlux:
    """Phi(t) from ordered (t, phi) samples, cubic-spline interpolated"""
    times: Tuple[float, ...]
    values: Tuple[float, ...]
    source: Optional[str] = None
    kind: ClassVar[str] = "tabulated"
    _spline: CubicSpline = field(init=False, repr=False, compare=False)
    _slope: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if times.ndim != 1 or times.shape != values.shape:
            raise DomainError("tabulated flux needs matching 1-D time and flux samples")
        if times.size < TABULATED_MIN_SAMPLES:
            raise DomainError(
                f"tabulated flux needs at least {TABULATED_MIN_SAMPLES} samples, got {times.size}"
            )
        if not np.all(np.diff(times) > 0.0):
            raise DomainError("tabulated flux sample times must be strictly increasing")
        if not (np.all(np.isfinite(times)) and np.all(np.isfinite(values))):
            raise DomainError("tabulated flux samples must be finite")

        object.__setattr__(self, "times", tuple(float(x) for x in times))
        object.__setattr__(self, "values", tuple(float(x) for x in values))
        spline = CubicSpline(times, values)
        object.__setattr__(self, "_spline", spline)
        object.__setattr__(self, "_slope", spline.derivative())

    @classmethod
    def from_samples(cls, samples: Sequence[Tuple[float, float]], source: Optional[str] = None) -> "TabulatedFlux":
        pairs = list(samples)
        return cls(
            times=tuple(p[0] for p in pairs),
            values=tuple(p[1] for p in pairs),
            source=source,
        )

    @classmethod
    def from_csv(cls, path: Union[str, Path]) -> "TabulatedFlux":
        """Load samples from a CSV file with header `t,phi`"""
        path = Path(path)
        try:
            with path.open("r", encoding="utf-8") as handle:
                header = handle.readline().strip().replace(" ", "")
                if header != TABULATED_CSV_HEADER:
                    raise DomainError(
                        f"{path}: expected header '{TABULATED_CSV_HEADER}', got '{header}'"
                    )
                data = np.loadtxt(handle, delimiter=",", ndmin=2)
        except DomainError:
            raise
        except OSError as e:
            raise DomainError(f"cannot read tabulated flux {path}: {e}") from e
        except ValueError as e:
            raise DomainError(f"{path}: malformed flux samples ({e})") from e

        if data.shape[1] != 2:
            raise DomainError(f"{path}: expected two columns t,phi")
        logger.debug(f"Loaded {data.shape[0]} flux samples from {path}")
        return cls(times=tuple(data[:, 0]), values=tuple(data[:, 1]), source=str(path))

    @property
    def interval(self) -> Tuple[float, float]:
        return self.times[0], self.times[-1]

    def _checked(self, t: ArrayLike) -> np.ndarray:
        lo, hi = self.interval
        slack = 1e-9 * (hi - lo)
        arr = np.asarray(t, dtype=float)
        if np.any(arr < lo - slack) or np.any(arr > hi + slack):
            bad = float(arr.min()) if np.any(arr < lo - slack) else float(arr.max())
            raise FluxRangeError(bad, self.interval)
        return np.clip(arr, lo, hi)

    def value(self, t: ArrayLike) -> ArrayLike:
        out = self._spline(self._checked(t))
        return out if np.ndim(t) else float(out)

    def derivative(self, t: ArrayLike) -> ArrayLike:
        out = self._slope(self._checked(t))
        return out if np.ndim(t) else float(out)

    def integral(self, a: float, b: float) -> float:
        """Exact integral of the interpolant"""
        lo, hi = self._checked(np.array([a, b]))
        return float(self._spline.integrate(lo, hi))

    def resolution_step(self) -> float:
        # each interpolation interval is crossed in at least two steps
        return 0.5 * float(np.min(np.diff(self.times)))


FluxProfile = Union[ConstantFlux, RampFlux, SinusoidFlux, TabulatedFlux]
AnalyticProfile = (ConstantFlux, RampFlux, SinusoidFlux)


def flux_value(profile: FluxProfile, t: ArrayLike) -> ArrayLike:
    """Phi(t) for any profile variant"""
    return profile.value(t)


def flux_derivative(profile: FluxProfile, t: ArrayLike) -> ArrayLike:
    """dPhi/dt for any profile variant"""
    return profile.derivative(t)
