"""
Run configuration documents
path: cli/schema.py

Documents are TOML with sections [solenoid] (+ [solenoid.profile]),
[electron], [numerics], optional [sweep] and [dispersion]. Pydantic
models validate the document; `parse_config` turns it into domain objects
and reports every problem as `<dotted.key>: <constraint>`.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from core.config import settings
from core.exceptions import ConfigError, DomainError
from dynamics.electron import CouplingMode, ElectronParams, max_step
from dynamics.encounter import encounter_time
from fields.profiles import ConstantFlux, FluxProfile, RampFlux, SinusoidFlux, TabulatedFlux
from fields.solenoid import SolenoidConfig

logger = logging.getLogger(__name__)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


# Flux profile models
class ConstantProfileModel(_Section):
    kind: Literal["constant"]
    phi0: float


class RampProfileModel(_Section):
    kind: Literal["ramp"]
    phi0: float = 0.0
    rate: float


class SinusoidProfileModel(_Section):
    kind: Literal["sinusoid"]
    phi0: float
    phi1: float
    omega: float = Field(ge=0.0)


class TabulatedProfileModel(_Section):
    kind: Literal["tabulated"]
    csv_path: str


ProfileModel = Annotated[
    Union[ConstantProfileModel, RampProfileModel, SinusoidProfileModel, TabulatedProfileModel],
    Field(discriminator="kind"),
]


class SolenoidModel(_Section):
    R: float = Field(gt=0.0)
    profile: ProfileModel


class ElectronModel(_Section):
    m: float = Field(gt=0.0)
    e: float = Field(gt=0.0)
    rho: float = Field(gt=0.0)
    omega0: float = Field(gt=0.0)
    coupling_mode: CouplingMode = CouplingMode.CONSISTENT


class NumericsModel(_Section):
    rk4_step: Optional[float] = Field(default=None, gt=0.0)
    quad_rel_tol: float = Field(default_factory=lambda: settings.DEFAULT_QUAD_REL_TOL, gt=0.0, le=1e-4)


class SweepModel(_Section):
    omega_T_min: float = Field(default=0.5, gt=0.0)
    omega_T_max: float = Field(default=40.0, gt=0.0)
    points: int = Field(default=200, ge=2)
    ratio: float = 0.1

    @model_validator(mode="after")
    def check_order(self):
        if not self.omega_T_max > self.omega_T_min:
            raise ValueError("sweep.omega_T_max must exceed sweep.omega_T_min")
        return self


class DispersionModel(_Section):
    omega0_min: float = Field(gt=0.0)
    omega0_max: float = Field(gt=0.0)
    points: int = Field(default=50, ge=2)

    @model_validator(mode="after")
    def check_order(self):
        if not self.omega0_max > self.omega0_min:
            raise ValueError("dispersion.omega0_max must exceed dispersion.omega0_min")
        return self


class RunConfigModel(_Section):
    solenoid: SolenoidModel
    electron: ElectronModel
    numerics: NumericsModel = NumericsModel()
    sweep: Optional[SweepModel] = None
    dispersion: Optional[DispersionModel] = None

    @model_validator(mode="after")
    def check_orbit_outside(self):
        if not self.electron.rho > self.solenoid.R:
            raise ValueError("electron.rho must exceed solenoid.R")
        return self


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration"""
    solenoid: SolenoidConfig
    electron: ElectronParams
    rk4_step: Optional[float]
    quad_rel_tol: float
    sweep: Optional[SweepModel] = None
    dispersion: Optional[DispersionModel] = None

    @property
    def profile(self) -> FluxProfile:
        return self.solenoid.profile

    @property
    def encounter_T(self) -> float:
        return encounter_time(self.electron)

    def step_for(self, t_end: float, profile: Optional[FluxProfile] = None) -> float:
        """Configured RK4 step, or the largest admissible one when unset"""
        if self.rk4_step is None:
            return max_step(profile or self.profile, t_end)
        return self.rk4_step


def profile_from_config(data: Dict[str, Any], base_dir: Optional[Path] = None) -> FluxProfile:
    """Build a flux profile from its `solenoid.profile` table.

    Library entry point for callers holding a table rather than a whole run
    document; the inverse of profile_to_config.
    """
    # the discriminated union is validated through its enclosing section
    try:
        section = SolenoidModel.model_validate({"R": 1.0, "profile": data}).profile
    except ValidationError as e:
        diagnostics = _diagnostics(e)
        raise ConfigError("; ".join(diagnostics), diagnostics) from e
    return _profile_from_model(section, base_dir)


def profile_to_config(profile: FluxProfile) -> Dict[str, Any]:
    """The `solenoid.profile` table that rebuilds `profile` through profile_from_config"""
    if isinstance(profile, ConstantFlux):
        return {"kind": "constant", "phi0": profile.phi0}
    if isinstance(profile, RampFlux):
        return {"kind": "ramp", "phi0": profile.phi0, "rate": profile.rate}
    if isinstance(profile, SinusoidFlux):
        return {"kind": "sinusoid", "phi0": profile.phi0, "phi1": profile.phi1, "omega": profile.omega}
    if profile.source is None:
        raise ConfigError("tabulated flux without a source file cannot be written to a configuration")
    return {"kind": "tabulated", "csv_path": profile.source}


def _profile_from_model(model, base_dir: Optional[Path]) -> FluxProfile:
    if isinstance(model, ConstantProfileModel):
        return ConstantFlux(phi0=model.phi0)
    if isinstance(model, RampProfileModel):
        return RampFlux(phi0=model.phi0, rate=model.rate)
    if isinstance(model, SinusoidProfileModel):
        return SinusoidFlux(phi0=model.phi0, phi1=model.phi1, omega=model.omega)
    path = Path(model.csv_path)
    if not path.is_absolute() and base_dir is not None:
        path = base_dir / path
    try:
        return TabulatedFlux.from_csv(path)
    except DomainError as e:
        raise ConfigError(f"solenoid.profile.csv_path: {e}") from e


def _diagnostics(error: ValidationError) -> List[str]:
    lines = []
    for item in error.errors():
        key = ".".join(str(part) for part in item["loc"])
        message = item["msg"]
        if message.startswith("Value error, "):
            message = message[len("Value error, "):]
        if item["type"] == "extra_forbidden":
            message = "unknown key"
        lines.append(f"{key}: {message}" if key else message)
    return lines


def parse_config(text: str, base_dir: Optional[Path] = None) -> RunConfig:
    """Parse and validate a TOML run configuration document"""
    try:
        document = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"malformed configuration document: {e}") from e

    try:
        model = RunConfigModel.model_validate(document)
    except ValidationError as e:
        diagnostics = _diagnostics(e)
        raise ConfigError("; ".join(diagnostics), diagnostics) from e

    profile = _profile_from_model(model.solenoid.profile, base_dir)
    try:
        solenoid = SolenoidConfig(R=model.solenoid.R, profile=profile)
        electron = ElectronParams(
            m=model.electron.m,
            e=model.electron.e,
            rho=model.electron.rho,
            omega0=model.electron.omega0,
            coupling_mode=model.electron.coupling_mode,
        )
    except DomainError as e:
        raise ConfigError(str(e)) from e

    T = encounter_time(electron)
    if isinstance(profile, TabulatedFlux):
        lo, hi = profile.interval
        if lo > 0.0 or hi < T:
            raise ConfigError(
                f"solenoid.profile.csv_path: samples cover [{lo:g}, {hi:g}] "
                f"but the run needs [0, {T:g}]"
            )

    bound = max_step(profile, T)
    step = model.numerics.rk4_step
    if step is not None and step > bound * (1.0 + 1e-12):
        raise ConfigError(f"numerics.rk4_step: {step:g} exceeds the step bound {bound:g}")

    if model.sweep is not None and not hasattr(profile, "phi0"):
        raise ConfigError("sweep: needs a constant, ramp or sinusoid profile to take phi0 from")

    logger.debug(f"Parsed run configuration: R={solenoid.R:g}, profile={profile.kind}, T={T:g}")
    return RunConfig(
        solenoid=solenoid,
        electron=electron,
        rk4_step=step,
        quad_rel_tol=model.numerics.quad_rel_tol,
        sweep=model.sweep,
        dispersion=model.dispersion,
    )


def load_config(path: Union[str, Path]) -> RunConfig:
    """Read and parse a configuration file; relative CSV paths resolve next to it"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read configuration {path}: {e}") from e
    return parse_config(text, base_dir=path.parent)

