import math

import pytest

from cli.schema import load_config, parse_config, profile_from_config, profile_to_config
from core.config import settings
from core.exceptions import ConfigError
from dynamics.electron import CouplingMode
from fields.profiles import ConstantFlux, RampFlux, SinusoidFlux, TabulatedFlux


def _document(profile: str, numerics: str = "", rho: float = 2.0, extra: str = "") -> str:
    return f"""
[solenoid]
R = 1.0

[solenoid.profile]
{profile}

[electron]
m = 1.0
e = 1.0
rho = {rho!r}
omega0 = 1.0

{numerics}
{extra}
"""


def test_minimal_document_gets_defaults(minimal_config):
    cfg = parse_config(minimal_config)
    assert cfg.profile == ConstantFlux(phi0=1.0)
    assert cfg.electron.coupling_mode is CouplingMode.CONSISTENT
    assert cfg.quad_rel_tol == settings.DEFAULT_QUAD_REL_TOL == 1e-10
    assert cfg.rk4_step is None
    assert cfg.step_for(cfg.encounter_T) == pytest.approx(math.pi / 100)
    assert cfg.sweep is None and cfg.dispersion is None


def test_orbit_inside_solenoid():
    with pytest.raises(ConfigError) as info:
        parse_config(_document('kind = "constant"\nphi0 = 1.0', rho=0.5))
    assert "electron.rho must exceed solenoid.R" in info.value.diagnostics
    assert info.value.exit_code == 2


def test_step_above_sinusoid_bound():
    text = _document('kind = "sinusoid"\nphi0 = 1.0\nphi1 = 0.1\nomega = 10.0', "[numerics]\nrk4_step = 0.1")
    with pytest.raises(ConfigError, match="numerics.rk4_step.*step bound 0.005"):
        parse_config(text)


def test_explicit_step_is_kept():
    text = _document('kind = "sinusoid"\nphi0 = 1.0\nphi1 = 0.1\nomega = 10.0', "[numerics]\nrk4_step = 0.001")
    cfg = parse_config(text)
    assert cfg.rk4_step == 0.001
    assert cfg.step_for(1.0) == 0.001


def test_unknown_key_is_named():
    with pytest.raises(ConfigError) as info:
        parse_config(_document('kind = "constant"\nphi0 = 1.0', extra="[numerics]\nrk4_stepp = 0.01"))
    assert "numerics.rk4_stepp: unknown key" in info.value.diagnostics


def test_type_mismatch_is_named():
    with pytest.raises(ConfigError) as info:
        parse_config(_document('kind = "constant"\nphi0 = "lots"'))
    assert any(d.startswith("solenoid.profile.constant.phi0:") for d in info.value.diagnostics)


def test_unknown_profile_kind():
    with pytest.raises(ConfigError, match="solenoid.profile"):
        parse_config(_document('kind = "square"\nphi0 = 1.0'))


@pytest.mark.parametrize("numerics", ["quad_rel_tol = 0.0", "quad_rel_tol = 1e-3"])
def test_quadrature_tolerance_range(numerics):
    with pytest.raises(ConfigError, match="numerics.quad_rel_tol"):
        parse_config(_document('kind = "constant"\nphi0 = 1.0', "[numerics]\n" + numerics))


@pytest.mark.parametrize("sweep, key", [
    ("omega_T_min = 0.0", "sweep.omega_T_min"),
    ("points = 1", "sweep.points"),
    ("omega_T_min = 5.0\nomega_T_max = 1.0", "sweep.omega_T_max must exceed"),
])
def test_sweep_invariants(sweep, key):
    with pytest.raises(ConfigError, match=key):
        parse_config(_document('kind = "constant"\nphi0 = 1.0', extra="[sweep]\n" + sweep))


def test_sweep_defaults():
    cfg = parse_config(_document('kind = "constant"\nphi0 = 1.0', extra="[sweep]\n"))
    assert (cfg.sweep.omega_T_min, cfg.sweep.omega_T_max, cfg.sweep.points, cfg.sweep.ratio) == (0.5, 40.0, 200, 0.1)


def test_malformed_document():
    with pytest.raises(ConfigError, match="malformed"):
        parse_config("[solenoid\nR = 1")


def test_coupling_mode_from_document():
    text = _document('kind = "ramp"\nrate = 0.5', extra='').replace("omega0 = 1.0", 'omega0 = 1.0\ncoupling_mode = "paper_literal"')
    cfg = parse_config(text)
    assert cfg.electron.coupling_mode is CouplingMode.PAPER_LITERAL
    assert cfg.profile == RampFlux(phi0=0.0, rate=0.5)


class TestTabulatedProfile:

    def _write_flux(self, path, t_max):
        rows = [f"{0.25 * i!r},{1.0 + 0.1 * i!r}" for i in range(int(t_max / 0.25) + 1)]
        path.write_text("t,phi\n" + "\n".join(rows) + "\n", encoding="utf-8")

    def test_relative_path_resolves_next_to_config(self, tmp_path, write_config):
        self._write_flux(tmp_path / "flux.csv", 4.0)
        path = write_config(_document('kind = "tabulated"\ncsv_path = "flux.csv"'))
        cfg = load_config(path)
        assert isinstance(cfg.profile, TabulatedFlux)
        assert cfg.profile.interval == (0.0, 4.0)

    def test_samples_must_cover_the_run(self, tmp_path, write_config):
        self._write_flux(tmp_path / "flux.csv", 2.0)
        path = write_config(_document('kind = "tabulated"\ncsv_path = "flux.csv"'))
        with pytest.raises(ConfigError, match=r"cover \[0, 2\]"):
            load_config(path)

    def test_missing_csv(self, write_config):
        path = write_config(_document('kind = "tabulated"\ncsv_path = "absent.csv"'))
        with pytest.raises(ConfigError, match="solenoid.profile.csv_path"):
            load_config(path)

    def test_sweep_needs_analytic_profile(self, tmp_path, write_config):
        self._write_flux(tmp_path / "flux.csv", 4.0)
        path = write_config(_document('kind = "tabulated"\ncsv_path = "flux.csv"', extra="[sweep]\n"))
        with pytest.raises(ConfigError, match="sweep"):
            load_config(path)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read configuration"):
        load_config(tmp_path / "absent.toml")


@pytest.mark.parametrize("profile", [
    ConstantFlux(phi0=2.0),
    RampFlux(phi0=0.5, rate=-1.0),
    SinusoidFlux(phi0=1.0, phi1=0.1, omega=3.0),
])
def test_profile_tables(profile):
    assert profile_from_config(profile_to_config(profile)) == profile


def test_tabulated_profile_table(tmp_path):
    path = tmp_path / "flux.csv"
    path.write_text("t,phi\n0,1\n1,2\n2,3\n3,4\n", encoding="utf-8")
    profile = TabulatedFlux.from_csv(path)
    assert profile_to_config(profile) == {"kind": "tabulated", "csv_path": str(path)}
    with pytest.raises(ConfigError):
        profile_to_config(TabulatedFlux(times=profile.times, values=profile.values))


def test_invalid_profile_table():
    with pytest.raises(ConfigError, match="profile"):
        profile_from_config({"kind": "sinusoid", "phi0": 1.0})
