"""
Subcommands of the time-dependent AB laboratory
path: cli/commands.py

  fields      --config F --rho X --t T
  trajectory  --config F --branch c1|c2 --t-end X --out PATH
  phase       --config F --route mean|closed|numeric|field_free [--c1 PATH --c2 PATH]
  sweep       --config F --out PATH [--plot-data PATH] [--with-mirror] [--summary PATH]
  dispersion  --config F --out PATH

Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 solver failure.
"""

import argparse
import logging
import sys
from typing import List, Optional

from cli.output import (
    FIELD_HEADER,
    emit_csv,
    emit_plot_data,
    emit_trajectory,
    read_trajectory,
    render_dispersion,
    render_phase,
    render_summaries,
    render_table,
    write_bytes,
)
from cli.schema import RunConfig, load_config
from cli.sweep import run_dispersion, run_sweep
from core.exceptions import ConfigError, LabError
from core.logging_config import get_error_logger, setup_logging
from core.metrics import MetricsManager
from dynamics.electron import Branch
from dynamics.integrator import integrate_trajectory
from fields.solenoid import CylPoint, field_at
from phase.routes import PhaseRoute, ab_phase, phase_from_trajectories
from phase.sinusoid import sinusoid_summary

logger = logging.getLogger(__name__)
error_logger = get_error_logger()


def _stdout_bytes(payload: bytes):
    sys.stdout.flush()
    write_bytes(payload, sys.stdout.buffer)
    sys.stdout.buffer.flush()


def cmd_fields(args, cfg: RunConfig, metrics: MetricsManager) -> int:
    with metrics.track("fields", f"rho={args.rho:g} t={args.t:g}"):
        sample = field_at(cfg.solenoid, CylPoint(rho=args.rho, phi=args.phi, z=args.z), args.t)
    _stdout_bytes(render_table(FIELD_HEADER, [(sample.b_z, sample.a_phi, sample.e_phi)]))
    return 0


def cmd_trajectory(args, cfg: RunConfig, metrics: MetricsManager) -> int:
    branch = Branch(args.branch)
    step = cfg.step_for(args.t_end)
    with metrics.track("integration", branch.value) as info:
        traj = integrate_trajectory(cfg.electron, cfg.solenoid, branch, args.t_end, step)
        info["steps"] = len(traj) - 1
    emit_trajectory(traj, args.out)
    return 0


def cmd_phase(args, cfg: RunConfig, metrics: MetricsManager) -> int:
    route = PhaseRoute(args.route)
    if args.c1 or args.c2:
        # exported RK4 beams stand in for the numeric route
        if not (args.c1 and args.c2):
            raise ConfigError("--c1 and --c2 must be given together")
        c1 = read_trajectory(args.c1, Branch.C1)
        c2 = read_trajectory(args.c2, Branch.C2)
        with metrics.track("phase", "trajectory files") as info:
            result = phase_from_trajectories(cfg.profile, cfg.electron, c1, c2)
            info["steps"] = len(c1) - 1
        _stdout_bytes(render_phase(result))
        return 0

    step = cfg.step_for(cfg.encounter_T)
    with metrics.track("phase", route.value):
        result = ab_phase(cfg.profile, cfg.electron, cfg.solenoid, route, step, cfg.quad_rel_tol)
    _stdout_bytes(render_phase(result))
    return 0


def cmd_sweep(args, cfg: RunConfig, metrics: MetricsManager) -> int:
    with metrics.track("sweep", f"ratio={cfg.sweep.ratio:g}" if cfg.sweep else "") as info:
        rows = run_sweep(cfg, workers=args.workers)
        info["steps"] = len(rows)
    emit_csv(rows, args.out)
    if args.plot_data:
        emit_plot_data(rows, args.plot_data, with_mirror=args.with_mirror)
    if args.summary:
        summaries = [sinusoid_summary(cfg.sweep.ratio, row.omega_T) for row in rows]
        write_bytes(render_summaries(summaries), args.summary)
    return 0


def cmd_dispersion(args, cfg: RunConfig, metrics: MetricsManager) -> int:
    with metrics.track("dispersion") as info:
        rows = run_dispersion(cfg)
        info["steps"] = len(rows)
    write_bytes(render_dispersion(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdab",
        description="Numerical laboratory for the time-dependent Aharonov-Bohm effect",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default from settings)")
    parser.add_argument("--no-log-files", action="store_true", help="Log to stderr only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fields", help="Evaluate B_z, A_phi and E_phi at one point")
    p.add_argument("--config", required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--z", type=float, default=0.0)
    p.set_defaults(handler=cmd_fields)

    p = sub.add_parser("trajectory", help="Integrate one beam and write t,phi,omega")
    p.add_argument("--config", required=True)
    p.add_argument("--branch", choices=[b.value for b in Branch], required=True)
    p.add_argument("--t-end", dest="t_end", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_trajectory)

    p = sub.add_parser("phase", help="AB phase and encounter angle by one route")
    p.add_argument("--config", required=True)
    p.add_argument("--route", choices=[r.value for r in PhaseRoute], default=PhaseRoute.MEAN_FLUX.value)
    p.add_argument("--c1", default=None, help="C1 trajectory CSV written by the trajectory subcommand")
    p.add_argument("--c2", default=None, help="C2 trajectory CSV written by the trajectory subcommand")
    p.set_defaults(handler=cmd_phase)

    p = sub.add_parser("sweep", help="f(Omega T) sweep for the offset sinusoid")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--plot-data", dest="plot_data", default=None)
    p.add_argument("--with-mirror", dest="with_mirror", action="store_true")
    p.add_argument("--summary", default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("dispersion", help="phi_AB and phi_f against the launch speed")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_dispersion)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(level=args.log_level, file_logging=False if args.no_log_files else None)
    metrics = MetricsManager()
    logger.info(f"Running {args.command} with config {args.config}")

    try:
        cfg = load_config(args.config)
        return args.handler(args, cfg, metrics)
    except LabError as e:
        metrics.record_error(type(e).__name__, str(e), {"command": args.command})
        error_logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    finally:
        metrics.log_final_summary()
