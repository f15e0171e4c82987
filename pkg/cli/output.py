"""
CSV and plot-data emission
path: cli/output.py

UTF-8, LF line endings, floats as 17 significant digits, no trailing
blank line. Output is byte-identical for identical inputs.
"""

import csv
import io
import logging
from enum import Enum
from pathlib import Path
from typing import BinaryIO, Iterable, List, Sequence, Union

import numpy as np

from core.exceptions import DomainError, OutputError
from dynamics.electron import Branch
from dynamics.integrator import Trajectory
from phase.routes import PhaseResult, VelocityRow
from phase.sinusoid import SinusoidSummary

logger = logging.getLogger(__name__)

Destination = Union[str, Path, BinaryIO]

SWEEP_HEADER = ("omega_T", "f", "phi_AB", "phi_f")
TRAJECTORY_HEADER = ("t", "phi", "omega")
PHASE_HEADER = ("T", "phi_AB", "phi_f", "route")
SUMMARY_HEADER = ("omega_T", "f", "ratio")
DISPERSION_HEADER = ("omega0", "T", "phi_AB", "phi_f")
FIELD_HEADER = ("B_z", "A_phi", "E_phi")


def format_float(x: float) -> str:
    return f"{float(x):.17g}"


def _cell(value) -> str:
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, str):
        return value
    return format_float(value)


def render_table(header: Sequence[str], rows: Iterable[Sequence]) -> bytes:
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue().encode("utf-8")


def write_bytes(payload: bytes, destination: Destination):
    """Write to a path or an open binary stream; failures raise OutputError"""
    try:
        if hasattr(destination, "write"):
            destination.write(payload)
            return
        path = Path(destination)
        with path.open("wb") as handle:
            handle.write(payload)
        logger.info(f"Wrote {len(payload)} bytes to {path}")
    except OSError as e:
        raise OutputError(f"cannot write {destination}: {e}") from e


def render_csv(rows) -> bytes:
    return render_table(SWEEP_HEADER, ((r.omega_T, r.f, r.phi_AB, r.phi_f) for r in rows))


def emit_csv(rows, destination: Destination) -> bytes:
    """Sweep rows as `omega_T,f,phi_AB,phi_f`"""
    payload = render_csv(rows)
    write_bytes(payload, destination)
    return payload


def render_plot_data(rows, with_mirror: bool = False) -> bytes:
    lines: List[str] = ["# omega_T f f_mirror" if with_mirror else "# omega_T f"]
    for r in rows:
        cells = [format_float(r.omega_T), format_float(r.f)]
        if with_mirror:
            cells.append(format_float(r.f_mirror))
        lines.append(" ".join(cells))
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_plot_data(rows, destination: Destination, with_mirror: bool = False) -> bytes:
    """Whitespace-separated (omega_T, f) columns for external plotting tools.

    The first line is a `#` comment naming the columns, which gnuplot and
    numpy.loadtxt skip, so every data line has exactly two numbers (three
    with `with_mirror`). The CSV emitters carry their header as a plain row
    instead.
    """
    payload = render_plot_data(rows, with_mirror)
    write_bytes(payload, destination)
    return payload


def emit_trajectory(traj: Trajectory, destination: Destination) -> bytes:
    payload = render_table(TRAJECTORY_HEADER, traj.samples())
    write_bytes(payload, destination)
    return payload


def read_trajectory(path: Union[str, Path], branch: Branch) -> Trajectory:
    """Load a trajectory written by emit_trajectory (`phase --c1 --c2`)"""
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            header = tuple(next(reader, ()))
            if header != TRAJECTORY_HEADER:
                raise DomainError(f"{path}: expected header {','.join(TRAJECTORY_HEADER)}")
            data = np.array([[float(c) for c in row] for row in reader if row], dtype=float)
    except DomainError:
        raise
    except OSError as e:
        raise OutputError(f"cannot read {path}: {e}") from e
    except ValueError as e:
        raise DomainError(f"{path}: malformed trajectory sample ({e})") from e
    if data.shape[0] < 2:
        raise DomainError(f"{path}: a trajectory needs at least two samples")
    return Trajectory(
        branch=branch,
        times=data[:, 0],
        phi=data[:, 1],
        omega=data[:, 2],
        step=float(data[1, 0] - data[0, 0]),
        method="csv",
    )


def render_phase(result: PhaseResult) -> bytes:
    return render_table(PHASE_HEADER, [(result.T, result.phi_AB, result.phi_f, result.route)])


def render_summaries(summaries: Iterable[SinusoidSummary]) -> bytes:
    return render_table(SUMMARY_HEADER, ((s.omega_T, s.f, s.ratio) for s in summaries))


def render_dispersion(rows: Iterable[VelocityRow]) -> bytes:
    return render_table(DISPERSION_HEADER, ((r.omega0, r.T, r.phi_AB, r.phi_f) for r in rows))
