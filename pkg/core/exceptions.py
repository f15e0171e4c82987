"""
Exception hierarchy for the time-dependent AB laboratory
path: core/exceptions.py

Every error carries the process exit code the command line maps it to.
"""

from typing import Optional, Tuple


class LabError(Exception):
    """Base class for all laboratory errors"""

    exit_code: int = 1


class ConfigError(LabError):
    """Invalid configuration document or command-line argument"""

    exit_code = 2

    def __init__(self, message: str, diagnostics: Optional[list] = None):
        super().__init__(message)
        self.diagnostics = list(diagnostics or [message])


class DomainError(LabError, ValueError):
    """Violated precondition of a numeric operation"""

    exit_code = 2


class FluxRangeError(DomainError):
    """Tabulated flux evaluated outside its sample interval"""

    def __init__(self, t: float, interval: Tuple[float, float]):
        self.t = t
        self.interval = interval
        super().__init__(
            f"t={t!r} outside tabulated flux range [{interval[0]!r}, {interval[1]!r}]"
        )


class StepTooCoarseError(DomainError):
    """RK4 step above the resolution bound of the flux profile"""

    def __init__(self, step: float, bound: float):
        self.step = step
        self.bound = bound
        super().__init__(f"step {step:g} exceeds the step bound {bound:g}")


class OutputError(LabError):
    """Output destination cannot be written"""

    exit_code = 3


class SolverError(LabError):
    """Numeric solver failure (bracketing or convergence)"""

    exit_code = 4
