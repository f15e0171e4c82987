"""
Configuration management for the time-dependent AB laboratory
path: core/config.py
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process settings (logging and numeric defaults)"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="TDAB_",
        case_sensitive=True,
        extra="ignore",
    )

    # Logging settings
    LOG_LEVEL: str = Field(default="INFO", description="Logging level")
    LOG_FORMAT: str = Field(default="%(asctime)s - %(name)s - %(levelname)s - %(message)s", description="Log format")
    LOG_DIR: str = Field(default="logs", description="Directory for rotating log files")
    FILE_LOGGING: bool = Field(default=True, description="Write rotating log files in addition to stderr")
    METRICS_LOG_FILE: str = Field(default="solver_metrics.log", description="Solver metrics log file name")
    PERFORMANCE_LOG_FILE: str = Field(default="performance.log", description="Performance log file name")
    ERROR_LOG_FILE: str = Field(default="errors.log", description="Error log file name")

    # Quadrature settings
    DEFAULT_QUAD_REL_TOL: float = Field(default=1e-10, description="Relative tolerance of the adaptive Simpson oracle")
    QUAD_MAX_DEPTH: int = Field(default=30, description="Maximum recursion depth of adaptive Simpson")
    QUAD_MAX_EVALS: int = Field(default=500_000, description="Integrand evaluations before adaptive Simpson gives up")

    # Integrator settings
    STEP_FRACTION_PER_PERIOD: float = Field(default=0.05, description="Largest allowed Omega*step for oscillating flux")
    MIN_STEPS_PER_RUN: int = Field(default=100, description="Minimum number of RK4 steps over a run")

    # Root finding settings
    BRACKET_EXPANSION: float = Field(default=0.10, description="Relative half-width of the encounter-time bracket")
    MAX_BRACKET_TRIES: int = Field(default=8, description="Bracket widenings before giving up")
    BISECTION_XTOL: float = Field(default=1e-12, description="Absolute tolerance of the encounter-time bisection")
    BISECTION_MAXITER: int = Field(default=200, description="Bisection iteration limit")

    # Sweep settings
    SWEEP_WORKERS: int = Field(default=1, description="Worker processes for sweeps (1 = in-process)")


# Global settings instance
settings = Settings()
