import logging
import math
from dataclasses import asdict, dataclass, field, fields, replace

import numpy as np

from .engine_exception import ConfigError

logger = logging.getLogger(__name__)


@dataclass
class AgentState:
    """Local iterate ``X``, trackers ``U`` and ``V`` and direction ``H`` of one agent."""

    X: np.ndarray
    U: np.ndarray
    V: np.ndarray
    H: np.ndarray


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one run.

    Raises
    ------
    `~cdadt.engine.ConfigError`
        If ``eta`` or ``beta`` is not positive, ``max_iters`` is negative,
        or a tolerance or ``rho`` is negative.
    """

    eta: float = 1e-3
    beta: float = 1.0
    max_iters: int = 10000
    tol_stationarity: float = 1e-6
    tol_consensus: float = 1e-6
    tol_feasibility: float = 1e-6
    rho: float = 1e-2
    record_merit: bool = True
    log_every: int = 100

    def __post_init__(self):
        for name in ("eta", "beta"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be positive and finite, got {value}")
        if self.max_iters < 0:
            raise ConfigError(f"max_iters must be nonnegative, got {self.max_iters}")
        for name in ("tol_stationarity", "tol_consensus", "tol_feasibility", "rho"):
            value = getattr(self, name)
            if not value > 0:
                raise ConfigError(f"{name} must be positive, got {value}")
        if self.log_every < 1:
            raise ConfigError(f"log_every must be positive, got {self.log_every}")

    @classmethod
    def from_config(cls, config, **overrides):
        """Build from the ``[run]`` section of a config, then apply overrides.

        Overrides equal to ``None`` are ignored, so unset command-line
        options fall back to the config file.
        """
        defaults = cls()
        values = {}
        for f in fields(cls):
            default = getattr(defaults, f.name)
            if isinstance(default, bool):
                values[f.name] = config.getboolean("run", f.name, fallback=default)
            elif isinstance(default, int):
                values[f.name] = config.getint("run", f.name, fallback=default)
            else:
                values[f.name] = config.getfloat("run", f.name, fallback=default)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_tolerance(self, tol):
        """Copy with all three stopping tolerances set to ``tol``."""
        return replace(
            self, tol_stationarity=tol, tol_consensus=tol, tol_feasibility=tol
        )

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class IterationLog:
    """Metrics of the network state after ``iter`` iterations."""

    iter: int
    stat_viol: float
    consensus_err: float
    feas_viol: float
    objective: float
    merit: float = None


@dataclass
class RunResult:
    """Outcome of `~cdadt.engine.run`.

    ``logs`` holds one record per completed iteration, starting with the
    initial state at iteration 0.
    """

    final_states: list
    logs: list
    converged: bool
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def iterations(self):
        return self.logs[-1].iter if self.logs else 0

    @property
    def rounds_of_communication(self):
        """Three neighbor exchanges per iteration: X, U and V."""
        return 3 * self.iterations

    @property
    def final(self):
        return self.logs[-1]

    def mean_X(self):
        return np.mean(np.stack([s.X for s in self.final_states]), axis=0)
