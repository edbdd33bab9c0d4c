# isort: skip_file

import logging

logger = logging.getLogger(__name__)

from .engine_exception import (
    EngineException,
    ConfigError,
    DivergenceError,
    LogFormatError,
)
from .state import AgentState, RunConfig, IterationLog, RunResult
from .directions import (
    cd_operator,
    penalty_h,
    penalty_grad,
    direction_S,
    direction_Q,
    centralized_H,
    tracked_directions,
)
from .diagnostics import (
    METRIC_NAMES,
    feasibility_residual,
    epsilon_stationarity,
    reduces_stationarity,
    merit_is_monotone,
    iterations_to_threshold,
)
from .cdadt_run import (
    local_direction,
    mix_step,
    track_step,
    metrics,
    merit,
    initial_point,
    run,
    tune_stepsize,
)
from .records import (
    LOG_COLUMNS,
    logs_to_table,
    write_log_csv,
    read_log_csv,
    write_states,
    write_summary,
)

__all__ = [
    "EngineException",
    "ConfigError",
    "DivergenceError",
    "LogFormatError",
    "AgentState",
    "RunConfig",
    "IterationLog",
    "RunResult",
    "cd_operator",
    "penalty_h",
    "penalty_grad",
    "direction_S",
    "direction_Q",
    "centralized_H",
    "tracked_directions",
    "METRIC_NAMES",
    "feasibility_residual",
    "epsilon_stationarity",
    "reduces_stationarity",
    "merit_is_monotone",
    "iterations_to_threshold",
    "local_direction",
    "mix_step",
    "track_step",
    "metrics",
    "merit",
    "initial_point",
    "run",
    "tune_stepsize",
    "LOG_COLUMNS",
    "logs_to_table",
    "write_log_csv",
    "read_log_csv",
    "write_states",
    "write_summary",
]
