import json
import logging
import os

import numpy as np
from astropy.io import ascii
from astropy.table import MaskedColumn, Table

from ..problem import MatrixFileError, save_matrix_csv
from .engine_exception import LogFormatError
from .state import IterationLog

logger = logging.getLogger(__name__)

LOG_COLUMNS = ("iter", "stat_viol", "consensus_err", "feas_viol", "objective", "merit")
STATE_BLOCKS = ("X", "U", "V", "H")


def logs_to_table(logs):
    """`~astropy.table.Table` of iteration records, with ``merit`` masked where absent."""
    table = Table()
    table["iter"] = np.array([entry.iter for entry in logs], dtype=np.int64)
    for name in LOG_COLUMNS[1:-1]:
        table[name] = np.array([getattr(entry, name) for entry in logs], dtype=np.float64)
    table["merit"] = MaskedColumn(
        [np.nan if entry.merit is None else entry.merit for entry in logs],
        mask=[entry.merit is None for entry in logs],
        dtype=np.float64,
    )
    return table


def write_log_csv(logs, path):
    """Write iteration records as CSV with header ``iter,stat_viol,...,merit``.

    Reals carry 17 significant digits, so a rerun of the same manifest
    reproduces the file byte for byte. A missing merit is an empty cell.
    """
    table = logs_to_table(logs)
    formats = {name: "%.17g" for name in LOG_COLUMNS[1:]}
    try:
        table.write(path, format="ascii.csv", formats=formats, overwrite=True)
    except OSError as e:
        raise MatrixFileError(f"cannot write log '{path}': {e}")
    logger.debug(f"write_log_csv: {len(logs)} row(s) to {path}")


def read_log_csv(path):
    """Read a log written by `write_log_csv` back into `IterationLog` records.

    Raises
    ------
    `~cdadt.engine.LogFormatError`
        If the file cannot be parsed, lacks a column, or is empty.
    """
    if not os.path.isfile(path):
        raise LogFormatError(f"log file '{path}' does not exist")
    try:
        table = ascii.read(path, format="csv")
    except Exception as e:
        raise LogFormatError(f"cannot parse log '{path}': {e}")

    missing = [name for name in LOG_COLUMNS if name not in table.colnames]
    if missing:
        raise LogFormatError(f"log '{path}' lacks column(s) {', '.join(missing)}")
    if len(table) == 0:
        raise LogFormatError(f"log '{path}' has no rows")

    logs = []
    for row in table:
        merit = row["merit"]
        try:
            entry = IterationLog(
                iter=int(row["iter"]),
                stat_viol=float(row["stat_viol"]),
                consensus_err=float(row["consensus_err"]),
                feas_viol=float(row["feas_viol"]),
                objective=float(row["objective"]),
                merit=None if np.ma.is_masked(merit) else float(merit),
            )
        except (TypeError, ValueError) as e:
            raise LogFormatError(f"invalid value in log '{path}': {e}")
        logs.append(entry)
    return logs


def write_states(result, out_dir):
    """Write every agent's final blocks as ``agent_<i>_<block>.csv`` in ``out_dir``."""
    os.makedirs(out_dir, exist_ok=True)
    for i, state in enumerate(result.final_states):
        for block in STATE_BLOCKS:
            save_matrix_csv(
                os.path.join(out_dir, f"agent_{i}_{block}.csv"), getattr(state, block)
            )


def write_summary(result, path, **extra):
    """Write the final metrics of a run and any extra fields as JSON."""
    final = result.final
    summary = {
        "iterations": result.iterations,
        "rounds": result.rounds_of_communication,
        "converged": bool(result.converged),
        "wall_time": result.wall_time,
        "stat_viol": final.stat_viol,
        "consensus_err": final.consensus_err,
        "feas_viol": final.feas_viol,
        "objective": final.objective,
        "merit": final.merit,
    }
    summary.update(extra)
    try:
        with open(path, "w") as f:
            json.dump(summary, f, indent=2)
    except OSError as e:
        raise MatrixFileError(f"cannot write summary '{path}': {e}")
    return summary
