import glob
import json
import logging
import os

import click
import numpy as np
import prettytable
from astropy.table import Table

from ..engine import LogFormatError, iterations_to_threshold, read_log_csv
from ..utils import CdadtCommand, IOFailure, read_config
from ..utils._config import _get_list
from ._options import EPILOG, _float_list, common_options, configure_logging

logger = logging.getLogger(__name__)


def _read_json(path):
    with open(path) as f:
        return json.load(f)


def summarize_log(log_path, thresholds):
    """Report row for one ``log.csv`` and the manifest and summary next to it.

    Raises
    ------
    `~cdadt.engine.LogFormatError`
        If the log or its manifest is missing or unreadable.
    """
    logs = read_log_csv(log_path)
    run_dir = os.path.dirname(log_path)

    try:
        manifest = _read_json(os.path.join(run_dir, "manifest.json"))
        lam = float(manifest["derived"]["lambda"])
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise LogFormatError(f"no usable manifest.json next to {log_path}: {e}")

    wall_time = np.nan
    try:
        wall_time = float(_read_json(os.path.join(run_dir, "summary.json"))["wall_time"])
    except (OSError, ValueError, KeyError, TypeError):
        logger.debug(f"no wall time recorded for {log_path}")

    final = logs[-1]
    row = {
        "log": os.path.relpath(log_path),
        "lambda": lam,
        "iterations": final.iter,
        "stat_viol": final.stat_viol,
        "consensus_err": final.consensus_err,
        "feas_viol": final.feas_viol,
        "objective": final.objective,
        "wall_time": wall_time,
    }
    for threshold in thresholds:
        k = iterations_to_threshold(logs, threshold)
        row[f"iters_to_{threshold:g}"] = -1 if k is None else k
    return row


@click.command(cls=CdadtCommand, epilog=EPILOG)
@click.argument("directory", type=click.Path(file_okay=False))
@click.option(
    "--thresholds",
    callback=_float_list,
    help="Comma-separated accuracies for the iterations-to-threshold columns.",
)
@click.option(
    "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Summary CSV path [default DIRECTORY/report.csv].",
)
@common_options
@click.version_option()
def report_cli(directory, thresholds, output, config, verbose):
    """Summarize every log.csv below DIRECTORY.

    One row per log with its final metrics, the iterations needed to
    bring all three metrics below each threshold, the connectivity lambda
    from its manifest and the wall time, sorted by lambda. Unreadable
    logs are listed and make the command exit with code 3.
    """
    configure_logging(verbose)
    logger.debug(f"report(directory={directory}, thresholds={thresholds}, output={output})")
    cfg = read_config(config)
    thresholds = thresholds or _get_list(cfg, "sweep", "thresholds")

    if not os.path.isdir(directory):
        raise IOFailure(f"directory '{directory}' does not exist")
    log_paths = sorted(glob.glob(os.path.join(directory, "**", "log.csv"), recursive=True))
    if len(log_paths) == 0:
        raise IOFailure(f"no log.csv found below '{directory}'")

    rows, errors = [], []
    for log_path in log_paths:
        try:
            rows.append(summarize_log(log_path, thresholds))
        except LogFormatError as e:
            logger.error(str(e))
            errors.append((log_path, str(e)))

    if rows:
        rows.sort(key=lambda r: r["lambda"])
        names = tuple(rows[0].keys())
        output = output or os.path.join(directory, "report.csv")
        try:
            Table(rows=rows, names=names).write(output, format="ascii.csv", overwrite=True)
        except OSError as e:
            raise IOFailure(f"cannot write report '{output}': {e}")

        table = prettytable.PrettyTable()
        table.set_style(prettytable.SINGLE_BORDER)
        table.field_names = names
        for row in rows:
            table.add_row(
                [f"{v:.3e}" if isinstance(v, float) else v for v in row.values()]
            )
        click.echo(table)

    if errors:
        click.echo("Unreadable logs:", err=True)
        for path, message in errors:
            click.echo(f"  {path}: {message}", err=True)
        raise IOFailure(f"{len(errors)} of {len(log_paths)} log(s) could not be read")


report = report_cli.callback
