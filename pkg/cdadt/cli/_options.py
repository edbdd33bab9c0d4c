import json
import logging
import os
from contextlib import contextmanager

import click

from ..engine import (
    DivergenceError,
    LogFormatError,
    epsilon_stationarity,
    run,
    write_log_csv,
    write_states,
    write_summary,
)
from ..problem import MatrixFileError
from ..utils import CdadtException, IOFailure, RuntimeFailure, UsageFailure

logger = logging.getLogger(__name__)

EPILOG = """Check out the README for more information."""


def _float_list(ctx, param, value):
    if value is None:
        return None
    try:
        return [float(v) for v in value.split(",") if v.strip() != ""]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got '{value}'")


def _name_list(ctx, param, value):
    if value is None:
        return None
    return [v.strip() for v in value.split(",") if v.strip() != ""]


def common_options(f):
    """``--config`` and ``--verbose``."""
    options = [
        click.option(
            "-c",
            "--config",
            type=click.Path(exists=True, dir_okay=False),
            default=None,
            help="Config file overriding the packaged defaults.",
        ),
        click.option(
            "-v", "--verbose", count=True, type=click.IntRange(0, 1), help="Verbose output."
        ),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def data_options(f):
    """Options describing the synthetic or CSV data views."""
    options = [
        click.option("--n", type=click.IntRange(min=1), help="Rows of view A."),
        click.option("--m", type=click.IntRange(min=1), help="Rows of view B."),
        click.option("--q", type=click.IntRange(min=1), help="Number of samples."),
        click.option(
            "--xi-a",
            type=click.FloatRange(0, 1, min_open=True, max_open=True),
            help="Singular value decay of A.",
        ),
        click.option(
            "--xi-b",
            type=click.FloatRange(0, 1, min_open=True, max_open=True),
            help="Singular value decay of B.",
        ),
        click.option(
            "--seed",
            type=int,
            help="Seed of the data generator (B uses seed + 1) and of the random graph.",
        ),
        click.option(
            "--correlations",
            callback=_float_list,
            help="""Comma-separated canonical correlations in [0, 1). Generates
                whitened views with these planted correlations instead of
                decaying factors.""",
        ),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def problem_options(f):
    """Data options plus ``--p``, ``--d``, CSV inputs and the ridge."""
    options = [
        click.option("--p", type=click.IntRange(min=1), help="Number of canonical directions."),
        click.option("--d", type=click.IntRange(min=1), help="Number of agents."),
        click.option(
            "--data-a",
            type=click.Path(dir_okay=False),
            help="CSV file of view A, one row per feature.",
        ),
        click.option(
            "--data-b",
            type=click.Path(dir_okay=False),
            help="CSV file of view B, one row per feature.",
        ),
        click.option(
            "--ridge",
            type=click.FloatRange(min=0),
            help="Ridge added to M [default 1e-8 tr(M)/n].",
        ),
    ]
    f = data_options(f)
    for option in reversed(options):
        f = option(f)
    return f


def topology_options(f):
    options = [
        click.option(
            "--topology",
            type=click.Choice(["er", "grid", "ring"]),
            help="Communication graph [default er].",
        ),
        click.option(
            "--p-edge",
            type=click.FloatRange(0, 1, min_open=True),
            help="Edge probability of the Erdos-Renyi graph.",
        ),
        click.option("--grid-rows", type=click.IntRange(min=1), help="Rows of the grid."),
        click.option("--grid-cols", type=click.IntRange(min=1), help="Columns of the grid."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def run_options(f):
    options = [
        click.option("--eta", type=click.FloatRange(0, min_open=True), help="Stepsize."),
        click.option("--beta", type=click.FloatRange(0, min_open=True), help="Penalty parameter."),
        click.option("--max-iters", type=click.IntRange(min=0), help="Iteration limit."),
        click.option(
            "--tol",
            type=click.FloatRange(0, min_open=True),
            help="Tolerance on all three metrics.",
        ),
        click.option(
            "--rho",
            type=click.FloatRange(0, min_open=True),
            help="Tracking weight of the merit function.",
        ),
        click.option("--init-seed", type=int, help="Seed of the initial point."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def configure_logging(verbose):
    """Send package logs to stderr, at DEBUG when ``verbose``."""
    package_logger = logging.getLogger("cdadt")
    package_logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    for handler in list(package_logger.handlers):
        if getattr(handler, "_cdadt_cli", False):
            package_logger.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    handler._cdadt_cli = True
    package_logger.addHandler(handler)


@contextmanager
def usage_errors():
    """Report invalid experiment parameters as usage errors (exit code 1)."""
    try:
        yield
    except MatrixFileError as e:
        raise IOFailure(str(e))
    except CdadtException as e:
        raise UsageFailure(str(e))


@contextmanager
def runtime_errors():
    """Map failures during a run to exit codes 2 (runtime) and 3 (I/O)."""
    try:
        yield
    except DivergenceError as e:
        raise RuntimeFailure(f"run diverged at iteration {e.iteration}: {e}")
    except (MatrixFileError, LogFormatError) as e:
        raise IOFailure(str(e))
    except OSError as e:
        raise IOFailure(str(e))
    except CdadtException as e:
        raise RuntimeFailure(str(e))


def execute_instance(instance, out_dir):
    """Run an instance and write ``manifest.json``, ``log.csv``, ``summary.json`` and ``states/``.

    A diverged run still writes its manifest, the partial log and a
    summary before `~cdadt.engine.DivergenceError` propagates.
    """
    os.makedirs(out_dir, exist_ok=True)
    instance.manifest.write(os.path.join(out_dir, "manifest.json"))
    try:
        result = run(instance.problem, instance.mixing, instance.X_init, instance.config)
    except DivergenceError as e:
        if e.logs:
            write_log_csv(e.logs, os.path.join(out_dir, "log.csv"))
        _write_diverged_summary(e, os.path.join(out_dir, "summary.json"), instance)
        raise

    write_log_csv(result.logs, os.path.join(out_dir, "log.csv"))
    write_states(result, os.path.join(out_dir, "states"))
    write_summary(
        result,
        os.path.join(out_dir, "summary.json"),
        status="converged" if result.converged else "max_iters",
        epsilon_stationarity=epsilon_stationarity(result.mean_X(), instance.problem),
        **{"lambda": instance.mixing.lam},
    )
    return result


def _write_diverged_summary(error, path, instance):
    summary = {
        "status": "diverged",
        "iterations": error.iteration,
        "rounds": 3 * error.iteration,
        "converged": False,
        "lambda": instance.mixing.lam,
    }
    with open(path, "w") as f:
        json.dump(summary, f, indent=2)
