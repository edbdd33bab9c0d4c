import copy
import logging
import os

import click
import numpy as np
import tqdm
from astropy.table import Table

from ..engine import DivergenceError
from ..numerics import configure_tolerances
from ..utils import CdadtCommand, UsageFailure, read_config
from ..utils._config import _get_list
from ._options import (
    EPILOG,
    _float_list,
    common_options,
    configure_logging,
    execute_instance,
    problem_options,
    run_options,
    runtime_errors,
    topology_options,
    usage_errors,
)
from .manifest import build_instance, manifest_from_options

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = (
    "status",
    "iterations",
    "rounds",
    "stat_viol",
    "consensus_err",
    "feas_viol",
    "objective",
)


def summary_row(status, result=None, iteration=None):
    """Summary values of one run of a sweep. Diverged runs carry NaN metrics."""
    if result is None:
        return dict(
            status=status,
            iterations=iteration,
            rounds=3 * iteration,
            stat_viol=np.nan,
            consensus_err=np.nan,
            feas_viol=np.nan,
            objective=np.nan,
        )
    final = result.final
    return dict(
        status=status,
        iterations=result.iterations,
        rounds=result.rounds_of_communication,
        stat_viol=final.stat_viol,
        consensus_err=final.consensus_err,
        feas_viol=final.feas_viol,
        objective=final.objective,
    )


def run_variant(manifest, out_dir):
    """Build and run one sweep variant. Divergence is recorded, not raised."""
    with usage_errors():
        instance = build_instance(manifest)
    with runtime_errors():
        try:
            result = execute_instance(instance, out_dir)
        except DivergenceError as e:
            logger.warning(f"{out_dir}: diverged at iteration {e.iteration}")
            return instance, summary_row("diverged", iteration=e.iteration)
    status = "converged" if result.converged else "max_iters"
    return instance, summary_row(status, result)


@click.command(cls=CdadtCommand, epilog=EPILOG)
@click.option(
    "--betas",
    callback=_float_list,
    help="Comma-separated penalty parameters [default from config: 0.01,0.1,1,10,100].",
)
@problem_options
@topology_options
@run_options
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False),
    required=True,
    help="Output directory; each beta gets a beta_<value> subdirectory.",
)
@common_options
@click.version_option()
def sweep_beta_cli(
    betas,
    p,
    d,
    data_a,
    data_b,
    ridge,
    n,
    m,
    q,
    xi_a,
    xi_b,
    seed,
    correlations,
    topology,
    p_edge,
    grid_rows,
    grid_cols,
    eta,
    beta,
    max_iters,
    tol,
    rho,
    init_seed,
    out,
    config,
    verbose,
):
    """Run one instance for several penalty parameters.

    Everything but beta is shared. Writes one run directory per beta and
    a combined summary.csv; a diverged beta is recorded in the summary
    without stopping the sweep. ``--beta`` is ignored.
    """
    configure_logging(verbose)
    cfg = read_config(config)
    configure_tolerances(cfg)
    if not betas:
        betas = _get_list(cfg, "sweep", "betas")
    if any(b <= 0 for b in betas):
        raise UsageFailure("--betas: all betas must be positive")
    logger.debug(f"sweep_beta(betas={betas}, out={out})")

    with usage_errors():
        base = manifest_from_options(
            cfg,
            dict(
                n=n, m=m, q=q, p=p, d=d, xi_a=xi_a, xi_b=xi_b, seed=seed,
                correlations=correlations, data_a=data_a, data_b=data_b, ridge=ridge,
            ),
            dict(topology=topology, p_edge=p_edge, grid_rows=grid_rows, grid_cols=grid_cols),
            dict(eta=eta, max_iters=max_iters, tol=tol, rho=rho, init_seed=init_seed),
        )

    rows = []
    for b in tqdm.tqdm(betas, desc="beta", disable=not verbose):
        manifest = copy.deepcopy(base)
        manifest.run["beta"] = b
        _, row = run_variant(manifest, os.path.join(out, f"beta_{b:g}"))
        rows.append(dict(beta=b, **row))

    table = Table(rows=rows, names=("beta",) + SUMMARY_COLUMNS)
    with runtime_errors():
        table.write(os.path.join(out, "summary.csv"), format="ascii.csv", overwrite=True)
    click.echo(table)


sweep_beta = sweep_beta_cli.callback
