import logging
import os

import click

from ..numerics import configure_tolerances
from ..utils import CdadtCommand, read_config
from ._options import (
    EPILOG,
    common_options,
    configure_logging,
    execute_instance,
    problem_options,
    run_options,
    runtime_errors,
    topology_options,
    usage_errors,
)
from .manifest import ExperimentManifest, build_instance, manifest_from_options

logger = logging.getLogger(__name__)


@click.command(cls=CdadtCommand, epilog=EPILOG)
@click.option(
    "--manifest",
    "manifest_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Rerun the experiment described by a manifest.json. Other problem, "
    "topology and run options are ignored.",
)
@problem_options
@topology_options
@run_options
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False),
    required=True,
    help="Output directory for log.csv, manifest.json, summary.json and states/.",
)
@common_options
@click.version_option()
def run_cli(
    manifest_path,
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
    """Run the decentralized double-tracking method on one CCA instance.

    Writes the per-iteration metrics to ``log.csv`` and everything needed
    to reproduce the run to ``manifest.json``. Exits with code 2 if the
    iterates diverge.
    """
    configure_logging(verbose)
    logger.debug(
        f"run(manifest={manifest_path}, n={n}, m={m}, q={q}, p={p}, d={d}, "
        f"topology={topology}, eta={eta}, beta={beta}, max_iters={max_iters}, out={out})"
    )
    cfg = read_config(config)
    configure_tolerances(cfg)

    with usage_errors():
        if manifest_path is not None:
            manifest = ExperimentManifest.read(manifest_path)
        else:
            manifest = manifest_from_options(
                cfg,
                dict(
                    n=n, m=m, q=q, p=p, d=d, xi_a=xi_a, xi_b=xi_b, seed=seed,
                    correlations=correlations, data_a=data_a, data_b=data_b, ridge=ridge,
                ),
                dict(topology=topology, p_edge=p_edge, grid_rows=grid_rows, grid_cols=grid_cols),
                dict(eta=eta, beta=beta, max_iters=max_iters, tol=tol, rho=rho, init_seed=init_seed),
            )
        instance = build_instance(manifest)

    with runtime_errors():
        result = execute_instance(instance, out)

    final = result.final
    click.echo(
        f"{'converged' if result.converged else 'stopped'} after {result.iterations} "
        f"iteration(s): stat_viol={final.stat_viol:.3e} "
        f"consensus_err={final.consensus_err:.3e} feas_viol={final.feas_viol:.3e} "
        f"objective={final.objective:.10g}"
    )
    logger.info(f"results written to {os.path.abspath(out)}")


run = run_cli.callback
