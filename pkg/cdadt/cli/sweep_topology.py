import copy
import logging
import os

import click
import tqdm
from astropy.table import Table

from ..engine import iterations_to_threshold, read_log_csv
from ..numerics import configure_tolerances
from ..utils import CdadtCommand, UsageFailure, read_config
from ..utils._config import _get_list
from ._options import (
    EPILOG,
    _float_list,
    _name_list,
    common_options,
    configure_logging,
    problem_options,
    run_options,
    runtime_errors,
    usage_errors,
)
from .manifest import manifest_from_options, topology_spec
from .sweep_beta import SUMMARY_COLUMNS, run_variant

logger = logging.getLogger(__name__)

TOPOLOGIES = ("er", "grid", "ring")


@click.command(cls=CdadtCommand, epilog=EPILOG)
@click.option(
    "--topologies",
    callback=_name_list,
    help="Comma-separated topologies among er, grid, ring [default all three].",
)
@click.option(
    "--p-edge",
    type=click.FloatRange(0, 1, min_open=True),
    help="Edge probability of the Erdos-Renyi graph.",
)
@click.option("--grid-rows", type=click.IntRange(min=1), help="Rows of the grid.")
@click.option("--grid-cols", type=click.IntRange(min=1), help="Columns of the grid.")
@click.option(
    "--thresholds",
    callback=_float_list,
    help="Accuracies for the iterations-to-threshold columns [default from config].",
)
@problem_options
@run_options
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False),
    required=True,
    help="Output directory; each topology gets its own subdirectory.",
)
@common_options
@click.version_option()
def sweep_topology_cli(
    topologies,
    p_edge,
    grid_rows,
    grid_cols,
    thresholds,
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
    """Run one instance over several communication graphs.

    Writes one run directory per topology and a summary.csv with the
    connectivity lambda of each graph and the rounds of communication
    needed to bring all three metrics below each threshold.
    """
    configure_logging(verbose)
    cfg = read_config(config)
    configure_tolerances(cfg)
    topologies = topologies or _get_list(cfg, "sweep", "topologies", type=str)
    unknown = [t for t in topologies if t not in TOPOLOGIES]
    if unknown:
        raise UsageFailure(f"--topologies: unknown topology {', '.join(unknown)}")
    thresholds = thresholds or _get_list(cfg, "sweep", "thresholds")
    logger.debug(f"sweep_topology(topologies={topologies}, thresholds={thresholds}, out={out})")

    with usage_errors():
        base = manifest_from_options(
            cfg,
            dict(
                n=n, m=m, q=q, p=p, d=d, xi_a=xi_a, xi_b=xi_b, seed=seed,
                correlations=correlations, data_a=data_a, data_b=data_b, ridge=ridge,
            ),
            dict(topology=topologies[0], p_edge=p_edge, grid_rows=grid_rows, grid_cols=grid_cols),
            dict(eta=eta, beta=beta, max_iters=max_iters, tol=tol, rho=rho, init_seed=init_seed),
        )

    rows = []
    for kind in tqdm.tqdm(topologies, desc="topology", disable=not verbose):
        manifest = copy.deepcopy(base)
        with usage_errors():
            manifest.topology = topology_spec(
                cfg,
                base.problem["d"],
                topology=kind,
                p_edge=p_edge,
                seed=seed,
                grid_rows=grid_rows,
                grid_cols=grid_cols,
            )
        run_dir = os.path.join(out, kind)
        instance, row = run_variant(manifest, run_dir)
        row = dict(topology=kind, **{"lambda": instance.mixing.lam}, **row)
        if row["status"] != "diverged":
            with runtime_errors():
                logs = read_log_csv(os.path.join(run_dir, "log.csv"))
            for threshold in thresholds:
                k = iterations_to_threshold(logs, threshold)
                row[f"rounds_to_{threshold:g}"] = -1 if k is None else 3 * k
        else:
            for threshold in thresholds:
                row[f"rounds_to_{threshold:g}"] = -1
        rows.append(row)

    names = ("topology", "lambda") + SUMMARY_COLUMNS + tuple(
        f"rounds_to_{t:g}" for t in thresholds
    )
    table = Table(rows=rows, names=names)
    with runtime_errors():
        table.write(os.path.join(out, "summary.csv"), format="ascii.csv", overwrite=True)
    click.echo(table)


sweep_topology = sweep_topology_cli.callback
