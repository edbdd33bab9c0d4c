import json
import logging

import click
import prettytable

from ..numerics import configure_tolerances
from ..oracle import solve_cca_centralized
from ..utils import CdadtCommand, IOFailure, read_config
from ._options import EPILOG, common_options, configure_logging, problem_options, usage_errors
from .manifest import ExperimentManifest, build_problem, manifest_tolerances, problem_spec

logger = logging.getLogger(__name__)


@click.command(cls=CdadtCommand, epilog=EPILOG)
@click.option(
    "--manifest",
    "manifest_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Solve the instance described by a manifest.json.",
)
@problem_options
@click.option(
    "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write the solution summary as JSON.",
)
@common_options
@click.version_option()
def oracle_cli(
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
    output,
    config,
    verbose,
):
    """Solve a CCA instance centrally and print its optimal value.

    The optimum comes from the top eigenvalues of
    M^(-1/2) Sigma M^(-1/2), which are printed with the objective.
    """
    configure_logging(verbose)
    logger.debug(f"oracle(manifest={manifest_path}, n={n}, m={m}, q={q}, p={p}, d={d})")
    cfg = read_config(config)
    configure_tolerances(cfg)

    with usage_errors():
        if manifest_path is not None:
            manifest = ExperimentManifest.read(manifest_path)
        else:
            manifest = ExperimentManifest(
                problem=problem_spec(
                    cfg, n=n, m=m, q=q, p=p, d=d, xi_a=xi_a, xi_b=xi_b, seed=seed,
                    correlations=correlations, data_a=data_a, data_b=data_b, ridge=ridge,
                )
            )
        with manifest_tolerances(manifest):
            problem = build_problem(manifest)
            solution = solve_cca_centralized(problem)

    table = prettytable.PrettyTable()
    table.set_style(prettytable.SINGLE_BORDER)
    table.field_names = ["j", "eigenvalue"]
    for j, value in enumerate(solution.top_eigvals, start=1):
        table.add_row([j, f"{value:.12g}"])
    click.echo(table)
    click.echo(f"objective_star = {solution.objective_star:.17g}")

    if output is not None:
        try:
            with open(output, "w") as f:
                json.dump(
                    {
                        "objective_star": solution.objective_star,
                        "top_eigvals": [float(v) for v in solution.top_eigvals],
                        "problem": manifest.problem,
                    },
                    f,
                    indent=2,
                )
        except OSError as e:
            raise IOFailure(f"cannot write '{output}': {e}")


oracle = oracle_cli.callback
