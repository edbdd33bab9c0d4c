import logging
import os

import click

from ..problem import save_matrix_csv
from ..utils import CdadtCommand, read_config
from ._options import EPILOG, common_options, configure_logging, data_options, usage_errors
from .manifest import ExperimentManifest, make_views, problem_spec

logger = logging.getLogger(__name__)


@click.command(cls=CdadtCommand, epilog=EPILOG)
@data_options
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False),
    required=True,
    help="Directory receiving A.csv, B.csv and manifest.json.",
)
@common_options
@click.version_option()
def gen_data_cli(n, m, q, xi_a, xi_b, seed, correlations, out, config, verbose):
    """Generate a synthetic two-view dataset.

    By default the views are random factors whose singular values decay
    as powers of ``--xi-a`` and ``--xi-b``. With ``--correlations`` the
    views are whitened and carry the given canonical correlations. The
    manifest written next to the data records the generator parameters.
    """
    configure_logging(verbose)
    logger.debug(
        f"gen_data(n={n}, m={m}, q={q}, xi_a={xi_a}, xi_b={xi_b}, seed={seed}, "
        f"correlations={correlations}, out={out})"
    )
    cfg = read_config(config)

    with usage_errors():
        spec = problem_spec(
            cfg, n=n, m=m, q=q, xi_a=xi_a, xi_b=xi_b, seed=seed, correlations=correlations
        )
        A, B = make_views(spec)
        os.makedirs(out, exist_ok=True)
        save_matrix_csv(os.path.join(out, "A.csv"), A)
        save_matrix_csv(os.path.join(out, "B.csv"), B)
        spec["data_a"] = os.path.abspath(os.path.join(out, "A.csv"))
        spec["data_b"] = os.path.abspath(os.path.join(out, "B.csv"))
        ExperimentManifest(problem=spec).write(os.path.join(out, "manifest.json"))

    logger.info(f"wrote {A.shape[0]}x{A.shape[1]} and {B.shape[0]}x{B.shape[1]} views to {out}")


gen_data = gen_data_cli.callback
