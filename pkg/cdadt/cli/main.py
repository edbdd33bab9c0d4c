import click

from ..utils import CdadtGroup
from ._options import EPILOG
from .gen_data import gen_data_cli
from .oracle import oracle_cli
from .report import report_cli
from .run import run_cli
from .sweep_beta import sweep_beta_cli
from .sweep_topology import sweep_topology_cli


@click.group(cls=CdadtGroup, epilog=EPILOG)
@click.version_option()
def cdadt_cli():
    """Decentralized CCA experiments with constraint dissolving and double tracking.

    Exit codes: 0 success, 1 usage error, 2 runtime failure such as a
    diverged run, 3 file error.
    """
    pass


cdadt_cli.add_command(gen_data_cli, name="gen-data")
cdadt_cli.add_command(run_cli, name="run")
cdadt_cli.add_command(sweep_beta_cli, name="sweep-beta")
cdadt_cli.add_command(sweep_topology_cli, name="sweep-topology")
cdadt_cli.add_command(report_cli, name="report")
cdadt_cli.add_command(oracle_cli, name="oracle")
