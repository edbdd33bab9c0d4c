# isort: skip_file

import logging

logger = logging.getLogger(__name__)

from .manifest import (
    ExperimentManifest,
    Instance,
    build_problem,
    build_instance,
    manifest_from_options,
    manifest_tolerances,
)
from .gen_data import gen_data
from .run import run
from .sweep_beta import sweep_beta
from .sweep_topology import sweep_topology
from .report import report
from .oracle import oracle
from .main import cdadt_cli

__all__ = [
    "ExperimentManifest",
    "Instance",
    "build_problem",
    "build_instance",
    "manifest_from_options",
    "manifest_tolerances",
    "gen_data",
    "run",
    "sweep_beta",
    "sweep_topology",
    "report",
    "oracle",
    "cdadt_cli",
]
