# isort: skip_file

import logging

logger = logging.getLogger(__name__)

from .problem_exception import (
    ProblemException,
    PartitionError,
    ProblemBuildError,
    MatrixFileError,
    EmptyMatrixFileError,
    RaggedRowError,
    UnparseableCellError,
    NonFiniteEntryError,
)
from .cca import (
    LocalComponent,
    CcaComponent,
    FunctionComponent,
    Problem,
    CcaData,
    uniform_partition,
    default_regularizer,
    build_cca,
)
from .synthetic import synth_factor, synth_correlated, planted_optimum
from .matrix_io import load_matrix_csv, save_matrix_csv

__all__ = [
    "ProblemException",
    "PartitionError",
    "ProblemBuildError",
    "MatrixFileError",
    "EmptyMatrixFileError",
    "RaggedRowError",
    "UnparseableCellError",
    "NonFiniteEntryError",
    "LocalComponent",
    "CcaComponent",
    "FunctionComponent",
    "Problem",
    "CcaData",
    "uniform_partition",
    "default_regularizer",
    "build_cca",
    "synth_factor",
    "synth_correlated",
    "planted_optimum",
    "load_matrix_csv",
    "save_matrix_csv",
]
