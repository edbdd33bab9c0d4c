import csv
import logging
import math
import os

import numpy as np

from ..numerics import NumericsException, as_mat
from .problem_exception import (
    EmptyMatrixFileError,
    MatrixFileError,
    NonFiniteEntryError,
    RaggedRowError,
    UnparseableCellError,
)

logger = logging.getLogger(__name__)


def load_matrix_csv(path):
    """Read a dense real matrix from a comma-separated text file.

    One matrix row per line, no header. Cells are trimmed of surrounding
    whitespace and lines that are entirely empty are skipped.

    Raises
    ------
    `~cdadt.problem.EmptyMatrixFileError`
    `~cdadt.problem.RaggedRowError`
        Rows differ in length.
    `~cdadt.problem.UnparseableCellError`
        A cell is not a number.
    `~cdadt.problem.NonFiniteEntryError`
        A cell is NaN or infinite.
    `~cdadt.problem.MatrixFileError`
        The file cannot be opened.
    """
    try:
        with open(path, newline="") as f:
            raw_rows = list(csv.reader(f))
    except OSError as e:
        raise MatrixFileError(f"cannot read matrix file '{path}': {e}")

    rows = []
    width = None
    for line_no, raw in enumerate(raw_rows, start=1):
        if len(raw) == 0 or (len(raw) == 1 and raw[0].strip() == ""):
            continue
        if width is None:
            width = len(raw)
        elif len(raw) != width:
            raise RaggedRowError(
                f"{path}:{line_no}: expected {width} cells, found {len(raw)}"
            )
        row = []
        for col_no, cell in enumerate(raw, start=1):
            try:
                value = float(cell.strip())
            except ValueError:
                raise UnparseableCellError(
                    f"{path}:{line_no}:{col_no}: cannot parse '{cell}' as a number"
                )
            if not math.isfinite(value):
                raise NonFiniteEntryError(
                    f"{path}:{line_no}:{col_no}: non-finite value '{cell.strip()}'"
                )
            row.append(value)
        rows.append(row)

    if len(rows) == 0:
        raise EmptyMatrixFileError(f"matrix file '{path}' contains no rows")

    logger.debug(f"load_matrix_csv: read {len(rows)}x{width} from {path}")
    return np.array(rows, dtype=np.float64)


def save_matrix_csv(path, A):
    """Write ``A`` with 17 significant digits, so reading it back is exact."""
    try:
        A = as_mat(A, "A")
    except NumericsException as e:
        raise MatrixFileError(f"cannot save '{path}': {e}")
    directory = os.path.dirname(os.path.abspath(path))
    try:
        os.makedirs(directory, exist_ok=True)
        np.savetxt(path, A, delimiter=",", fmt="%.17g")
    except OSError as e:
        raise MatrixFileError(f"cannot write matrix file '{path}': {e}")
    logger.debug(f"save_matrix_csv: wrote {A.shape[0]}x{A.shape[1]} to {path}")
