import json
import os

import pytest
from click.testing import CliRunner

from cdadt.cli import cdadt_cli

PLANTED = [
    "--n", "3", "--m", "3", "--q", "60", "--d", "4", "--p", "2",
    "--correlations", "0.9,0.5", "--seed", "0", "--ridge", "0",
]


def _invoke(*args):
    return CliRunner().invoke(cdadt_cli, list(args))


def test_planted(tmp_path):
    output = tmp_path / "oracle.json"
    result = _invoke("oracle", *PLANTED, "--output", str(output))
    assert result.exit_code == 0, result.output
    assert "objective_star" in result.output
    with open(output) as f:
        solution = json.load(f)
    assert solution["objective_star"] == pytest.approx(-1.7, abs=1e-10)
    assert solution["top_eigvals"] == pytest.approx([1.9, 1.5], abs=1e-10)


def test_from_run_manifest(tmp_path):
    run_dir = tmp_path / "run"
    args = [*PLANTED, "--topology", "ring", "--max-iters", "0"]
    assert _invoke("run", *args, "-o", str(run_dir)).exit_code == 0
    output = tmp_path / "oracle.json"
    result = _invoke(
        "oracle", "--manifest", os.path.join(run_dir, "manifest.json"), "--output", str(output)
    )
    assert result.exit_code == 0, result.output
    with open(output) as f:
        assert json.load(f)["objective_star"] == pytest.approx(-1.7, abs=1e-10)


def test_p_too_large():
    result = _invoke("oracle", *PLANTED[:-2], "--p", "7", "--ridge", "0")
    assert result.exit_code == 1
