import os

from astropy.io import ascii
from click.testing import CliRunner

from cdadt.cli import cdadt_cli

SMALL = ["--n", "4", "--m", "4", "--q", "80", "--d", "4", "--p", "2", "--max-iters", "10"]


def _invoke(*args):
    return CliRunner().invoke(cdadt_cli, list(args))


def _sweep(out):
    result = _invoke("sweep-topology", *SMALL, "--topologies", "er,ring", "-o", str(out))
    assert result.exit_code == 0, result.output


def test_report(tmp_path):
    _sweep(tmp_path)
    result = _invoke("report", str(tmp_path), "--thresholds", "1e30")
    assert result.exit_code == 0, result.output

    report = ascii.read(str(tmp_path / "report.csv"), format="csv")
    assert len(report) == 2
    assert list(report["lambda"]) == sorted(report["lambda"])
    assert list(report["iterations"]) == [10, 10]
    assert list(report["iters_to_1e+30"]) == [0, 0]


def test_report_output(tmp_path):
    _sweep(tmp_path / "runs")
    output = tmp_path / "elsewhere.csv"
    result = _invoke("report", str(tmp_path / "runs"), "--output", str(output))
    assert result.exit_code == 0, result.output
    assert output.is_file()


def test_empty_directory(tmp_path):
    assert _invoke("report", str(tmp_path)).exit_code == 3


def test_missing_directory(tmp_path):
    assert _invoke("report", str(tmp_path / "absent")).exit_code == 3


def test_unreadable_log(tmp_path):
    _sweep(tmp_path)
    with open(os.path.join(tmp_path, "ring", "log.csv"), "w") as f:
        f.write("iter,objective\n0,1\n")
    result = _invoke("report", str(tmp_path))
    assert result.exit_code == 3
    assert "ring" in result.output
    assert len(ascii.read(str(tmp_path / "report.csv"), format="csv")) == 1
