import configparser

import pytest

from cdadt.numerics import (
    NumericsException,
    configure_tolerances,
    override_tolerances,
    tolerances,
)


@pytest.fixture()
def restore_tolerances():
    saved = tolerances.SYMMETRY_TOL, tolerances.SPD_REL_TOL
    yield
    tolerances.SYMMETRY_TOL, tolerances.SPD_REL_TOL = saved


def test_configure(restore_tolerances):
    config = configparser.ConfigParser()
    config.read_dict({"numerics": {"symmetry_tol": "1e-9"}})
    spd = tolerances.SPD_REL_TOL
    configure_tolerances(config)
    assert tolerances.SYMMETRY_TOL == 1e-9
    assert tolerances.SPD_REL_TOL == spd


def test_missing_section(restore_tolerances):
    saved = tolerances.SYMMETRY_TOL, tolerances.SPD_REL_TOL
    configure_tolerances(configparser.ConfigParser())
    assert (tolerances.SYMMETRY_TOL, tolerances.SPD_REL_TOL) == saved


def test_override_restores():
    saved = tolerances.SYMMETRY_TOL, tolerances.SPD_REL_TOL
    with override_tolerances(symmetry_tol=1e-6):
        assert tolerances.SYMMETRY_TOL == 1e-6
        assert tolerances.SPD_REL_TOL == saved[1]
    assert (tolerances.SYMMETRY_TOL, tolerances.SPD_REL_TOL) == saved

    with pytest.raises(RuntimeError):
        with override_tolerances(spd_rel_tol=1e-3):
            raise RuntimeError("inside")
    assert (tolerances.SYMMETRY_TOL, tolerances.SPD_REL_TOL) == saved


def test_override_rejects_garbage():
    with pytest.raises(NumericsException):
        with override_tolerances(symmetry_tol="tight"):
            pass
