import json
import logging
import os
from dataclasses import dataclass, field

import numpy as np

from .. import __version__
from ..engine import RunConfig, initial_point
from ..network import Topology, erdos_renyi, grid, grid_shape, metropolis_weights, ring, single
from ..numerics import override_tolerances, tolerances
from ..problem import (
    CcaData,
    MatrixFileError,
    build_cca,
    default_regularizer,
    load_matrix_csv,
    synth_correlated,
    synth_factor,
    uniform_partition,
)
from ..utils import CdadtException

logger = logging.getLogger(__name__)


@dataclass
class ExperimentManifest:
    """Everything needed to rebuild and rerun one experiment.

    ``problem`` describes the data (generator parameters or CSV paths,
    partition and the ridge actually used), ``topology`` the graph
    including its edge list, ``run`` the run configuration and initial
    point seed, ``numerics`` the kernel tolerances. ``derived`` holds
    values computed from the rest (such as ``lambda``) for reporting.
    """

    problem: dict
    topology: dict = field(default_factory=dict)
    run: dict = field(default_factory=dict)
    numerics: dict = field(default_factory=dict)
    derived: dict = field(default_factory=dict)
    version: str = __version__

    def to_dict(self):
        return {
            "version": self.version,
            "problem": self.problem,
            "topology": self.topology,
            "run": self.run,
            "numerics": self.numerics,
            "derived": self.derived,
        }

    def write(self, path):
        try:
            with open(path, "w") as f:
                json.dump(self.to_dict(), f, indent=2)
        except OSError as e:
            raise MatrixFileError(f"cannot write manifest '{path}': {e}")

    @classmethod
    def from_dict(cls, data):
        if "problem" not in data:
            raise CdadtException("manifest has no 'problem' section")
        return cls(
            problem=dict(data["problem"]),
            topology=dict(data.get("topology", {})),
            run=dict(data.get("run", {})),
            numerics=dict(data.get("numerics", {})),
            derived=dict(data.get("derived", {})),
            version=data.get("version", "unknown"),
        )

    @classmethod
    def read(cls, path):
        try:
            with open(path) as f:
                data = json.load(f)
        except OSError as e:
            raise MatrixFileError(f"cannot read manifest '{path}': {e}")
        except json.JSONDecodeError as e:
            raise MatrixFileError(f"manifest '{path}' is not valid JSON: {e}")
        if data.get("version", __version__) != __version__:
            logger.warning(
                f"manifest {path} was written by cdadt {data.get('version')}, "
                f"running {__version__}"
            )
        return cls.from_dict(data)


@dataclass
class Instance:
    """A built experiment: problem, mixing matrix, initial point and run config."""

    problem: object
    mixing: object
    X_init: np.ndarray
    config: RunConfig
    manifest: ExperimentManifest


def _pick(value, config, section, option, type=float):
    if value is not None:
        return value
    getter = {float: config.getfloat, int: config.getint, str: config.get}[type]
    return getter(section, option)


def problem_spec(
    config,
    n=None,
    m=None,
    q=None,
    p=None,
    d=None,
    xi_a=None,
    xi_b=None,
    seed=None,
    correlations=None,
    data_a=None,
    data_b=None,
    ridge=None,
):
    """Problem section of a manifest from options, falling back to ``[problem]``."""
    spec = {
        "p": _pick(p, config, "problem", "p", int),
        "d": _pick(d, config, "problem", "d", int),
        "ridge": ridge,
        "ridge_factor": config.getfloat("problem", "ridge_factor", fallback=1e-8),
    }
    if (data_a is None) != (data_b is None):
        raise CdadtException("--data-a and --data-b must be given together")
    if data_a is not None:
        spec.update(
            source="csv",
            data_a=os.path.abspath(data_a),
            data_b=os.path.abspath(data_b),
        )
        return spec

    spec.update(
        n=_pick(n, config, "problem", "n", int),
        m=_pick(m, config, "problem", "m", int),
        q=_pick(q, config, "problem", "q", int),
        seed=_pick(seed, config, "problem", "seed", int),
    )
    if correlations:
        spec.update(source="planted", correlations=[float(c) for c in correlations])
    else:
        spec.update(
            source="synthetic",
            xi_a=_pick(xi_a, config, "problem", "xi_a"),
            xi_b=_pick(xi_b, config, "problem", "xi_b"),
        )
    return spec


def make_views(spec):
    """The two data views ``(A, B)`` described by a problem section."""
    source = spec.get("source")
    if source == "csv":
        return load_matrix_csv(spec["data_a"]), load_matrix_csv(spec["data_b"])
    if source == "planted":
        return synth_correlated(spec["n"], spec["m"], spec["q"], spec["correlations"], spec["seed"])
    if source == "synthetic":
        A = synth_factor(spec["n"], spec["q"], spec["xi_a"], spec["seed"])
        B = synth_factor(spec["m"], spec["q"], spec["xi_b"], spec["seed"] + 1)
        return A, B
    raise CdadtException(f"unknown problem source '{source}'")


def topology_spec(config, d, topology=None, p_edge=None, seed=None, grid_rows=None, grid_cols=None):
    """Build the topology for ``d`` agents and return its manifest section."""
    kind = _pick(topology, config, "network", "topology", str)
    if d == 1:
        topo = single()
    elif kind == "ring":
        topo = ring(d)
    elif kind == "grid":
        if grid_rows is None and grid_cols is None:
            rows, cols = grid_shape(d)
        else:
            rows = grid_rows if grid_rows is not None else d // grid_cols
            cols = grid_cols if grid_cols is not None else d // grid_rows
        if rows * cols != d:
            raise CdadtException(f"a {rows}x{cols} grid does not have d={d} agents")
        topo = grid(rows, cols)
    elif kind == "er":
        topo = erdos_renyi(
            d,
            _pick(p_edge, config, "network", "p_edge"),
            _pick(seed, config, "problem", "seed", int),
            max_retries=config.getint("network", "max_retries", fallback=1000),
        )
    else:
        raise CdadtException(f"unknown topology '{kind}'")
    return topo.to_dict()


def run_spec(config, init_seed=None, tol=None, **overrides):
    """Run section of a manifest: `RunConfig` fields plus the initial point seed."""
    if tol is not None:
        for name in ("tol_stationarity", "tol_consensus", "tol_feasibility"):
            overrides.setdefault(name, tol)
    run_config = RunConfig.from_config(config, **overrides)
    spec = run_config.to_dict()
    spec["init_seed"] = _pick(init_seed, config, "run", "init_seed", int)
    return spec


def numerics_spec():
    return {"symmetry_tol": tolerances.SYMMETRY_TOL, "spd_rel_tol": tolerances.SPD_REL_TOL}


def manifest_tolerances(manifest):
    """Context in which the kernels use the tolerances recorded in ``manifest.numerics``.

    Tolerances missing from the manifest keep their current values.
    """
    numerics = manifest.numerics or {}
    unknown = sorted(set(numerics) - {"symmetry_tol", "spd_rel_tol"})
    if unknown:
        raise CdadtException(f"unknown numerics setting(s) in manifest: {', '.join(unknown)}")
    return override_tolerances(**numerics)


def build_problem(manifest):
    """Rebuild the CCA problem of a manifest.

    The build uses the recorded kernel tolerances without changing the
    process-wide ones. Fills the effective ridge, partition, view sizes
    and tolerances into the manifest.
    """
    with manifest_tolerances(manifest):
        problem = _build_problem(manifest)
        manifest.numerics = numerics_spec()
    return problem


def _build_problem(manifest):
    spec = manifest.problem
    A, B = make_views(spec)
    q = A.shape[1]
    partition = spec.get("partition") or uniform_partition(q, spec["d"])
    data = CcaData(A, B, partition)

    regularizer = spec.get("regularizer")
    if regularizer is None:
        regularizer = spec.get("ridge")
    if regularizer is None:
        regularizer = default_regularizer(data, spec.get("ridge_factor", 1e-8))
    problem = build_cca(data, regularizer=regularizer, p=spec["p"])

    spec.update(
        n=A.shape[0],
        m=B.shape[0],
        q=q,
        partition=list(data.partition),
        regularizer=float(regularizer),
    )
    return problem


def build_instance(manifest):
    """Rebuild an experiment from its manifest.

    The returned manifest carries every effective value and ``derived``,
    so writing it and building again reproduces the run bit for bit.
    """
    problem = build_problem(manifest)

    topology = Topology.from_dict(manifest.topology)
    if topology.d != problem.d:
        raise CdadtException(
            f"topology has {topology.d} agents but the data is split over {problem.d}"
        )
    mixing = metropolis_weights(topology)

    run = dict(manifest.run)
    init_seed = run.pop("init_seed", 0)
    try:
        config = RunConfig(**run)
    except TypeError as e:
        raise CdadtException(f"invalid run section in manifest: {e}")
    with manifest_tolerances(manifest):
        X_init = initial_point(problem, init_seed)

    manifest.derived = {
        "lambda": mixing.lam,
        "n": problem.n,
        "p": problem.p,
        "d": problem.d,
        "sigma_min": problem.sigma_min,
    }
    logger.info(
        f"built {manifest.problem['source']} instance: n={problem.n}, p={problem.p}, "
        f"d={problem.d}, {topology.kind} topology with lambda={mixing.lam:.4f}"
    )
    return Instance(problem=problem, mixing=mixing, X_init=X_init, config=config, manifest=manifest)


def manifest_from_options(config, problem_kw, topology_kw, run_kw):
    """Manifest for a fresh experiment from command-line options and a config."""
    problem = problem_spec(config, **problem_kw)
    topology = topology_spec(
        config, problem["d"], seed=problem_kw.get("seed"), **topology_kw
    )
    return ExperimentManifest(
        problem=problem,
        topology=topology,
        run=run_spec(config, **run_kw),
        numerics=numerics_spec(),
    )
