"""Experiment configuration, trajectory runs, and file output.

Configs are JSON objects with strict key checking: unknown keys are
rejected so a typo cannot silently change an experiment. The canonical
impulse experiment is

    {"path_nodes": 40, "impulses": [[20, 0.5]], "t_max": 10,
     "solver": "fermion"}

which kicks node 20 of a 40-node unit-weight chain at t = 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import dynamics
from .algebra import build_hamiltonian
from .dynamics import Trajectory, galilean_shift, make_dual_state
from .errors import ValidationError
from .graph import Graph, build_matrices, load_edge_list, path_graph
from .spectral import decompose

__all__ = ["ExperimentConfig", "parse_config", "run_experiment", "emit"]

SOLVERS = ("boson", "fermion", "oracle")
FORMATS = ("csv", "json")

_KNOWN_KEYS = {
    "path_nodes",
    "path_weight",
    "edge_list",
    "directed",
    "impulses",
    "displacements",
    "solver",
    "t_max",
    "dt_out",
    "shift_ref",
    "zero_tol",
    "output_path",
    "format",
}


@dataclass(frozen=True)
class ExperimentConfig:
    """One fully validated experiment description."""

    path_nodes: int | None = None
    path_weight: float = 1.0
    edge_list: str | None = None
    directed: bool = False
    impulses: tuple[tuple[int, float], ...] = ()
    displacements: tuple[tuple[int, float], ...] = ()
    solver: str = "fermion"
    t_max: float = 10.0
    dt_out: float = 0.1
    shift_ref: int | None = None
    zero_tol: float | None = None
    output_path: str = "trajectory.csv"
    format: str = "csv"

    def as_dict(self) -> dict:
        """Normalized key/value echo for output metadata."""
        return {
            "path_nodes": self.path_nodes,
            "path_weight": self.path_weight,
            "edge_list": self.edge_list,
            "directed": self.directed,
            "impulses": [list(pair) for pair in self.impulses],
            "displacements": [list(pair) for pair in self.displacements],
            "solver": self.solver,
            "t_max": self.t_max,
            "dt_out": self.dt_out,
            "shift_ref": self.shift_ref,
            "zero_tol": self.zero_tol,
            "output_path": self.output_path,
            "format": self.format,
        }


def _node_value_pairs(raw, key: str) -> tuple[tuple[int, float], ...]:
    if not isinstance(raw, list):
        raise ValidationError(f"{key} must be a list of [node, value] pairs")
    pairs: list[tuple[int, float]] = []
    seen: set[int] = set()
    for entry in raw:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValidationError(f"{key} entry {entry!r} is not a [node, value] pair")
        node, value = entry
        if not isinstance(node, int) or isinstance(node, bool) or node < 0:
            raise ValidationError(f"{key}: node index {node!r} must be a nonnegative int")
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValidationError(f"{key}: value {value!r} must be a real number")
        if not math.isfinite(float(value)):
            raise ValidationError(f"{key}: value for node {node} must be finite")
        if node in seen:
            raise ValidationError(f"{key}: duplicate node {node}")
        seen.add(node)
        pairs.append((node, float(value)))
    return tuple(pairs)


def parse_config(document: str) -> ExperimentConfig:
    """Parse and validate a JSON experiment config.

    Defaults: solver=fermion, format=csv, dt_out=0.1, t_max=10,
    output_path=trajectory.csv. Unknown keys are errors.
    """
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValidationError("config must be a JSON object")
    unknown = sorted(set(raw) - _KNOWN_KEYS)
    if unknown:
        raise ValidationError(f"unknown config key(s): {', '.join(unknown)}")

    if "path_nodes" not in raw and "edge_list" not in raw:
        raise ValidationError("graph_source required: set path_nodes or edge_list")
    if "path_nodes" in raw and "edge_list" in raw:
        raise ValidationError("set only one of path_nodes and edge_list")

    def as_number(key: str, default: float) -> float:
        value = raw.get(key, default)
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValidationError(f"{key} must be a number, got {value!r}")
        return float(value)

    zero_tol = raw.get("zero_tol")
    cfg = ExperimentConfig(
        path_nodes=raw.get("path_nodes"),
        path_weight=as_number("path_weight", 1.0),
        edge_list=raw.get("edge_list"),
        directed=bool(raw.get("directed", False)),
        impulses=_node_value_pairs(raw.get("impulses", []), "impulses"),
        displacements=_node_value_pairs(raw.get("displacements", []), "displacements"),
        solver=raw.get("solver", "fermion"),
        t_max=as_number("t_max", 10.0),
        dt_out=as_number("dt_out", 0.1),
        shift_ref=raw.get("shift_ref"),
        zero_tol=None if zero_tol is None else as_number("zero_tol", 0.0),
        output_path=str(raw.get("output_path", "trajectory.csv")),
        format=raw.get("format", "csv"),
    )
    validate_config(cfg)
    return cfg


def validate_config(cfg: ExperimentConfig) -> None:
    """Check every invariant that does not require reading the edge list."""
    if cfg.path_nodes is None and cfg.edge_list is None:
        raise ValidationError("graph_source required: set path_nodes or edge_list")
    if cfg.path_nodes is not None:
        if (
            not isinstance(cfg.path_nodes, int)
            or isinstance(cfg.path_nodes, bool)
            or cfg.path_nodes < 2
        ):
            raise ValidationError(f"path_nodes must be an int >= 2, got {cfg.path_nodes}")
        if not cfg.path_weight > 0:
            raise ValidationError(f"path_weight must be positive, got {cfg.path_weight}")
    if cfg.solver not in SOLVERS:
        raise ValidationError(f"solver must be one of {SOLVERS}, got {cfg.solver!r}")
    if cfg.format not in FORMATS:
        raise ValidationError(f"format must be one of {FORMATS}, got {cfg.format!r}")
    if not cfg.t_max > 0:
        raise ValidationError(f"t_max must be positive, got {cfg.t_max}")
    if not cfg.dt_out > 0:
        raise ValidationError(f"dt_out must be positive, got {cfg.dt_out}")
    if cfg.dt_out > cfg.t_max:
        raise ValidationError(
            f"dt_out ({cfg.dt_out}) must not exceed t_max ({cfg.t_max})"
        )
    if cfg.shift_ref is not None and (
        not isinstance(cfg.shift_ref, int)
        or isinstance(cfg.shift_ref, bool)
        or cfg.shift_ref < 0
    ):
        raise ValidationError(f"shift_ref must be a nonnegative int, got {cfg.shift_ref!r}")
    if cfg.zero_tol is not None and not float(cfg.zero_tol) >= 0:
        raise ValidationError(f"zero_tol must be nonnegative, got {cfg.zero_tol}")
    if cfg.path_nodes is not None:
        _check_node_range(cfg, cfg.path_nodes)


def _check_node_range(cfg: ExperimentConfig, n: int) -> None:
    for key, pairs in (("impulses", cfg.impulses), ("displacements", cfg.displacements)):
        for node, _ in pairs:
            if node >= n:
                raise ValidationError(f"{key}: node {node} out of range for n={n}")
    if cfg.shift_ref is not None and cfg.shift_ref >= n:
        raise ValidationError(f"shift_ref: node {cfg.shift_ref} out of range for n={n}")


def _load_graph(cfg: ExperimentConfig, base_dir: Path) -> Graph:
    if cfg.path_nodes is not None:
        return path_graph(cfg.path_nodes, cfg.path_weight)
    edge_path = Path(cfg.edge_list)
    if not edge_path.is_absolute():
        edge_path = base_dir / edge_path
    try:
        text = edge_path.read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read edge list {edge_path}: {exc}") from exc
    return load_edge_list(text, directed=cfg.directed)


def _time_grid(t_max: float, dt_out: float) -> np.ndarray:
    steps = int(math.floor(t_max / dt_out + 1e-9))
    times = np.arange(steps + 1, dtype=float) * dt_out
    if t_max - times[-1] > 1e-9 * dt_out:
        times = np.append(times, t_max)
    else:
        times[-1] = t_max
    return times


def run_experiment(cfg: ExperimentConfig, base_dir: Path | str = ".") -> Trajectory:
    """Run one solver over the config's time grid.

    Deterministic for a fixed config: the grid is endpoint-inclusive with
    the final sample clamped to t_max, and every sample is an independent
    closed-form evaluation.
    """
    validate_config(cfg)
    g = _load_graph(cfg, Path(base_dir))
    _check_node_range(cfg, g.n)
    m = build_matrices(g)
    d = decompose(m, zero_tol=cfg.zero_tol)
    a = np.zeros(g.n)
    b = np.zeros(g.n)
    for node, value in cfg.displacements:
        a[node] = value
    for node, value in cfg.impulses:
        b[node] = value
    state = make_dual_state(a, b)

    times = _time_grid(cfg.t_max, cfg.dt_out)
    if cfg.solver == "boson":
        samples = tuple(dynamics.boson_state(d, state, t) for t in times)
    elif cfg.solver == "fermion":
        samples = tuple(dynamics.fermion_state(d, m, state, t) for t in times)
    else:
        h = build_hamiltonian(m)
        samples = tuple(dynamics.oracle_state(h, state, t) for t in times)
    traj = Trajectory(
        solver=cfg.solver,
        times=times,
        samples=samples,
        graph_fingerprint=g.fingerprint(),
    )
    if cfg.shift_ref is not None:
        traj = galilean_shift(traj, cfg.shift_ref)
    return traj


def _fmt(value: float) -> str:
    # +0.0 folds negative zero so output bytes are stable across code paths
    return format(value + 0.0, ".12g")


def emit(traj: Trajectory, cfg: ExperimentConfig, base_dir: Path | str = ".") -> Path:
    """Write a trajectory to cfg.output_path as CSV or JSON.

    CSV has the header "t,node,displacement,velocity" and one row per
    (time, node) with 12-significant-digit values. JSON holds full-precision
    times/displacement/velocity arrays plus a metadata echo of the config.
    Output bytes are identical across runs of the same config.
    """
    if not traj.samples:
        raise ValidationError("trajectory has no samples to emit")
    out_path = Path(cfg.output_path)
    if not out_path.is_absolute():
        out_path = Path(base_dir) / out_path
    if cfg.format == "csv":
        lines = ["t,node,displacement,velocity"]
        for sample in traj.samples:
            for node in range(sample.displacement.size):
                lines.append(
                    f"{_fmt(sample.t)},{node},"
                    f"{_fmt(sample.displacement[node])},{_fmt(sample.velocity[node])}"
                )
        payload = "\n".join(lines) + "\n"
    else:
        document = {
            "times": [float(t) for t in traj.times],
            "displacement": [
                [float(x) for x in sample.displacement] for sample in traj.samples
            ],
            "velocity": [
                [float(v) for v in sample.velocity] for sample in traj.samples
            ],
            "meta": {
                "solver": traj.solver,
                "n": traj.samples[0].displacement.size,
                "graph_fingerprint": traj.graph_fingerprint,
                "config": cfg.as_dict(),
            },
        }
        payload = json.dumps(document, indent=None, separators=(",", ":")) + "\n"
    try:
        out_path.write_text(payload)
    except OSError as exc:
        raise ValidationError(f"cannot write output {out_path}: {exc}") from exc
    return out_path
