"""Command-line front end.

    netosc run --config experiment.json [--solver fermion] [--out path.csv]
               [--shift-ref 0]
    netosc verify [--path-nodes 8 | --edge-list graph.txt] [--seed 0]

`run` executes one experiment config (flags override config keys) and
writes the trajectory file. `verify` runs the algebraic identity suite on
a given graph and prints one PASS/FAIL line per check.

Exit codes: 0 success, 1 validation error, 2 numerical error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import SPINOR, build_hamiltonian, hamiltonian_power
from .dynamics import (
    boson_state,
    hat_solution,
    make_dual_state,
    oracle_propagate,
    wave_residual,
)
from .errors import NumericalError, ValidationError
from .experiment import emit, parse_config, run_experiment
from .graph import Graph, build_matrices, load_edge_list, path_graph
from .spectral import decompose, sqrt_laplacian


class _Parser(argparse.ArgumentParser):
    # route usage mistakes through the validation exit code
    def error(self, message):
        raise ValidationError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="netosc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"netosc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one experiment config")
    run_p.add_argument("--config", required=True, help="JSON config file")
    run_p.add_argument("--solver", choices=("boson", "fermion", "oracle"))
    run_p.add_argument("--out", help="output file path (overrides config)")
    run_p.add_argument("--shift-ref", type=int, help="reference node for frame shift")

    verify_p = sub.add_parser("verify", help="check the algebraic identities on a graph")
    verify_p.add_argument("--path-nodes", type=int, default=None)
    verify_p.add_argument("--path-weight", type=float, default=1.0)
    verify_p.add_argument("--edge-list", default=None)
    verify_p.add_argument("--directed", action="store_true")
    verify_p.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_run(args) -> int:
    config_path = Path(args.config)
    try:
        document = config_path.read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read config {config_path}: {exc}") from exc
    cfg = parse_config(document)
    overrides = {}
    if args.solver is not None:
        overrides["solver"] = args.solver
    if args.out is not None:
        overrides["output_path"] = args.out
    if args.shift_ref is not None:
        overrides["shift_ref"] = args.shift_ref
    if overrides:
        cfg = dataclasses.replace(cfg, **overrides)
    base_dir = config_path.parent
    traj = run_experiment(cfg, base_dir=base_dir)
    out = emit(traj, cfg, base_dir=Path.cwd())
    print(f"wrote {len(traj.samples)} samples x {traj.samples[0].displacement.size} "
          f"nodes ({cfg.solver}) to {out}")
    return 0


def _verify_graph(args) -> Graph:
    if args.edge_list is not None and args.path_nodes is not None:
        raise ValidationError("give only one of --edge-list and --path-nodes")
    if args.edge_list is not None:
        try:
            text = Path(args.edge_list).read_text()
        except OSError as exc:
            raise ValidationError(f"cannot read edge list {args.edge_list}: {exc}") from exc
        return load_edge_list(text, directed=args.directed)
    return path_graph(args.path_nodes or 8, args.path_weight)


def identity_checks(g: Graph, seed: int = 0) -> list[tuple[str, bool, str]]:
    """Evaluate the model's defining identities on one graph.

    Returns (name, passed, detail) triples; every detail is a max-norm
    error or a short description of what was compared.
    """
    results: list[tuple[str, bool, str]] = []

    def check(name: str, error: float, tol: float) -> None:
        results.append((name, error <= tol, f"max error {error:.3e} (tol {tol:.1e})"))

    anti = np.max(np.abs(SPINOR.a_hat @ SPINOR.b_hat + SPINOR.b_hat @ SPINOR.a_hat - SPINOR.e_hat))
    nil = max(
        np.max(np.abs(SPINOR.a_hat @ SPINOR.a_hat)),
        np.max(np.abs(SPINOR.b_hat @ SPINOR.b_hat)),
    )
    check("anticommutation {a,b}=e", float(anti), 0.0)
    check("nilpotency a^2=b^2=0", float(nil), 0.0)

    m = build_matrices(g)
    scale = max(1.0, float(np.max(np.abs(m.laplacian))))
    check(
        "laplacian row sums",
        float(np.max(np.abs(m.laplacian.sum(axis=1)))),
        1e-12 * scale,
    )
    pattern_match = np.array_equal(
        m.semi_normalized != 0.0, m.laplacian != 0.0
    )
    results.append(
        ("semi-normalized link pattern", bool(pattern_match), "pattern equality")
    )

    h = build_hamiltonian(m)
    check(
        "hamiltonian forms agree",
        float(np.max(np.abs(h.diagonal_form - h.nilpotent_form))),
        1e-12 * max(1.0, float(np.max(np.abs(h.matrix)))),
    )

    d = decompose(m)
    root = sqrt_laplacian(d)
    scale_l = max(1.0, float(np.max(np.abs(m.laplacian))))
    check("sqrt(L)^2 = L", float(np.max(np.abs(root @ root - m.laplacian))), 1e-10 * scale_l)
    check(
        "P P^-1 = I",
        float(np.max(np.abs(d.eigenvectors @ d.eigenvectors_inv - np.eye(g.n)))),
        1e-10,
    )
    gate = d.mho * d.omegas
    gate_err = float(np.max(np.abs(np.where(d.zero_modes, gate, gate - 1.0))))
    check("mho gates zero modes", gate_err, 1e-12)

    power_err = 0.0
    naive = np.eye(2 * g.n)
    for exponent in range(0, 8):
        if exponent % 2 == 0:
            closed = hamiltonian_power(m, d, exponent // 2, "even")
        else:
            closed = hamiltonian_power(m, d, exponent // 2, "odd")
        denom = max(1.0, float(np.max(np.abs(naive))))
        power_err = max(power_err, float(np.max(np.abs(closed - naive))) / denom)
        naive = naive @ h.matrix
    check("closed-form powers k<=3", power_err, 1e-10)

    rng = np.random.default_rng(seed)
    state = make_dual_state(rng.normal(size=g.n), rng.normal(size=g.n))
    t_probe = 1.0
    closed_hat = hat_solution(d, m, state, t_probe)
    oracle_hat = oracle_propagate(h, state, t_probe)
    denom = max(1.0, float(np.max(np.abs(oracle_hat))))
    check(
        "closed form vs propagator (t=1)",
        float(np.max(np.abs(closed_hat - oracle_hat))) / denom,
        1e-8,
    )

    def boson_at(t: float):
        return boson_state(d, state, t)

    res_coarse = wave_residual(boson_at, m, t=1.0, dt=1e-2)
    res_fine = wave_residual(boson_at, m, t=1.0, dt=5e-3)
    ratio_ok = res_fine == 0.0 or res_coarse / max(res_fine, 1e-300) >= 3.5
    results.append(
        (
            "wave residual O(dt^2)",
            bool(ratio_ok),
            f"residuals {res_coarse:.3e} -> {res_fine:.3e}",
        )
    )
    return results


def _cmd_verify(args) -> int:
    g = _verify_graph(args)
    results = identity_checks(g, seed=args.seed)
    width = max(len(name) for name, _, _ in results)
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        if not ok:
            failed += 1
        print(f"{status}  {name:<{width}}  {detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed on "
          f"{'directed' if g.directed else 'undirected'} graph with n={g.n}")
    if failed:
        raise NumericalError(f"{failed} identity check(s) failed")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_verify(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
