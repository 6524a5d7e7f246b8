"""Oscillation model of online-user dynamics on weighted graphs.

User state evolves by the wave equation d^2 x/dt^2 = -L x on the graph
Laplacian. Two first-order reformulations generate its general solution:
the boson-type equation on sqrt(L) (dense, ignores the link structure)
and the fermion-type equation on a doubled state space whose generator
keeps the original sparsity pattern. This package builds the matrix
family, evaluates the closed-form solutions of both, cross-checks them
against a brute-force matrix-exponential propagator, and reproduces the
single-node impulse experiment on a 40-node chain.

Node indices are 0-based everywhere.
"""

from .algebra import SPINOR, Hamiltonian, SpinorBasis, build_hamiltonian, hamiltonian_power, kron
from .dynamics import (
    DualState,
    StateSample,
    Trajectory,
    boson_state,
    fermion_components,
    fermion_state,
    galilean_shift,
    hat_solution,
    hat_vector,
    make_dual_state,
    oracle_propagate,
    oracle_state,
    wave_residual,
)
from .errors import NumericalError, ValidationError
from .experiment import ExperimentConfig, emit, parse_config, run_experiment
from .graph import Graph, GraphMatrices, build_matrices, load_edge_list, path_graph
from .spectral import SpectralDecomposition, decompose, sqrt_laplacian

__version__ = "0.1.0"

__all__ = [
    "SPINOR",
    "DualState",
    "ExperimentConfig",
    "Graph",
    "GraphMatrices",
    "Hamiltonian",
    "NumericalError",
    "SpectralDecomposition",
    "SpinorBasis",
    "StateSample",
    "Trajectory",
    "ValidationError",
    "boson_state",
    "build_hamiltonian",
    "build_matrices",
    "decompose",
    "emit",
    "fermion_components",
    "fermion_state",
    "galilean_shift",
    "hamiltonian_power",
    "hat_solution",
    "hat_vector",
    "kron",
    "load_edge_list",
    "make_dual_state",
    "oracle_propagate",
    "oracle_state",
    "parse_config",
    "path_graph",
    "run_experiment",
    "sqrt_laplacian",
    "wave_residual",
]
