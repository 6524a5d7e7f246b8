"""The 2x2 nilpotent pair, Kronecker products, and the 2n x 2n Hamiltonian.

The fermion-type fundamental equation lives on a doubled state space
indexed (node, sign): component (i, s) sits at index 2i + s with s = 0
for the (+) half and s = 1 for the (-) half, matching
x_hat = x_plus (x) (1,0)^T + x_minus (x) (0,1)^T. That interleaving is
fixed here and used everywhere.

The algebraic engine is the nilpotent pair

    a_hat = 1/2 [[+1, +1], [-1, -1]]      a_hat^2 = 0
    b_hat = 1/2 [[+1, -1], [+1, -1]]      b_hat^2 = 0
    {a_hat, b_hat} = a_hat b_hat + b_hat a_hat = identity

whose entries are multiples of 1/2, so all identities hold exactly in
floating point. Expanding powers of the Hamiltonian

    H_hat = H (x) a_hat + sqrt(D) (x) b_hat
          = sqrt(D) (x) diag(+1, -1) - (sqrt(D)^{-1} A) (x) a_hat

closes on {a_hat, b_hat, a_hat b_hat, b_hat a_hat}, which yields the
even/odd power formulas implemented in `hamiltonian_power`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .graph import GraphMatrices
from .spectral import SpectralDecomposition

__all__ = [
    "SpinorBasis",
    "SPINOR",
    "Hamiltonian",
    "kron",
    "build_hamiltonian",
    "hamiltonian_power",
]

# Tolerance for the two Hamiltonian construction routes agreeing; they are
# algebraically identical, so any mismatch beyond rounding is a bug.
_FORM_AGREEMENT_TOL = 1e-12


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class SpinorBasis:
    """The 2x2 generators and their products, as read-only arrays."""

    a_hat: np.ndarray
    b_hat: np.ndarray
    e_hat: np.ndarray
    ab: np.ndarray
    ba: np.ndarray


SPINOR = SpinorBasis(
    a_hat=_frozen(0.5 * np.array([[1.0, 1.0], [-1.0, -1.0]])),
    b_hat=_frozen(0.5 * np.array([[1.0, -1.0], [1.0, -1.0]])),
    e_hat=_frozen(np.eye(2)),
    ab=_frozen(0.5 * np.array([[1.0, -1.0], [-1.0, 1.0]])),
    ba=_frozen(0.5 * np.array([[1.0, 1.0], [1.0, 1.0]])),
)


@dataclass(frozen=True)
class Hamiltonian:
    """Generator of the fermion-type equation, with both construction forms.

    `matrix` is the 2n x 2n operator. `diagonal_form` is the
    sqrt(D) (x) diag(+1,-1) construction and `nilpotent_form` the
    H (x) a_hat + sqrt(D) (x) b_hat one; they agree entrywise and are
    kept separately so structural tests can compare them.
    """

    n: int
    matrix: np.ndarray
    diagonal_form: np.ndarray
    nilpotent_form: np.ndarray


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the standard block layout.

    (a (x) b)[i*r + k, j*s + l] = a[i, j] * b[k, l] for b of shape (r, s).
    """
    return np.kron(np.asarray(a), np.asarray(b))


def build_hamiltonian(m: GraphMatrices) -> Hamiltonian:
    """Build the 2n x 2n Hamiltonian from a graph's matrix family.

    Both construction routes are evaluated and must agree to 1e-12; a
    mismatch means the matrix family is inconsistent and raises
    NumericalError.
    """
    diagonal_form = kron(m.sqrt_degree, np.diag([1.0, -1.0])) - kron(
        m.inv_sqrt_degree @ m.adjacency, SPINOR.a_hat
    )
    nilpotent_form = kron(m.semi_normalized, SPINOR.a_hat) + kron(
        m.sqrt_degree, SPINOR.b_hat
    )
    mismatch = float(np.max(np.abs(diagonal_form - nilpotent_form)))
    if mismatch > _FORM_AGREEMENT_TOL * max(1.0, float(np.max(np.abs(diagonal_form)))):
        raise NumericalError(
            f"Hamiltonian construction forms disagree by {mismatch:.3e}; "
            "this indicates an internal inconsistency"
        )
    return Hamiltonian(
        n=m.n,
        matrix=nilpotent_form,
        diagonal_form=diagonal_form,
        nilpotent_form=nilpotent_form,
    )


def hamiltonian_power(
    m: GraphMatrices,
    d: SpectralDecomposition,
    k: int,
    parity: str,
) -> np.ndarray:
    """Closed-form power of the Hamiltonian.

    parity="even" returns H_hat^(2k), parity="odd" returns H_hat^(2k+1):

        H_hat^(2k)   = sqrt(D)^{-1} L^k sqrt(D) (x) a_hat b_hat
                       + L^k (x) b_hat a_hat
        H_hat^(2k+1) = H L^k (x) a_hat + L^k sqrt(D) (x) b_hat

    with L^k evaluated spectrally as P diag(lambda^k) P^{-1}. Matches
    repeated multiplication of the dense Hamiltonian.
    """
    if k < 0:
        raise ValueError(f"power index must be nonnegative, got {k}")
    L_k = d.mode_function(d.lambdas**k)
    if parity == "even":
        return kron(m.inv_sqrt_degree @ L_k @ m.sqrt_degree, SPINOR.ab) + kron(
            L_k, SPINOR.ba
        )
    if parity == "odd":
        return kron(m.semi_normalized @ L_k, SPINOR.a_hat) + kron(
            L_k @ m.sqrt_degree, SPINOR.b_hat
        )
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
