"""Eigendecomposition of the Laplacian and the derived frequency matrices.

The Laplacian of a non-divergent network has a real, semi-positive
spectrum with at least one zero eigenvalue per connected component. From
the diagonalization L = P diag(lambda) P^{-1} we derive

    Omega = diag(omega_mu),  omega_mu = sqrt(lambda_mu)
    Mho   = diag(0 on zero modes, 1/omega_mu elsewhere)

and the unique semi-positive square root sqrt(L) = P Omega P^{-1}.
Eigenvalues are sorted ascending; any eigenvalue within `zero_tol` of 0
is classified as a zero mode (clamped to exactly 0), so disconnected
graphs with multiple zero modes are handled uniformly.

Eigenvector bases inside degenerate eigenspaces are solver-dependent.
Everything downstream consumes only products of the form P f(diag) P^{-1},
which are basis-independent; tests must compare those products, never raw
eigenvector columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .graph import GraphMatrices

__all__ = ["SpectralDecomposition", "decompose", "sqrt_laplacian"]

# Reconstruction quality demanded of the eigendecomposition, relative to
# max(1, ||L||_max).
_RECONSTRUCTION_TOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigensystem of one Laplacian plus the frequency matrices built from it.

    `eigenvectors` holds eigenvectors as columns (P); `eigenvectors_inv`
    is its inverse (P^T for symmetric input). `omegas[mu]` is
    sqrt(lambdas[mu]); `mho[mu]` is 1/omegas[mu] except on zero-classified
    modes where it is exactly 0.
    """

    eigenvectors: np.ndarray
    eigenvectors_inv: np.ndarray
    lambdas: np.ndarray
    omegas: np.ndarray
    mho: np.ndarray
    zero_tol: float

    @property
    def n(self) -> int:
        return self.lambdas.size

    @property
    def zero_modes(self) -> np.ndarray:
        """Boolean mask of zero-classified modes (True where omega is 0)."""
        return self.omegas == 0.0

    def mode_function(self, diag: np.ndarray) -> np.ndarray:
        """Return P diag(values) P^{-1} for per-mode diagonal values."""
        return self.eigenvectors @ (diag[:, None] * self.eigenvectors_inv)


def decompose(m: GraphMatrices, zero_tol: float | None = None) -> SpectralDecomposition:
    """Diagonalize the Laplacian of `m` and classify its zero modes.

    Symmetric Laplacians (undirected graphs) go through the symmetric
    eigensolver, giving an orthonormal P with P^{-1} = P^T. Other
    diagonalizable inputs are handled best-effort; a spectrum with
    imaginary parts beyond tolerance, a negative eigenvalue beyond
    tolerance, or a failed reconstruction raises NumericalError, since
    the oscillation model is only defined for real semi-positive spectra.

    `zero_tol` defaults to 1e-9 * max(1, lambda_max) so zero-mode
    classification scales with the weight magnitude.
    """
    L = m.laplacian
    symmetric = np.array_equal(L, L.T)
    if symmetric:
        lambdas, P = np.linalg.eigh(L)
        P_inv = P.T
    else:
        values, vectors = np.linalg.eig(L)
        scale = max(1.0, float(np.max(np.abs(values))))
        if np.max(np.abs(values.imag)) > 1e-9 * scale:
            raise NumericalError(
                "Laplacian spectrum is not real (max imaginary part "
                f"{np.max(np.abs(values.imag)):.3e}); the model requires a "
                "real, diagonalizable spectrum"
            )
        order = np.argsort(values.real, kind="stable")
        lambdas = values.real[order]
        P = vectors.real[:, order]
        try:
            P_inv = np.linalg.inv(P)
        except np.linalg.LinAlgError as exc:
            raise NumericalError(f"eigenvector matrix is singular: {exc}") from exc

    lambda_max = float(lambdas[-1]) if lambdas.size else 0.0
    if zero_tol is None:
        zero_tol = 1e-9 * max(1.0, lambda_max)
    if float(lambdas[0]) < -zero_tol:
        raise NumericalError(
            f"Laplacian has eigenvalue {lambdas[0]:.3e} below -zero_tol; "
            "spectrum is not semi-positive"
        )
    if abs(float(lambdas[0])) > zero_tol:
        raise NumericalError(
            f"smallest eigenvalue {lambdas[0]:.3e} not classified as the "
            "guaranteed zero mode; increase zero_tol"
        )

    reconstruction = P @ (lambdas[:, None] * P_inv)
    limit = _RECONSTRUCTION_TOL * max(1.0, float(np.max(np.abs(L))))
    if np.max(np.abs(reconstruction - L)) > limit:
        raise NumericalError("eigendecomposition does not reconstruct the Laplacian")

    zero = np.abs(lambdas) <= zero_tol
    lambdas = np.where(zero, 0.0, np.clip(lambdas, 0.0, None))
    omegas = np.sqrt(lambdas)
    mho = np.zeros_like(omegas)
    mho[~zero] = 1.0 / omegas[~zero]
    return SpectralDecomposition(
        eigenvectors=P,
        eigenvectors_inv=P_inv,
        lambdas=lambdas,
        omegas=omegas,
        mho=mho,
        zero_tol=float(zero_tol),
    )


def sqrt_laplacian(d: SpectralDecomposition) -> np.ndarray:
    """The semi-positive square root P Omega P^{-1}; its square is L."""
    return d.mode_function(d.omegas)
