"""Dense complex linear algebra for small Hermitian problems.

Everything here operates on plain square numpy arrays promoted to complex
dtype.  The matrices in this package are tiny (dimension <= ~20), so the
routines favour clarity and strict validation over performance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

# Matrices whose hermiticity defect reaches this are rejected outright.
HERMITICITY_TOL = 1e-8


class DimensionError(ValueError):
    """Operands have incompatible or non-square shapes."""


class NotHermitianError(ValueError):
    """Matrix deviates from A = A^dagger beyond tolerance."""


def as_square_matrix(a) -> np.ndarray:
    """Coerce to a square complex ndarray or raise DimensionError."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermiticity_defect(a) -> float:
    """Largest absolute entry of A - A^dagger."""
    m = as_square_matrix(a)
    if m.size == 0:
        return 0.0
    return float(np.abs(m - m.conj().T).max())


def require_hermitian(a, tol: float = HERMITICITY_TOL) -> np.ndarray:
    m = as_square_matrix(a)
    defect = hermiticity_defect(m)
    if defect >= tol:
        raise NotHermitianError(
            f"hermiticity defect {defect:.3e} is not below {tol:.1e}"
        )
    return m


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in ascending order with matching orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Sum of lambda_i |v_i><v_i| over the whole spectrum."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def hermitian_eigendecompose(a) -> SpectralDecomposition:
    """Full eigendecomposition of a Hermitian matrix.

    Eigenvalues come back real and ascending; eigenvectors are the columns
    of a unitary matrix.  The basis chosen inside a degenerate eigenspace is
    arbitrary (only the projector onto the eigenspace is well defined).

    Raises DimensionError for non-square input and NotHermitianError when
    the hermiticity defect is 1e-8 or worse.
    """
    m = require_hermitian(a)
    w, v = np.linalg.eigh(m)
    return SpectralDecomposition(eigenvalues=w, eigenvectors=v)


def kron(a, b) -> np.ndarray:
    """Kronecker product of two square matrices: (A x B)[ij,kl] = A[ik] B[jl].

    Row/column index of the product is i*dim(B)+j, i.e. the first factor is
    the slow index.
    """
    ma = as_square_matrix(a)
    mb = as_square_matrix(b)
    return np.kron(ma, mb)


def hermitian_function(a, f: Callable[[float], float]) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix via its spectrum.

    Returns sum_i f(lambda_i) |v_i><v_i|.  With f = exp this is the matrix
    exponential restricted to Hermitian input.
    """
    spec = hermitian_eigendecompose(a)
    fw = np.array([float(f(float(lam))) for lam in spec.eigenvalues])
    v = spec.eigenvectors
    return (v * fw) @ v.conj().T


def hs_norm_distance(a, b) -> float:
    """Hilbert-Schmidt distance sqrt(Tr[(A-B)^2]) between Hermitian matrices.

    For a Hermitian difference D the trace of D^2 equals the squared
    Frobenius norm, which is what gets computed (it cannot go negative).
    """
    ma = require_hermitian(a)
    mb = require_hermitian(b)
    if ma.shape != mb.shape:
        raise DimensionError(
            f"operands must share a dimension, got {ma.shape} and {mb.shape}"
        )
    return float(np.linalg.norm(ma - mb))
