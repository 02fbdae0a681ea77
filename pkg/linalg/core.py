"""
Dense complex matrix helpers shared by the eigensolver and the decision pipeline.

Matrices are plain ``numpy`` complex128 arrays. The inner product is linear in
the first argument: ``<x, y> = sum_k x_k * conj(y_k)``.
"""
import logging
from typing import Any

import numpy as np

from models.eigensystem import EigenSystem
from utils.errors import DimensionMismatch, NonFiniteEntries, NonSquareMatrix

logger = logging.getLogger("UECSM.Linalg")


def as_complex_matrix(data: Any) -> np.ndarray:
    """
    Convert array-like data into a square complex128 matrix.

    Args:
        data: Nested lists, a numpy array or a scalar (treated as 1x1)

    Returns:
        np.ndarray: A fresh complex128 array of shape (n, n)

    Raises:
        NonSquareMatrix: If the data is not a square two-dimensional array
        NonFiniteEntries: If any entry is NaN or infinite
    """
    matrix = np.array(data, dtype=np.complex128)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise NonSquareMatrix(f"Expected a non-empty square matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteEntries("Matrix has NaN or infinite entries")
    return matrix


def adjoint(matrix: np.ndarray) -> np.ndarray:
    """Return the conjugate transpose."""
    return np.conj(matrix).T


def inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Inner product, linear in x and conjugate-linear in y."""
    return complex(np.sum(x * np.conj(y)))


def frobenius_norm(matrix: np.ndarray) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(matrix))


def hermitian_defect(matrix: np.ndarray) -> float:
    """Return ||H - H*||_F."""
    return frobenius_norm(matrix - adjoint(matrix))


def unitarity_defect(matrix: np.ndarray) -> float:
    """Return ||U*U - I||_F."""
    n = matrix.shape[0]
    return frobenius_norm(adjoint(matrix) @ matrix - np.eye(n))


def is_unitary(matrix: np.ndarray, tol: float = 1e-10) -> bool:
    """Check ||U*U - I||_F <= tol * n."""
    return unitarity_defect(matrix) <= tol * matrix.shape[0]


def commutator_defect(matrix: np.ndarray) -> float:
    """
    Relative distance from normality.

    Args:
        matrix: The matrix T

    Returns:
        float: ||TT* - T*T||_F / ||T||_F^2, or 0.0 for the zero matrix
    """
    norm = frobenius_norm(matrix)
    if norm == 0.0:
        return 0.0
    star = adjoint(matrix)
    return frobenius_norm(matrix @ star - star @ matrix) / norm ** 2


def overlap_matrix(first: EigenSystem, second: EigenSystem) -> np.ndarray:
    """
    Compute M[i][j] = <g_i, h_j> between two eigenbases.

    Args:
        first: Eigen system supplying the rows (g_i)
        second: Eigen system supplying the columns (h_j)

    Returns:
        np.ndarray: The overlap matrix, unitary when both bases are orthonormal

    Raises:
        DimensionMismatch: If the systems have different dimensions
    """
    if first.n != second.n:
        raise DimensionMismatch(f"Overlap of {first.n}-dimensional and {second.n}-dimensional systems")
    return first.vectors.T @ np.conj(second.vectors)


def unitary_completion(vector: np.ndarray) -> np.ndarray:
    """
    Build a unitary matrix whose first column is the given unit vector.

    Args:
        vector: A vector of norm one (it is normalized again here)

    Returns:
        np.ndarray: Unitary W with W[:, 0] == vector / ||vector||

    Raises:
        NonFiniteEntries: If the vector is zero or not finite
    """
    v = np.asarray(vector, dtype=np.complex128).reshape(-1)
    norm = float(np.linalg.norm(v))
    if norm == 0.0 or not np.isfinite(norm):
        raise NonFiniteEntries("Cannot complete a zero or non-finite vector")
    v = v / norm
    n = v.shape[0]

    # Householder QR keeps Q unitary even when [v | I] is rank deficient
    q, r = np.linalg.qr(np.column_stack([v, np.eye(n, dtype=np.complex128)]))
    q = q[:, :n].copy()
    # Q[:, 0] equals v up to the unimodular factor r[0, 0]
    q[:, 0] = v
    return q


def direct_sum(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Block-diagonal matrix first (+) second."""
    n1, n2 = first.shape[0], second.shape[0]
    result = np.zeros((n1 + n2, n1 + n2), dtype=np.complex128)
    result[:n1, :n1] = first
    result[n1:, n1:] = second
    return result
