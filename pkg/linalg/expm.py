"""
Matrix exponential of skew-Hermitian matrices.
"""
import logging

import numpy as np

from linalg.core import adjoint, as_complex_matrix, frobenius_norm
from linalg.jacobi import hermitian_eigen
from utils.errors import NotSkewHermitian

logger = logging.getLogger("UECSM.Expm")


def expm_skew_hermitian(matrix: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """
    Compute exp(S) for a skew-Hermitian S.

    -iS is Hermitian with eigen system (lambda, V), so exp(S) = V diag(exp(i lambda)) V*.

    Args:
        matrix: The skew-Hermitian matrix S
        tol: Relative defect ||S + S*||_F accepted on input

    Returns:
        np.ndarray: The unitary exp(S)

    Raises:
        NotSkewHermitian: If ||S + S*||_F > tol * max(1, ||S||_F)
    """
    s = as_complex_matrix(matrix)
    defect = frobenius_norm(s + adjoint(s))
    if defect > tol * max(1.0, frobenius_norm(s)):
        error_msg = f"Matrix is not skew-Hermitian: ||S + S*||_F = {defect:.3e}"
        logger.error(error_msg)
        raise NotSkewHermitian(error_msg)

    h = -1j * s
    eig = hermitian_eigen(0.5 * (h + adjoint(h)))
    return (eig.vectors * np.exp(1j * eig.values)) @ adjoint(eig.vectors)
