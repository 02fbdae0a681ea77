"""
Cyclic Jacobi eigensolver for Hermitian matrices.
"""
import logging
import math
from typing import Tuple

import numpy as np

from linalg.core import adjoint, as_complex_matrix, frobenius_norm, hermitian_defect
from models.eigensystem import EigenSystem
from utils.errors import NoConvergence, NotHermitian

# Sweep until the off-diagonal mass is at most CONVERGED * max(1, ||H||_F)
CONVERGED = 1e-14
# Leaving the sweep cap with more than FAILED * ||H||_F off-diagonal is an error
FAILED = 1e-8
MAX_SWEEPS = 30
# Entries this small (relative) are not worth a rotation
NEGLIGIBLE = 1e-18


class JacobiSolver:
    """
    Diagonalizes a Hermitian matrix by cyclic sweeps of complex Jacobi rotations.

    Each rotation first removes the phase of the pivot entry a_pq with a
    diagonal unitary, then applies the classical real rotation that zeroes it.
    """

    def __init__(self, max_sweeps: int = MAX_SWEEPS, converged: float = CONVERGED, failed: float = FAILED):
        """
        Initialize the solver.

        Args:
            max_sweeps: Sweep cap
            converged: Relative off-diagonal mass at which sweeping stops
            failed: Relative off-diagonal mass above which hitting the cap raises
        """
        self.max_sweeps = max_sweeps
        self.converged = converged
        self.failed = failed
        self.logger = logging.getLogger("UECSM.Jacobi")

    @staticmethod
    def _off_diagonal(matrix: np.ndarray) -> float:
        return frobenius_norm(matrix - np.diag(np.diag(matrix)))

    @staticmethod
    def _rotation(a_pp: float, a_qq: float, a_pq: complex) -> Tuple[float, float, complex]:
        """
        Rotation parameters that annihilate a_pq.

        Returns:
            Tuple[float, float, complex]: cosine, sine and the unimodular phase of a_pq
        """
        b = abs(a_pq)
        phase = a_pq / b
        theta = (a_qq - a_pp) / (2.0 * b)
        t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
        c = 1.0 / math.sqrt(t * t + 1.0)
        return c, t * c, phase

    def solve(self, matrix: np.ndarray, tol: float = 1e-10) -> EigenSystem:
        """
        Compute the eigen system of a Hermitian matrix.

        Args:
            matrix: The Hermitian matrix H
            tol: Relative Hermitian defect accepted on input

        Returns:
            EigenSystem: Ascending eigenvalues and phase-normalized eigenvectors

        Raises:
            NotHermitian: If ||H - H*||_F > tol * max(1, ||H||_F)
            NoConvergence: If the sweep cap is reached without convergence
        """
        h = as_complex_matrix(matrix)
        n = h.shape[0]
        norm = frobenius_norm(h)
        scale = max(1.0, norm)

        defect = hermitian_defect(h)
        if defect > tol * scale:
            error_msg = f"Matrix is not Hermitian: ||H - H*||_F = {defect:.3e}"
            self.logger.error(error_msg)
            raise NotHermitian(error_msg)

        a = 0.5 * (h + adjoint(h))
        v = np.eye(n, dtype=np.complex128)
        target = self.converged * scale
        skip = NEGLIGIBLE * scale

        off = self._off_diagonal(a)
        sweeps = 0
        while off > target and sweeps < self.max_sweeps:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    a_pq = a[p, q]
                    if abs(a_pq) <= skip:
                        continue
                    c, s, phase = self._rotation(a[p, p].real, a[q, q].real, a_pq)
                    g = np.eye(n, dtype=np.complex128)
                    g[p, p] = c
                    g[p, q] = s
                    g[q, p] = -s * np.conj(phase)
                    g[q, q] = c * np.conj(phase)
                    a = adjoint(g) @ a @ g
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    v = v @ g
            sweeps += 1
            off = self._off_diagonal(a)

        if off > target:
            if off > self.failed * norm:
                error_msg = f"Jacobi did not converge in {sweeps} sweeps (off-diagonal {off:.3e})"
                self.logger.error(error_msg)
                raise NoConvergence(error_msg)
            self.logger.warning(f"Jacobi stopped at sweep cap with off-diagonal mass {off:.3e}")

        values = np.real(np.diag(a))
        order = np.argsort(values, kind="stable")
        values = values[order]
        v = v[:, order]

        # Largest-modulus entry of each eigenvector becomes real positive
        for j in range(n):
            k = int(np.argmax(np.abs(v[:, j])))
            pivot = v[k, j]
            v[:, j] *= np.conj(pivot) / abs(pivot)
            v[k, j] = abs(pivot)

        self.logger.debug(f"Jacobi converged after {sweeps} sweeps, off-diagonal {off:.3e}")
        return EigenSystem(values=values, vectors=v)


_DEFAULT_SOLVER = JacobiSolver()


def hermitian_eigen(matrix: np.ndarray, tol: float = 1e-10) -> EigenSystem:
    """
    Eigen system of a Hermitian matrix via the cyclic Jacobi method.

    Args:
        matrix: The Hermitian matrix H
        tol: Relative Hermitian defect accepted on input

    Returns:
        EigenSystem: Ascending eigenvalues and orthonormal eigenvectors
    """
    return _DEFAULT_SOLVER.solve(matrix, tol)
