"""
Eigen system data model for the UECSM toolkit.
"""
from typing import Any, Dict, List

import numpy as np


class EigenSystem:
    """
    Real eigenvalues and orthonormal eigenvector columns of a Hermitian matrix.

    Arrays are stored read-only; derive a new system instead of editing one.
    """

    def __init__(self, values: Any, vectors: Any):
        """
        Initialize an eigen system.

        Args:
            values: The n real eigenvalues (ascending when produced by the solver)
            vectors: The n x n matrix whose columns are the eigenvectors
        """
        values = np.array(values, dtype=np.float64).reshape(-1)
        vectors = np.array(vectors, dtype=np.complex128)
        if vectors.shape != (values.shape[0], values.shape[0]):
            raise ValueError(
                f"Eigenvector matrix shape {vectors.shape} does not match {values.shape[0]} eigenvalues"
            )
        values.setflags(write=False)
        vectors.setflags(write=False)
        self.values = values
        self.vectors = vectors

    @property
    def n(self) -> int:
        """Dimension of the underlying space."""
        return int(self.values.shape[0])

    def vector(self, index: int) -> np.ndarray:
        """Return a copy of eigenvector ``index``."""
        return self.vectors[:, index].copy()

    def min_gap(self) -> float:
        """Smallest distance between consecutive eigenvalues (inf when n = 1)."""
        if self.n < 2:
            return float("inf")
        return float(np.min(np.diff(np.sort(self.values))))

    def clusters(self, gap: float) -> List[List[int]]:
        """
        Group indices of eigenvalues that lie within ``gap`` of a neighbour.

        Args:
            gap: Absolute distance below which consecutive eigenvalues count as equal

        Returns:
            List[List[int]]: Index groups in ascending eigenvalue order
        """
        order = np.argsort(self.values, kind="stable")
        groups: List[List[int]] = []
        for index in order:
            index = int(index)
            if groups and self.values[index] - self.values[groups[-1][-1]] <= gap:
                groups[-1].append(index)
            else:
                groups.append([index])
        return groups

    def reconstruct(self) -> np.ndarray:
        """Return V diag(values) V*."""
        return (self.vectors * self.values) @ np.conj(self.vectors).T

    def residual(self, matrix: np.ndarray) -> float:
        """Return ||HV - V diag(values)||_F for the source matrix H."""
        return float(np.linalg.norm(matrix @ self.vectors - self.vectors * self.values))

    def orthonormality_defect(self) -> float:
        """Return ||V*V - I||_F."""
        return float(np.linalg.norm(np.conj(self.vectors).T @ self.vectors - np.eye(self.n)))

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the eigen system to a dictionary.

        Returns:
            Dict[str, Any]: Values plus real and imaginary parts of the vectors
        """
        return {
            "values": self.values.tolist(),
            "vectors_re": self.vectors.real.tolist(),
            "vectors_im": self.vectors.imag.tolist()
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EigenSystem':
        """Create an eigen system from a dictionary."""
        vectors = np.array(data["vectors_re"]) + 1j * np.array(data["vectors_im"])
        return cls(values=data["values"], vectors=vectors)

    def __str__(self) -> str:
        """String representation of the eigen system."""
        values = ", ".join(f"{value:.6g}" for value in self.values)
        return f"EigenSystem(n={self.n}, values=[{values}])"

    def __repr__(self) -> str:
        """Representation of the eigen system."""
        return self.__str__()
