"""
Proper-pair normalization data model for the UECSM toolkit.
"""
from typing import Sequence

import numpy as np


class ProperPair:
    """
    Reordering and unimodular rescaling of two eigenbases.

    The normalized bases are g'_i = row_phases[i] * g[row_perm[i]] and
    h'_j = col_phases[j] * h[col_perm[j]], so the overlap matrix becomes
    M'[i][j] = row_phases[i] * conj(col_phases[j]) * M[row_perm[i]][col_perm[j]].
    """

    def __init__(
        self,
        row_perm: Sequence[int],
        col_perm: Sequence[int],
        row_phases: Sequence[complex],
        col_phases: Sequence[complex]
    ):
        """
        Initialize the proper pair.

        Args:
            row_perm: Permutation of the row (A-side) basis, 0-based
            col_perm: Permutation of the column (B-side) basis, 0-based
            row_phases: Unimodular scalars applied to the permuted rows
            col_phases: Unimodular scalars applied to the permuted columns
        """
        n = len(row_perm)
        if sorted(row_perm) != list(range(n)) or sorted(col_perm) != list(range(n)):
            raise ValueError("row_perm and col_perm must be permutations of 0..n-1")
        if len(row_phases) != n or len(col_phases) != n:
            raise ValueError("One phase per basis vector is required")
        self.row_perm = tuple(int(i) for i in row_perm)
        self.col_perm = tuple(int(j) for j in col_perm)
        self.row_phases = tuple(complex(w) for w in row_phases)
        self.col_phases = tuple(complex(z) for z in col_phases)

    @property
    def n(self) -> int:
        """Dimension of the bases."""
        return len(self.row_perm)

    def apply(self, overlap: np.ndarray) -> np.ndarray:
        """
        Apply the reordering and phases to an overlap matrix.

        Args:
            overlap: The source overlap matrix M

        Returns:
            np.ndarray: The normalized matrix M'
        """
        permuted = overlap[np.ix_(self.row_perm, self.col_perm)]
        return (np.array(self.row_phases)[:, None] * permuted) * np.conj(np.array(self.col_phases))[None, :]

    def apply_rows(self, vectors: np.ndarray) -> np.ndarray:
        """Reorder and rephase the columns of an A-side eigenvector matrix."""
        return vectors[:, list(self.row_perm)] * np.array(self.row_phases)[None, :]

    def __str__(self) -> str:
        """String representation of the proper pair."""
        return f"ProperPair(rows={list(self.row_perm)}, cols={list(self.col_perm)})"

    def __repr__(self) -> str:
        """Representation of the proper pair."""
        return self.__str__()
