"""
Cartesian decomposition data model for the UECSM toolkit.
"""
import numpy as np


class CartesianPair:
    """
    The Hermitian parts of T = A + iB.

    A and B are stored exactly Hermitian; the source T is kept alongside.
    """

    def __init__(self, source: np.ndarray, real_part: np.ndarray, imag_part: np.ndarray):
        """
        Initialize the pair.

        Args:
            source: The decomposed matrix T
            real_part: A = (T + T*) / 2
            imag_part: B = (T - T*) / (2i)
        """
        for array in (source, real_part, imag_part):
            array.setflags(write=False)
        self.T = source
        self.A = real_part
        self.B = imag_part

    @property
    def n(self) -> int:
        """Dimension of the pair."""
        return int(self.T.shape[0])

    def reconstruct(self) -> np.ndarray:
        """Return A + iB."""
        return self.A + 1j * self.B

    def __str__(self) -> str:
        """String representation of the pair."""
        return f"CartesianPair(n={self.n})"

    def __repr__(self) -> str:
        """Representation of the pair."""
        return self.__str__()
