"""
Matrix document data model for the UECSM toolkit.
"""
from typing import Any, Dict

import numpy as np

from data.serialization import matrix_from_dict, matrix_to_dict
from utils.errors import NonFiniteEntries, NonSquareMatrix


class MatrixDocument:
    """
    A square matrix read from a file, stdin or the command line.
    """

    def __init__(self, entries: Any, source: str = "text"):
        """
        Initialize the document.

        Args:
            entries: The n x n complex entries
            source: Input format the entries came from ("text" or "json")

        Raises:
            NonSquareMatrix: If the entries are not a non-empty square array
            NonFiniteEntries: If an entry is NaN or infinite
        """
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] == 0:
            raise NonSquareMatrix(f"Expected a non-empty square matrix, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise NonFiniteEntries("Matrix has NaN or infinite entries")
        entries.setflags(write=False)
        self.entries = entries
        self.source = source

    @property
    def n(self) -> int:
        """Dimension of the matrix."""
        return int(self.entries.shape[0])

    def to_text(self) -> str:
        """
        Render the matrix in the semicolon-row text format.

        Every component is written with its shortest round-trip representation.
        """
        rows = []
        for row in self.entries:
            rows.append(" ".join(_format_complex(value) for value in row))
        return ";\n".join(rows)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the document to the JSON matrix schema."""
        return matrix_to_dict(self.entries)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MatrixDocument':
        """Create a document from the JSON matrix schema."""
        return cls(matrix_from_dict(data), source="json")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixDocument):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __str__(self) -> str:
        """String representation of the document."""
        return f"MatrixDocument(n={self.n}, source={self.source})"

    def __repr__(self) -> str:
        """Representation of the document."""
        return self.__str__()


def _format_complex(value: complex) -> str:
    real, imag = repr(float(value.real)), float(value.imag)
    if imag == 0.0:
        return real
    sign = "-" if imag < 0 else "+"
    return f"{real}{sign}{repr(abs(imag))}i"
