"""
JSON-friendly encodings of complex matrices and scalars.

Floats are written with Python's shortest round-trip repr, which reproduces
every double bit for bit when read back.
"""
from typing import Any, Dict, Optional

import numpy as np

from utils.errors import NonSquareMatrix, ParseError


def matrix_to_dict(matrix: np.ndarray) -> Dict[str, Any]:
    """
    Encode a square complex matrix.

    Args:
        matrix: The matrix

    Returns:
        Dict[str, Any]: ``{"n": int, "re": [[...]], "im": [[...]]}``
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    return {
        "n": int(matrix.shape[0]),
        "re": [[float(x) for x in row] for row in matrix.real],
        "im": [[float(x) for x in row] for row in matrix.imag]
    }


def matrix_from_dict(data: Any) -> np.ndarray:
    """
    Decode a square complex matrix.

    The ``im`` member may be omitted for real matrices.

    Args:
        data: The decoded JSON object

    Returns:
        np.ndarray: The complex128 matrix

    Raises:
        ParseError: If members are missing or not numeric
        NonSquareMatrix: If the arrays are not n x n
    """
    if not isinstance(data, dict) or "re" not in data:
        raise ParseError("Matrix object needs at least an 're' member")
    try:
        real = np.array(data["re"], dtype=np.float64)
        imag = np.array(data["im"], dtype=np.float64) if "im" in data else np.zeros_like(real)
    except (TypeError, ValueError) as e:
        raise ParseError(f"Matrix entries must be numeric: {e}")

    if real.ndim != 2 or real.shape[0] != real.shape[1] or real.shape[0] == 0:
        raise NonSquareMatrix(f"'re' must be a non-empty square array, got shape {real.shape}")
    if imag.shape != real.shape:
        raise NonSquareMatrix(f"'im' shape {imag.shape} does not match 're' shape {real.shape}")
    if "n" in data and data["n"] != real.shape[0]:
        raise NonSquareMatrix(f"Declared n = {data['n']} but arrays are {real.shape[0]} x {real.shape[0]}")
    if not (np.all(np.isfinite(real)) and np.all(np.isfinite(imag))):
        raise ParseError("Matrix entries must be finite")
    return real + 1j * imag


def optional_matrix_to_dict(matrix: Optional[np.ndarray]) -> Optional[Dict[str, Any]]:
    """Encode a matrix or pass None through."""
    return None if matrix is None else matrix_to_dict(matrix)


def optional_matrix_from_dict(data: Any) -> Optional[np.ndarray]:
    """Decode a matrix or pass None through."""
    return None if data is None else matrix_from_dict(data)


def complex_to_dict(value: Optional[complex]) -> Optional[Dict[str, float]]:
    """Encode a complex scalar as ``{"re": x, "im": y}``."""
    if value is None:
        return None
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def complex_from_dict(data: Any) -> Optional[complex]:
    """Decode a complex scalar written by ``complex_to_dict``."""
    if data is None:
        return None
    return complex(float(data["re"]), float(data.get("im", 0.0)))
