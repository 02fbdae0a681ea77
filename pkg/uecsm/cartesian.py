"""
Cartesian decomposition T = A + iB.
"""
import numpy as np

from linalg.core import adjoint, as_complex_matrix
from models.cartesian_pair import CartesianPair


def cartesian_decompose(matrix: np.ndarray) -> CartesianPair:
    """
    Split T into its Hermitian real and imaginary parts.

    Args:
        matrix: The matrix T

    Returns:
        CartesianPair: A = (T + T*)/2 and B = (T - T*)/(2i), each exactly Hermitian
    """
    t = as_complex_matrix(matrix)
    t_star = adjoint(t)
    a = 0.5 * (t + t_star)
    b = (t - t_star) / 2j
    # Rounding can leave a last-bit asymmetry; average it away
    a = 0.5 * (a + adjoint(a))
    b = 0.5 * (b + adjoint(b))
    return CartesianPair(source=t, real_part=a, imag_part=b)
