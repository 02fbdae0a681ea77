"""
Random matrix samplers driven by explicit numpy Generator streams.
"""
import numpy as np

from linalg.core import adjoint
from linalg.expm import expm_skew_hermitian
from utils.errors import RankOutOfRange


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """
    Independent stream for one campaign trial.

    The stream depends only on (seed, trial), so any split of the trials across
    workers draws the same matrices.

    Args:
        seed: Campaign root seed
        trial: 0-based trial index

    Returns:
        np.random.Generator: The trial's generator
    """
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(trial,)))


def sample_ginibre(n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Matrix with i.i.d. standard complex Gaussian entries.

    Real and imaginary parts are independent N(0, 1/2), so E|t_ij|^2 = 1.

    Args:
        n: Dimension
        rng: Random stream

    Returns:
        np.ndarray: The n x n sample
    """
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) * np.sqrt(0.5)


def sample_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Unitary exp(S) of the skew-Hermitian part S = (G - G*)/2 of a Ginibre matrix G.

    The induced distribution is not Haar.

    Args:
        n: Dimension
        rng: Random stream

    Returns:
        np.ndarray: The n x n unitary sample
    """
    g = sample_ginibre(n, rng)
    return expm_skew_hermitian(0.5 * (g - adjoint(g)))


def sample_partial_isometry(n: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    """
    Partial isometry U P with U from ``sample_unitary`` and P the projection onto the first ``rank`` coordinates.

    Args:
        n: Dimension
        rank: Rank k, 0 <= k <= n
        rng: Random stream

    Returns:
        np.ndarray: The n x n sample

    Raises:
        RankOutOfRange: If k is outside 0..n
    """
    if not 0 <= rank <= n:
        raise RankOutOfRange(f"Rank {rank} outside 0..{n}")
    unitary = sample_unitary(n, rng)
    projection = np.zeros(n)
    projection[:rank] = 1.0
    return unitary * projection[None, :]
