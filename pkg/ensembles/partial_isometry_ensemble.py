"""
Partial-isometry ensemble: U P for a random unitary U and a coordinate projection P.
"""
import numpy as np

from ensembles.base_ensemble import BaseEnsemble
from ensembles.samplers import sample_partial_isometry
from models.campaign import EnsembleType
from utils.errors import RankOutOfRange


class PartialIsometryEnsemble(BaseEnsemble):
    """
    Draws rank-k partial isometries.

    Every partial isometry of rank k is unitarily equivalent to some U P, so
    sampling U covers the whole class.
    """

    ensemble_type = EnsembleType.PARTIAL_ISOMETRY

    def __init__(self, n: int, rank: int):
        """
        Initialize the ensemble.

        Args:
            n: Matrix dimension
            rank: Rank k, 0 <= k <= n

        Raises:
            RankOutOfRange: If k is outside 0..n
        """
        if not 0 <= rank <= n:
            raise RankOutOfRange(f"Rank {rank} outside 0..{n}")
        super().__init__(n)
        self.rank = rank

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return sample_partial_isometry(self.n, self.rank, rng)

    def __str__(self) -> str:
        """String representation of the ensemble."""
        return f"{self.ensemble_type.value}(n={self.n}, rank={self.rank})"
