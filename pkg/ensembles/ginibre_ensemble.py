"""
Ginibre ensemble: i.i.d. complex Gaussian entries.
"""
import numpy as np

from ensembles.base_ensemble import BaseEnsemble
from ensembles.samplers import sample_ginibre
from models.campaign import EnsembleType


class GinibreEnsemble(BaseEnsemble):
    """Draws square matrices with standard complex Gaussian entries."""

    ensemble_type = EnsembleType.GINIBRE

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return sample_ginibre(self.n, rng)
