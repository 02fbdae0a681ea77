"""
Unitary ensemble: exponentials of random skew-Hermitian matrices.
"""
import numpy as np

from ensembles.base_ensemble import BaseEnsemble
from ensembles.samplers import sample_unitary
from models.campaign import EnsembleType


class UnitaryEnsemble(BaseEnsemble):
    """Draws unitaries exp((G - G*)/2) for Ginibre G."""

    ensemble_type = EnsembleType.UNITARY

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return sample_unitary(self.n, rng)
