"""
Base ensemble for the UECSM random lab.
"""
import logging
from abc import ABC, abstractmethod

import numpy as np

from models.campaign import EnsembleType


class BaseEnsemble(ABC):
    """
    Base class for all random matrix ensembles.
    """

    ensemble_type: EnsembleType

    def __init__(self, n: int):
        """
        Initialize the ensemble.

        Args:
            n: Matrix dimension
        """
        self.n = n
        self.logger = logging.getLogger(f"UECSM.Ensemble.{self.__class__.__name__}")

    @abstractmethod
    def sample(self, rng: np.random.Generator) -> np.ndarray:
        """
        Draw one matrix.

        Args:
            rng: Random stream

        Returns:
            np.ndarray: The n x n sample
        """
        pass

    def __str__(self) -> str:
        """String representation of the ensemble."""
        return f"{self.ensemble_type.value}(n={self.n})"

    def __repr__(self) -> str:
        """Representation of the ensemble."""
        return self.__str__()
