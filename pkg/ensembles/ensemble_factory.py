"""
Ensemble factory for the UECSM random lab.
"""
import logging
from typing import Union

from ensembles.base_ensemble import BaseEnsemble
from ensembles.ginibre_ensemble import GinibreEnsemble
from ensembles.partial_isometry_ensemble import PartialIsometryEnsemble
from ensembles.unitary_ensemble import UnitaryEnsemble
from models.campaign import EnsembleType


class EnsembleFactory:
    """
    Factory for creating ensemble instances.
    """

    @staticmethod
    def create_ensemble(ensemble: Union[str, EnsembleType], n: int, rank: int = 0) -> BaseEnsemble:
        """
        Create an ensemble instance.

        Args:
            ensemble: The ensemble name or type
            n: Matrix dimension
            rank: Rank for the partial-isometry ensemble (ignored otherwise)

        Returns:
            BaseEnsemble: The ensemble instance

        Raises:
            ValueError: If the ensemble is not supported
        """
        logger = logging.getLogger("UECSM.EnsembleFactory")

        name = ensemble.value if isinstance(ensemble, EnsembleType) else str(ensemble).lower()
        if name == EnsembleType.PARTIAL_ISOMETRY.value:
            logger.debug(f"Creating rank-{rank} partial-isometry ensemble, n={n}")
            return PartialIsometryEnsemble(n, rank)
        elif name == EnsembleType.GINIBRE.value:
            logger.debug(f"Creating Ginibre ensemble, n={n}")
            return GinibreEnsemble(n)
        elif name == EnsembleType.UNITARY.value:
            logger.debug(f"Creating unitary ensemble, n={n}")
            return UnitaryEnsemble(n)
        else:
            error_msg = f"Unsupported ensemble: {ensemble}"
            logger.error(error_msg)
            raise ValueError(error_msg)
