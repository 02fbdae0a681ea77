"""
Numerical tolerance policy for the UECSM toolkit.
"""
from typing import Any, Dict, Iterable, Tuple

from utils.errors import ConfigError


class Tolerances:
    """
    Thresholds that stand in for the exact comparisons of the decision procedure.

    All values are relative:
        eig_gap: repeated-eigenvalue detection, against max(1, ||A||_F)
        zero: zero-entry detection in the overlap matrix, against ||g_i|| ||h_j||
        real: largest accepted |Im q| / (1 + |q|) in the reality-ratio test
        parallel: shared eigenvector when |<g_i, h_j>| >= (1 - parallel) ||g_i|| ||h_j||
        normal: normality when ||TT* - T*T||_F <= normal * ||T||_F^2
        hermitian: accepted Hermitian defect on eigensolver input
        verify_unitary: unitarity, involution and kernel checks, times n
        verify_symmetric: symmetry and C-symmetry checks, times max(1, ||T||_F)
    """

    FIELDS = (
        "eig_gap", "zero", "real", "parallel", "normal",
        "hermitian", "verify_unitary", "verify_symmetric"
    )

    # A decision is borderline when its statistic is within this factor of the threshold
    BORDERLINE_FACTOR = 10.0

    def __init__(
        self,
        eig_gap: float = 1e-8,
        zero: float = 1e-10,
        real: float = 1e-8,
        parallel: float = 1e-10,
        normal: float = 1e-12,
        hermitian: float = 1e-10,
        verify_unitary: float = 1e-9,
        verify_symmetric: float = 1e-8
    ):
        """
        Initialize the tolerances.

        Args:
            eig_gap: Repeated-eigenvalue threshold
            zero: Zero-entry threshold
            real: Reality-ratio threshold
            parallel: Shared-eigenvector threshold
            normal: Normality threshold
            hermitian: Hermitian-input threshold
            verify_unitary: Certificate unitarity/involution threshold
            verify_symmetric: Certificate symmetry threshold
        """
        self.eig_gap = float(eig_gap)
        self.zero = float(zero)
        self.real = float(real)
        self.parallel = float(parallel)
        self.normal = float(normal)
        self.hermitian = float(hermitian)
        self.verify_unitary = float(verify_unitary)
        self.verify_symmetric = float(verify_symmetric)
        for name in self.FIELDS:
            if not getattr(self, name) > 0.0:
                raise ConfigError(f"Tolerance '{name}' must be positive")

    def replace(self, **overrides: Any) -> 'Tolerances':
        """
        Return a copy with some fields overridden; None values are ignored.

        Raises:
            ConfigError: If an unknown field is given
        """
        values = self.to_dict()
        for name, value in overrides.items():
            if name not in self.FIELDS:
                raise ConfigError(f"Unknown tolerance '{name}'")
            if value is not None:
                values[name] = value
        return Tolerances(**values)

    def is_borderline(self, statistic: float, threshold: float) -> bool:
        """Check whether a statistic lies within the borderline band of its threshold."""
        return threshold / self.BORDERLINE_FACTOR <= statistic <= threshold * self.BORDERLINE_FACTOR

    def any_borderline(self, decisions: Iterable[Tuple[float, float]]) -> bool:
        """Check a collection of (statistic, threshold) pairs for borderline decisions."""
        return any(self.is_borderline(statistic, threshold) for statistic, threshold in decisions)

    def to_dict(self) -> Dict[str, float]:
        """Convert the tolerances to a dictionary."""
        return {name: getattr(self, name) for name in self.FIELDS}

    @classmethod
    def from_config(cls, section: Dict[str, Any]) -> 'Tolerances':
        """
        Create tolerances from the ``tolerances`` section of the configuration.

        Raises:
            ConfigError: If the section holds unknown keys
        """
        unknown = set(section) - set(cls.FIELDS)
        if unknown:
            raise ConfigError(f"Unknown tolerance keys: {', '.join(sorted(unknown))}")
        return cls(**section)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tolerances):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __str__(self) -> str:
        """String representation of the tolerances."""
        return ", ".join(f"{name}={value:g}" for name, value in self.to_dict().items())

    def __repr__(self) -> str:
        """Representation of the tolerances."""
        return f"Tolerances({self.__str__()})"
