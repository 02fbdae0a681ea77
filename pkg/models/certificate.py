"""
Certificate data models for the UECSM toolkit.
"""
from typing import Any, Dict, List, Optional

import numpy as np

from data.serialization import matrix_from_dict, matrix_to_dict, optional_matrix_from_dict, optional_matrix_to_dict

RESIDUAL_NAMES = (
    "unitarity",
    "kernel_symmetry",
    "involution",
    "symmetry",
    "c_symmetry",
    "kernel_consistency",
    "equivalence",
    "invariants"
)


class VerificationReport:
    """
    Residuals of a certificate against its matrix, with the thresholds used.

    A residual of None means the check does not apply (no U in the certificate).
    """

    def __init__(self, residuals: Dict[str, Optional[float]], thresholds: Dict[str, float]):
        """
        Initialize the report.

        Args:
            residuals: Residual value per check name
            thresholds: Pass threshold per check name
        """
        self.residuals = dict(residuals)
        self.thresholds = dict(thresholds)

    def check(self, name: str) -> Optional[bool]:
        """Pass flag for one residual, or None when it does not apply."""
        value = self.residuals.get(name)
        if value is None:
            return None
        return value <= self.thresholds[name]

    @property
    def failures(self) -> List[str]:
        """Names of the residuals above their thresholds."""
        return [name for name in self.residuals if self.check(name) is False]

    @property
    def passed(self) -> bool:
        """True if every applicable residual is within its threshold."""
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        """Convert the report to a dictionary."""
        return {
            "passed": self.passed,
            "residuals": self.residuals,
            "thresholds": self.thresholds,
            "failures": self.failures
        }

    def __str__(self) -> str:
        """String representation of the report."""
        status = "PASS" if self.passed else f"FAIL ({', '.join(self.failures)})"
        return f"VerificationReport({status})"

    def __repr__(self) -> str:
        """Representation of the report."""
        return self.__str__()


class Certificate:
    """
    Explicit witness that T is unitarily equivalent to a complex symmetric matrix.

    U is unitary, K = U U^t is the kernel of the conjugation C x = K conj(x),
    and S = U* T U is complex symmetric. Published conjugations may come without
    U; such kernel-only certificates carry U = None.
    """

    def __init__(
        self,
        kernel: np.ndarray,
        symmetric_form: np.ndarray,
        unitary: Optional[np.ndarray] = None,
        residuals: Optional[Dict[str, Optional[float]]] = None
    ):
        """
        Initialize the certificate.

        Args:
            kernel: K
            symmetric_form: S
            unitary: U, or None for a kernel-only certificate
            residuals: Verification residuals recorded when the certificate was built
        """
        self.K = np.array(kernel, dtype=np.complex128)
        self.S = np.array(symmetric_form, dtype=np.complex128)
        self.U = None if unitary is None else np.array(unitary, dtype=np.complex128)
        for array in (self.K, self.S, self.U):
            if array is not None:
                array.setflags(write=False)
        self.residuals = dict(residuals or {})

    @property
    def n(self) -> int:
        """Dimension of the certificate."""
        return int(self.K.shape[0])

    @property
    def kernel_only(self) -> bool:
        """True if the certificate carries no unitary."""
        return self.U is None

    @classmethod
    def from_unitary(cls, matrix: np.ndarray, unitary: np.ndarray) -> 'Certificate':
        """
        Build K = U U^t and S = U* T U from a unitary.

        Args:
            matrix: The certified matrix T
            unitary: The unitary U

        Returns:
            Certificate: A certificate without recorded residuals
        """
        unitary = np.asarray(unitary, dtype=np.complex128)
        return cls(
            kernel=unitary @ unitary.T,
            symmetric_form=np.conj(unitary).T @ matrix @ unitary,
            unitary=unitary
        )

    def with_residuals(self, residuals: Dict[str, Optional[float]]) -> 'Certificate':
        """Return a copy carrying the given residuals."""
        return Certificate(self.K, self.S, self.U, residuals)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the certificate to a dictionary.

        Returns:
            Dict[str, Any]: ``{"U": ..., "K": ..., "S": ..., "residuals": ...}``
        """
        return {
            "U": optional_matrix_to_dict(self.U),
            "K": matrix_to_dict(self.K),
            "S": matrix_to_dict(self.S),
            "residuals": self.residuals
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Certificate':
        """Create a certificate from a dictionary."""
        return cls(
            kernel=matrix_from_dict(data["K"]),
            symmetric_form=matrix_from_dict(data["S"]),
            unitary=optional_matrix_from_dict(data.get("U")),
            residuals=data.get("residuals")
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Certificate):
            return NotImplemented
        same_u = (self.U is None and other.U is None) or (
            self.U is not None and other.U is not None and np.array_equal(self.U, other.U)
        )
        return (
            same_u
            and np.array_equal(self.K, other.K)
            and np.array_equal(self.S, other.S)
            and self.residuals == other.residuals
        )

    def __str__(self) -> str:
        """String representation of the certificate."""
        kind = "kernel-only" if self.kernel_only else "full"
        return f"Certificate(n={self.n}, {kind})"

    def __repr__(self) -> str:
        """Representation of the certificate."""
        return self.__str__()
