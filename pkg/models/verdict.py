"""
Verdict data model for the UECSM toolkit.
"""
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from data.serialization import complex_from_dict, complex_to_dict
from models.certificate import Certificate


class Status(Enum):
    """Outcomes of a UECSM test."""
    UECSM = "UECSM"
    NOT_UECSM = "NotUECSM"
    INCONCLUSIVE = "Inconclusive"


class Branch(Enum):
    """Decision branches that can produce a verdict."""
    NORMAL = "Normal"
    REPEATED_EIGENVALUE = "RepeatedEigenvalue"
    SHARED_EIGENVECTOR = "SharedEigenvector"
    MULTIPLE_ZEROS = "MultipleZeros"
    REALITY_TEST = "RealityTest"
    TWO_BY_TWO = "TwoByTwo"
    TRIVIAL = "Trivial"


class Verdict:
    """
    Outcome of a UECSM test with its branch, margin and evidence.

    ``statistic`` is the quantity the deciding branch compared against its
    threshold and ``margin`` is statistic minus threshold (negative on the
    accepting side of tests that accept below threshold). Branches with no
    threshold (Trivial, TwoByTwo) leave both as None.
    """

    def __init__(
        self,
        status: Status,
        branch: Branch,
        margin: Optional[float] = None,
        statistic: Optional[float] = None,
        witness: Optional[Tuple[int, int]] = None,
        witness_ratio: Optional[complex] = None,
        certificate: Optional[Certificate] = None,
        borderline: bool = False,
        reason: Optional[str] = None
    ):
        """
        Initialize the verdict.

        Args:
            status: UECSM, NotUECSM or Inconclusive
            branch: The branch that decided
            margin: Signed distance of the statistic to its threshold
            statistic: The decisive statistic
            witness: 0-based (i, j) of the failing ratio in the properized overlap matrix
            witness_ratio: The failing ratio q_ij
            certificate: Certificate for UECSM verdicts
            borderline: True if some decisive statistic was within the borderline band
            reason: Explanation for Inconclusive verdicts
        """
        if status == Status.NOT_UECSM and (witness is None or certificate is not None):
            raise ValueError("A NotUECSM verdict needs a witness and no certificate")
        self.status = status
        self.branch = branch
        self.margin = None if margin is None else float(margin)
        self.statistic = None if statistic is None else float(statistic)
        self.witness = None if witness is None else (int(witness[0]), int(witness[1]))
        self.witness_ratio = None if witness_ratio is None else complex(witness_ratio)
        self.certificate = certificate
        self.borderline = bool(borderline)
        self.reason = reason

    @property
    def is_uecsm(self) -> bool:
        """True for a UECSM verdict."""
        return self.status == Status.UECSM

    def to_dict(self) -> Dict[str, Any]:
        """Convert the verdict to a dictionary."""
        return {
            "status": self.status.value,
            "branch": self.branch.value,
            "margin": self.margin,
            "statistic": self.statistic,
            "borderline": self.borderline,
            "witness": None if self.witness is None else list(self.witness),
            "witness_ratio": complex_to_dict(self.witness_ratio),
            "reason": self.reason,
            "certificate": None if self.certificate is None else self.certificate.to_dict()
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Verdict':
        """Create a verdict from a dictionary."""
        certificate = data.get("certificate")
        return cls(
            status=Status(data["status"]),
            branch=Branch(data["branch"]),
            margin=data.get("margin"),
            statistic=data.get("statistic"),
            witness=data.get("witness"),
            witness_ratio=complex_from_dict(data.get("witness_ratio")),
            certificate=None if certificate is None else Certificate.from_dict(certificate),
            borderline=data.get("borderline", False),
            reason=data.get("reason")
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Verdict):
            return NotImplemented
        return (
            self.status == other.status
            and self.branch == other.branch
            and self.margin == other.margin
            and self.statistic == other.statistic
            and self.witness == other.witness
            and self.witness_ratio == other.witness_ratio
            and self.certificate == other.certificate
            and self.borderline == other.borderline
            and self.reason == other.reason
        )

    def __str__(self) -> str:
        """String representation of the verdict."""
        text = f"{self.status.value} via {self.branch.value}"
        if self.margin is not None:
            text += f" (margin {self.margin:.3e})"
        if self.borderline:
            text += " [borderline]"
        if self.reason:
            text += f": {self.reason}"
        return text

    def __repr__(self) -> str:
        """Representation of the verdict."""
        return f"Verdict({self.__str__()})"
