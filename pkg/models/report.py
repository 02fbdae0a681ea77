"""
Report data model for the UECSM toolkit.
"""
import json
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from data.serialization import matrix_from_dict, matrix_to_dict
from models.tolerances import Tolerances
from models.verdict import Verdict


class Report:
    """
    Outcome of a ``test`` or ``certify`` command.

    JSON output uses the shortest round-trip float representation, so
    ``Report.from_json(report.to_json()) == report`` holds bit for bit.
    """

    def __init__(self, command: str, verdict: Verdict, tolerances: Tolerances, matrix: np.ndarray):
        """
        Initialize the report.

        Args:
            command: The command that produced it ("test" or "certify")
            verdict: The verdict
            tolerances: Tolerances the verdict was reached with
            matrix: The input matrix
        """
        self.command = command
        self.verdict = verdict
        self.tolerances = tolerances
        self.matrix = np.array(matrix, dtype=np.complex128)

    @property
    def include_certificate(self) -> bool:
        """True if the certificate is part of the report."""
        return self.command == "certify" and self.verdict.certificate is not None

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the report to a dictionary.

        Returns:
            Dict[str, Any]: Verdict fields, tolerances, optional certificate and the input echo
        """
        data = {"command": self.command}
        data.update(self.verdict.to_dict())
        if not self.include_certificate:
            data["certificate"] = None
        ratio = self.verdict.witness_ratio
        data["witness_ratio_imag"] = None if ratio is None else ratio.imag
        data["tolerances"] = self.tolerances.to_dict()
        data["input"] = matrix_to_dict(self.matrix)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Report':
        """Create a report from a dictionary."""
        return cls(
            command=data.get("command", "test"),
            verdict=Verdict.from_dict(data),
            tolerances=Tolerances.from_config(data.get("tolerances", {})),
            matrix=matrix_from_dict(data["input"])
        )

    def to_json(self) -> str:
        """Serialize the report as indented JSON."""
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        """Read a report written by ``to_json``."""
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        """
        Render the report for a terminal.

        Returns:
            str: Verdict summary followed, for ``certify``, by U, K, S and the residual table
        """
        verdict = self.verdict
        lines = [
            f"Status:     {verdict.status.value}",
            f"Branch:     {verdict.branch.value}",
        ]
        if verdict.margin is not None:
            lines.append(f"Margin:     {verdict.margin:.3e}")
        lines.append(f"Borderline: {'yes' if verdict.borderline else 'no'}")
        if verdict.witness is not None:
            i, j = verdict.witness
            lines.append(f"Witness:    q[{i + 1},{j + 1}] = {_format_scalar(verdict.witness_ratio)}")
            lines.append(f"Im(q):      {verdict.witness_ratio.imag:.6e}")
        if verdict.reason:
            lines.append(f"Reason:     {verdict.reason}")

        if self.include_certificate:
            certificate = verdict.certificate
            for name, matrix in (("U", certificate.U), ("K", certificate.K), ("S", certificate.S)):
                if matrix is not None:
                    lines.append(f"\n{name} =")
                    lines.append(format_matrix(matrix))
            lines.append("\nResiduals:")
            lines.append(residual_frame(certificate.residuals, None).to_string())
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Report):
            return NotImplemented
        return (
            self.command == other.command
            and self.to_dict() == other.to_dict()
        )

    def __str__(self) -> str:
        """String representation of the report."""
        return f"Report({self.command}: {self.verdict})"

    def __repr__(self) -> str:
        """Representation of the report."""
        return self.__str__()


def _format_scalar(value: Optional[complex]) -> str:
    if value is None:
        return "-"
    return f"{value.real:.6g}{value.imag:+.6g}i"


def format_matrix(matrix: np.ndarray) -> str:
    """Render a complex matrix with six significant digits."""
    return np.array2string(np.asarray(matrix), precision=6, suppress_small=True, max_line_width=160)


def residual_frame(residuals: Dict[str, Optional[float]], thresholds: Optional[Dict[str, float]]) -> pd.DataFrame:
    """
    Tabulate certificate residuals.

    Args:
        residuals: Residual per check; None when it does not apply
        thresholds: Threshold per check, or None to omit the pass column

    Returns:
        pd.DataFrame: One row per check
    """
    frame = pd.DataFrame({"residual": pd.Series(residuals, dtype=object)})
    if thresholds is not None:
        frame["threshold"] = pd.Series(thresholds)
        frame["pass"] = [
            None if value is None else value <= thresholds[name]
            for name, value in residuals.items()
        ]
    return frame
