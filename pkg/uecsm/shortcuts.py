"""
Shortcut branches that settle a 3 x 3 test before the reality-ratio test.

Normal matrices are UECSM in every dimension. At n = 3 a repeated eigenvalue
of A or B, or an eigenvector shared by A and B, also forces UECSM.
"""
import logging
from typing import List, NamedTuple, Optional

import numpy as np

from linalg.core import commutator_defect, frobenius_norm, overlap_matrix
from models.cartesian_pair import CartesianPair
from models.certificate import Certificate
from models.eigensystem import EigenSystem
from models.tolerances import Tolerances
from models.verdict import Branch, Status, Verdict
from uecsm.certificates import (
    certify_normal,
    certify_repeated_eigenvalue,
    certify_shared_eigenvector,
    verify_certificate,
)
from utils.errors import PreconditionViolated

logger = logging.getLogger("UECSM.Shortcuts")


class Decision(NamedTuple):
    """A shortcut statistic with its threshold; the branch fires when statistic <= threshold."""
    branch: Branch
    statistic: float
    threshold: float
    detail: str

    @property
    def fires(self) -> bool:
        return self.statistic <= self.threshold

    @property
    def margin(self) -> float:
        return self.statistic - self.threshold


def _relative_gap(eig: EigenSystem, part: np.ndarray) -> float:
    return eig.min_gap() / max(1.0, frobenius_norm(part))


def shortcut_decisions(
    pair: CartesianPair,
    eig_a: EigenSystem,
    eig_b: EigenSystem,
    tol: Tolerances
) -> List[Decision]:
    """
    Evaluate every shortcut statistic that applies at this dimension, in firing order.

    Args:
        pair: Cartesian decomposition of T
        eig_a: Eigen system of A
        eig_b: Eigen system of B
        tol: Tolerances

    Returns:
        List[Decision]: Normal first; at n = 3 also repeated eigenvalue of A,
            of B, then shared eigenvector
    """
    decisions = [Decision(Branch.NORMAL, commutator_defect(pair.T), tol.normal, "normal")]
    if pair.n != 3:
        return decisions

    decisions.append(
        Decision(Branch.REPEATED_EIGENVALUE, _relative_gap(eig_a, pair.A), tol.eig_gap, "A")
    )
    decisions.append(
        Decision(Branch.REPEATED_EIGENVALUE, _relative_gap(eig_b, pair.B), tol.eig_gap, "B")
    )
    overlap = np.abs(overlap_matrix(eig_a, eig_b))
    decisions.append(
        Decision(Branch.SHARED_EIGENVECTOR, 1.0 - float(overlap.max()), tol.parallel, "shared")
    )
    return decisions


def _repeated_eigenvalue(eig: EigenSystem) -> float:
    """Midpoint of the closest pair of eigenvalues."""
    values = np.sort(eig.values)
    k = int(np.argmin(np.diff(values)))
    return float(0.5 * (values[k] + values[k + 1]))


def _certify(pair: CartesianPair, eig_a: EigenSystem, eig_b: EigenSystem, fired: Decision, tol: Tolerances) -> Certificate:
    if fired.branch == Branch.NORMAL:
        return certify_normal(pair.T, tol)
    if fired.branch == Branch.REPEATED_EIGENVALUE:
        eig = eig_a if fired.detail == "A" else eig_b
        return certify_repeated_eigenvalue(pair.T, fired.detail, _repeated_eigenvalue(eig), tol)
    overlap = np.abs(overlap_matrix(eig_a, eig_b))
    row, _ = np.unravel_index(int(np.argmax(overlap)), overlap.shape)
    return certify_shared_eigenvector(pair.T, eig_a.vector(int(row)), tol)


def shortcut_scan(
    pair: CartesianPair,
    eig_a: EigenSystem,
    eig_b: EigenSystem,
    tol: Optional[Tolerances] = None
) -> Optional[Verdict]:
    """
    Return a UECSM verdict when a shortcut branch fires and its certificate verifies.

    Fired branches are tried in order; a branch whose certificate cannot be
    built or fails verify_certificate is skipped.

    Args:
        pair: Cartesian decomposition of T
        eig_a: Eigen system of A
        eig_b: Eigen system of B
        tol: Tolerances

    Returns:
        Optional[Verdict]: A certified UECSM verdict, or None when no shortcut applies
    """
    tol = tol or Tolerances()
    decisions = shortcut_decisions(pair, eig_a, eig_b, tol)
    for fired in (decision for decision in decisions if decision.fires):
        logger.debug(f"Shortcut {fired.branch.value} ({fired.detail}) fired, statistic {fired.statistic:.3e}")
        try:
            certificate = _certify(pair, eig_a, eig_b, fired, tol)
        except PreconditionViolated as e:
            logger.warning(f"Shortcut {fired.branch.value} ({fired.detail}) skipped: {e}")
            continue

        report = verify_certificate(pair.T, certificate, tol)
        if not report.passed:
            logger.warning(
                f"Shortcut {fired.branch.value} ({fired.detail}) skipped: "
                f"certificate fails {', '.join(report.failures)}"
            )
            continue

        return Verdict(
            status=Status.UECSM,
            branch=fired.branch,
            margin=fired.margin,
            statistic=fired.statistic,
            certificate=certificate,
            borderline=tol.any_borderline((d.statistic, d.threshold) for d in decisions)
        )
    return None
