"""
The UECSM decision pipeline.

``test_3x3`` is a total decision for 3 x 3 matrices. ``test_generic`` dispatches
on the dimension and, from n = 4 on, applies the reality-ratio test when both
Cartesian parts have simple spectra.
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

from linalg.core import as_complex_matrix, commutator_defect, frobenius_norm, overlap_matrix
from linalg.jacobi import hermitian_eigen
from models.certificate import Certificate, VerificationReport
from models.tolerances import Tolerances
from models.verdict import Branch, Status, Verdict
from uecsm.cartesian import cartesian_decompose
from uecsm.certificates import (
    assemble_certificate,
    build_certificate,
    certify_2x2,
    certify_normal,
    certify_shared_eigenvector,
    verify_certificate,
)
from uecsm.proper import make_proper, ratio_matrix, reality_test, zero_mask
from uecsm.shortcuts import shortcut_decisions, shortcut_scan
from utils.errors import CannotMakeProper, DimensionMismatch, PreconditionViolated, ZeroDenominator

logger = logging.getLogger("UECSM.Pipeline")


def _zero_decisions(overlap: np.ndarray, tol: Tolerances) -> List[Tuple[float, float]]:
    return [(float(value), tol.zero) for value in np.abs(overlap).ravel()]


def _reality_verdict(
    t: np.ndarray,
    eig_a,
    overlap: np.ndarray,
    tol: Tolerances,
    decisions: List[Tuple[float, float]]
) -> Verdict:
    """Run make_proper, the reality-ratio test and, on success, build the certificate."""
    proper = make_proper(overlap, tol)
    normalized = proper.apply(overlap)
    passed, margin, witness = reality_test(normalized, tol)
    statistic = margin + tol.real
    borderline = tol.any_borderline(decisions + [(statistic, tol.real)])

    if passed:
        return Verdict(
            status=Status.UECSM,
            branch=Branch.REALITY_TEST,
            margin=margin,
            statistic=statistic,
            certificate=build_certificate(t, eig_a, proper, overlap, tol),
            borderline=borderline
        )

    ratio = complex(ratio_matrix(normalized)[witness[0] - 1, witness[1] - 1])
    logger.debug(f"Reality test failed at {witness} with ratio {ratio:.6g}")
    return Verdict(
        status=Status.NOT_UECSM,
        branch=Branch.REALITY_TEST,
        margin=margin,
        statistic=statistic,
        witness=witness,
        witness_ratio=ratio,
        borderline=borderline
    )


def _checked(t: np.ndarray, verdict: Verdict, tol: Tolerances) -> Verdict:
    """Demote a UECSM verdict whose certificate fails verification to a borderline Inconclusive."""
    if not verdict.is_uecsm or verdict.certificate is None:
        return verdict
    report = verify_certificate(t, verdict.certificate, tol)
    if report.passed:
        return verdict
    logger.warning(f"{verdict.branch.value} certificate fails {', '.join(report.failures)}; no UECSM claim is made")
    return Verdict(
        status=Status.INCONCLUSIVE,
        branch=verdict.branch,
        margin=verdict.margin,
        statistic=verdict.statistic,
        borderline=True,
        reason=f"certificate fails {', '.join(report.failures)}"
    )


def _multiple_zeros_verdict(
    t: np.ndarray,
    eig_a,
    overlap: np.ndarray,
    tol: Tolerances,
    decisions: List[Tuple[float, float]]
) -> Optional[Verdict]:
    """Certify through the shared eigenvector that two zero overlaps imply, or None if that fails."""
    # Two zeros in a unitary 3 x 3 overlap force an entry of modulus one
    magnitudes = np.abs(overlap)
    row, _ = np.unravel_index(int(np.argmax(magnitudes)), magnitudes.shape)
    try:
        certificate = certify_shared_eigenvector(t, eig_a.vector(int(row)), tol)
    except PreconditionViolated as e:
        logger.warning(f"Zero overlaps without a usable shared eigenvector: {e}")
        return None
    verdict = _checked(
        t,
        Verdict(
            status=Status.UECSM,
            branch=Branch.MULTIPLE_ZEROS,
            certificate=certificate,
            borderline=tol.any_borderline(decisions)
        ),
        tol
    )
    return verdict if verdict.is_uecsm else None


def test_3x3(matrix: np.ndarray, tol: Optional[Tolerances] = None) -> Verdict:
    """
    Decide whether a 3 x 3 matrix is UECSM.

    Args:
        matrix: The 3 x 3 matrix T
        tol: Tolerances

    Returns:
        Verdict: UECSM with a certificate or NotUECSM with a witness; a
            borderline Inconclusive only when no branch yields a certificate
            that verifies

    Raises:
        DimensionMismatch: If T is not 3 x 3
    """
    tol = tol or Tolerances()
    t = as_complex_matrix(matrix)
    if t.shape != (3, 3):
        raise DimensionMismatch(f"test_3x3 needs a 3 x 3 matrix, got {t.shape[0]} x {t.shape[0]}")

    pair = cartesian_decompose(t)
    eig_a = hermitian_eigen(pair.A, tol.hermitian)
    eig_b = hermitian_eigen(pair.B, tol.hermitian)

    shortcut = shortcut_scan(pair, eig_a, eig_b, tol)
    if shortcut is not None:
        return shortcut
    decisions = [(d.statistic, d.threshold) for d in shortcut_decisions(pair, eig_a, eig_b, tol)]

    overlap = overlap_matrix(eig_a, eig_b)
    zeros = zero_mask(overlap, tol)
    decisions += _zero_decisions(overlap, tol)
    if int(zeros.sum()) > 1:
        logger.debug(f"{int(zeros.sum())} zero overlaps; certifying through a shared eigenvector")
        verdict = _multiple_zeros_verdict(t, eig_a, overlap, tol, decisions)
        if verdict is not None:
            return verdict

    try:
        return _checked(t, _reality_verdict(t, eig_a, overlap, tol, decisions), tol)
    except (CannotMakeProper, ZeroDenominator) as e:
        logger.warning(f"Reality-ratio test unavailable after the shortcuts: {e}")
        return Verdict(
            status=Status.INCONCLUSIVE,
            branch=Branch.REALITY_TEST,
            borderline=True,
            reason=f"no certifiable branch: {e}"
        )


test_3x3.__test__ = False


def test_generic(matrix: np.ndarray, tol: Optional[Tolerances] = None) -> Verdict:
    """
    Decide whether a matrix of any size is UECSM, where the reality-ratio test allows.

    Args:
        matrix: The n x n matrix T
        tol: Tolerances

    Returns:
        Verdict: Trivial and TwoByTwo for n <= 2, the 3 x 3 decision for n = 3,
            otherwise Normal, RealityTest or Inconclusive with a reason
    """
    tol = tol or Tolerances()
    t = as_complex_matrix(matrix)
    n = t.shape[0]

    if n == 1:
        return Verdict(
            status=Status.UECSM,
            branch=Branch.TRIVIAL,
            certificate=assemble_certificate(t, np.eye(1, dtype=np.complex128), tol)
        )
    if n == 2:
        verdict = Verdict(status=Status.UECSM, branch=Branch.TWO_BY_TWO, certificate=certify_2x2(t, tol))
        return _checked(t, verdict, tol)
    if n == 3:
        return test_3x3(t, tol)

    normal_statistic = commutator_defect(t)
    decisions = [(normal_statistic, tol.normal)]
    if normal_statistic <= tol.normal:
        return _checked(t, Verdict(
            status=Status.UECSM,
            branch=Branch.NORMAL,
            margin=normal_statistic - tol.normal,
            statistic=normal_statistic,
            certificate=certify_normal(t, tol),
            borderline=tol.any_borderline(decisions)
        ), tol)

    pair = cartesian_decompose(t)
    eig_a = hermitian_eigen(pair.A, tol.hermitian)
    eig_b = hermitian_eigen(pair.B, tol.hermitian)
    gap_a = eig_a.min_gap() / max(1.0, frobenius_norm(pair.A))
    gap_b = eig_b.min_gap() / max(1.0, frobenius_norm(pair.B))
    decisions += [(gap_a, tol.eig_gap), (gap_b, tol.eig_gap)]
    borderline = tol.any_borderline(decisions)

    repeated = [name for name, gap in (("A", gap_a), ("B", gap_b)) if gap <= tol.eig_gap]
    if repeated:
        return Verdict(
            status=Status.INCONCLUSIVE,
            branch=Branch.REPEATED_EIGENVALUE,
            borderline=borderline,
            reason=f"repeated eigenvalue in {' and '.join(repeated)}; the reality-ratio test is only sufficient"
        )

    overlap = overlap_matrix(eig_a, eig_b)
    decisions += _zero_decisions(overlap, tol)
    try:
        return _checked(t, _reality_verdict(t, eig_a, overlap, tol, decisions), tol)
    except CannotMakeProper as e:
        return Verdict(
            status=Status.INCONCLUSIVE,
            branch=Branch.REALITY_TEST,
            borderline=tol.any_borderline(decisions),
            reason=f"no proper pair: {e}"
        )


test_generic.__test__ = False


class UECSMTester:
    """
    Runs the decision pipeline under one tolerance policy.
    """

    def __init__(self, tolerances: Optional[Tolerances] = None):
        """
        Initialize the tester.

        Args:
            tolerances: Tolerances for every decision; defaults when omitted
        """
        self.tolerances = tolerances or Tolerances()
        self.logger = logging.getLogger("UECSM.Pipeline")

    def test(self, matrix: np.ndarray) -> Verdict:
        """
        Decide a matrix of any size.

        Args:
            matrix: The matrix T

        Returns:
            Verdict: The verdict
        """
        verdict = test_generic(matrix, self.tolerances)
        self.logger.info(f"Verdict for {np.shape(matrix)[0]} x {np.shape(matrix)[0]} input: {verdict}")
        if verdict.borderline:
            self.logger.warning("A decisive statistic lies within the borderline band; the verdict is fragile")
        return verdict

    def verify(self, matrix: np.ndarray, certificate: Certificate) -> VerificationReport:
        """
        Check a certificate against a matrix.

        Args:
            matrix: The matrix T
            certificate: The certificate

        Returns:
            VerificationReport: Residuals and pass flags
        """
        report = verify_certificate(as_complex_matrix(matrix), certificate, self.tolerances)
        self.logger.info(f"Verification: {report}")
        return report
