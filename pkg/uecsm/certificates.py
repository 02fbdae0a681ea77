"""
Certificate construction and independent verification.

Every UECSM verdict carries a unitary U such that S = U* T U is symmetric; the
conjugation is C x = K conj(x) with K = U U^t.
"""
import logging
import math
from typing import Dict, Optional

import numpy as np

from linalg.core import (
    adjoint,
    as_complex_matrix,
    commutator_defect,
    direct_sum,
    frobenius_norm,
    overlap_matrix,
    unitary_completion,
)
from linalg.jacobi import hermitian_eigen
from models.certificate import RESIDUAL_NAMES, Certificate, VerificationReport
from models.tolerances import Tolerances
from uecsm.cartesian import cartesian_decompose
from utils.errors import DimensionMismatch, NotSharedEigenvector, PreconditionViolated, ZeroDenominator

logger = logging.getLogger("UECSM.Certificates")


def verify_certificate(matrix: np.ndarray, certificate: Certificate, tol: Optional[Tolerances] = None) -> VerificationReport:
    """
    Check a certificate against its matrix.

    Kernel-form checks use C x = K conj(x): C is an involutive isometry when K is
    symmetric unitary with K conj(K) = I, and T = C T* C reads K T^t conj(K) = T.

    Args:
        matrix: The matrix T
        certificate: The certificate to check
        tol: Tolerances supplying the thresholds

    Returns:
        VerificationReport: Residuals and pass flags; checks needing U are None without it

    Raises:
        DimensionMismatch: If the certificate and matrix sizes differ
    """
    tol = tol or Tolerances()
    t = as_complex_matrix(matrix)
    n = t.shape[0]
    if certificate.n != n or certificate.S.shape != (n, n) or (
        certificate.U is not None and certificate.U.shape != (n, n)
    ):
        raise DimensionMismatch(f"Certificate of size {certificate.n} does not match a {n} x {n} matrix")

    k, s, u = certificate.K, certificate.S, certificate.U
    identity = np.eye(n)
    norm_t = frobenius_norm(t)
    unit_threshold = tol.verify_unitary * n
    sym_threshold = tol.verify_symmetric * max(1.0, norm_t)

    residuals: Dict[str, Optional[float]] = {
        "unitarity": None if u is None else frobenius_norm(adjoint(u) @ u - identity),
        "kernel_symmetry": frobenius_norm(k - k.T),
        "involution": frobenius_norm(k @ np.conj(k) - identity),
        "symmetry": frobenius_norm(s - s.T),
        "c_symmetry": frobenius_norm(k @ t.T @ np.conj(k) - t),
        "kernel_consistency": None if u is None else frobenius_norm(u @ u.T - k),
        "equivalence": None if u is None else frobenius_norm(adjoint(u) @ t @ u - s),
        "invariants": max(abs(np.trace(s) - np.trace(t)), abs(frobenius_norm(s) - norm_t))
    }
    thresholds = {
        name: unit_threshold if name in ("unitarity", "kernel_symmetry", "involution", "kernel_consistency")
        else sym_threshold
        for name in RESIDUAL_NAMES
    }
    report = VerificationReport(residuals=residuals, thresholds=thresholds)
    if not report.passed:
        logger.info(f"Certificate failed checks: {', '.join(report.failures)}")
    return report


def assemble_certificate(matrix: np.ndarray, unitary: np.ndarray, tol: Tolerances) -> Certificate:
    """Build the certificate of a unitary and record its verification residuals."""
    certificate = Certificate.from_unitary(matrix, unitary)
    report = verify_certificate(matrix, certificate, tol)
    if not report.passed:
        logger.warning(f"Constructed certificate misses thresholds: {', '.join(report.failures)}")
    return certificate.with_residuals(report.residuals)


def _normalize_columns(vectors: np.ndarray) -> np.ndarray:
    return vectors / np.linalg.norm(vectors, axis=0)[None, :]


def certify_normal(matrix: np.ndarray, tol: Optional[Tolerances] = None) -> Certificate:
    """
    Certificate for a normal matrix.

    A and B commute, so inside each eigenspace of A an eigenbasis of the
    compressed B diagonalizes both; U* T U is then diagonal.

    Args:
        matrix: A normal matrix T
        tol: Tolerances (eig_gap groups the eigenvalues of A)

    Returns:
        Certificate: The certificate
    """
    tol = tol or Tolerances()
    pair = cartesian_decompose(matrix)
    eig_a = hermitian_eigen(pair.A, tol.hermitian)
    gap = tol.eig_gap * max(1.0, frobenius_norm(pair.A))

    columns = []
    for group in eig_a.clusters(gap):
        block = eig_a.vectors[:, group]
        if len(group) > 1:
            compressed = adjoint(block) @ pair.B @ block
            block = block @ hermitian_eigen(0.5 * (compressed + adjoint(compressed)), tol.hermitian).vectors
        columns.append(block)
    return assemble_certificate(pair.T, _normalize_columns(np.hstack(columns)), tol)


def certify_2x2(matrix: np.ndarray, tol: Optional[Tolerances] = None) -> Certificate:
    """
    Certificate for any 2 x 2 matrix.

    Args:
        matrix: The 2 x 2 matrix T
        tol: Tolerances

    Returns:
        Certificate: The certificate

    Raises:
        DimensionMismatch: If T is not 2 x 2
    """
    tol = tol or Tolerances()
    t = as_complex_matrix(matrix)
    if t.shape != (2, 2):
        raise DimensionMismatch(f"certify_2x2 needs a 2 x 2 matrix, got {t.shape[0]} x {t.shape[0]}")

    pair = cartesian_decompose(t)
    eig_a = hermitian_eigen(pair.A, tol.hermitian)
    eig_b = hermitian_eigen(pair.B, tol.hermitian)
    repeated = (
        eig_a.min_gap() <= tol.eig_gap * max(1.0, frobenius_norm(pair.A))
        or eig_b.min_gap() <= tol.eig_gap * max(1.0, frobenius_norm(pair.B))
    )
    if repeated or commutator_defect(t) <= tol.normal:
        return certify_normal(t, tol)

    # Make <e_1, f_1> and <e_2, f_1> real; orthogonality then forces the rest
    overlap = overlap_matrix(eig_a, eig_b)
    vectors = eig_a.vectors.copy()
    for i in range(2):
        m = overlap[i, 0]
        if abs(m) > 0.0:
            vectors[:, i] *= abs(m) / m
    return assemble_certificate(t, vectors, tol)


def _aligned_eigenbasis(hermitian: np.ndarray, direction: np.ndarray, tol: Tolerances) -> np.ndarray:
    """
    Orthonormal eigenbasis {e_i} of a Hermitian matrix with every <w, e_i> real and >= 0.

    Inside a repeated eigenspace the basis is rotated so that the projection of
    w lies along a single basis vector.
    """
    eig = hermitian_eigen(hermitian, tol.hermitian)
    gap = tol.eig_gap * max(1.0, frobenius_norm(hermitian))
    negligible = tol.zero * float(np.linalg.norm(direction))

    columns = []
    for group in eig.clusters(gap):
        block = eig.vectors[:, group]
        projection = adjoint(block) @ direction
        size = float(np.linalg.norm(projection))
        if size > negligible:
            if len(group) == 1:
                block = block * (projection[0] / abs(projection[0]))
            else:
                block = block @ unitary_completion(projection / size)
        columns.append(block)
    return _normalize_columns(np.hstack(columns))


def certify_repeated_eigenvalue(
    matrix: np.ndarray,
    which: str,
    eigenvalue: float,
    tol: Optional[Tolerances] = None
) -> Certificate:
    """
    Certificate when A or B has a repeated eigenvalue.

    With X the designated part and Y the other one, X - lambda I is either zero
    (T is then Hermitian up to a scalar) or s w w*. In an eigenbasis of Y with
    every <w, e_i> real, U* Y U is real diagonal and U* w w* U is real
    symmetric, so U* T U is symmetric.

    Args:
        matrix: The matrix T
        which: "A" or "B", the part holding the repeated eigenvalue
        eigenvalue: The repeated eigenvalue lambda
        tol: Tolerances

    Returns:
        Certificate: The certificate

    Raises:
        PreconditionViolated: If lambda is not a repeated eigenvalue of the designated part,
            or X - lambda I has rank two or more
    """
    tol = tol or Tolerances()
    which = which.upper()
    if which not in ("A", "B"):
        raise PreconditionViolated(f"'which' must be 'A' or 'B', got {which!r}")

    pair = cartesian_decompose(matrix)
    designated, other = (pair.A, pair.B) if which == "A" else (pair.B, pair.A)
    n = pair.n
    threshold = tol.eig_gap * max(1.0, frobenius_norm(designated))

    eig = hermitian_eigen(designated, tol.hermitian)
    multiplicity = int(np.sum(np.abs(eig.values - eigenvalue) <= threshold))
    if multiplicity < 2:
        error_msg = f"{eigenvalue:.6g} is not a repeated eigenvalue of {which} (multiplicity {multiplicity})"
        logger.error(error_msg)
        raise PreconditionViolated(error_msg)

    shifted = hermitian_eigen(designated - eigenvalue * np.eye(n), tol.hermitian)
    significant = np.flatnonzero(np.abs(shifted.values) > threshold)
    if significant.size == 0:
        logger.debug(f"{which} - lambda I vanishes; any eigenbasis of the other part works")
        unitary = hermitian_eigen(other, tol.hermitian).vectors
    elif significant.size == 1:
        direction = shifted.vector(int(significant[0]))
        unitary = _aligned_eigenbasis(other, direction, tol)
    else:
        error_msg = f"{which} - lambda I has rank {significant.size}; only ranks 0 and 1 are certified"
        logger.error(error_msg)
        raise PreconditionViolated(error_msg)
    return assemble_certificate(pair.T, unitary, tol)


def certify_shared_eigenvector(
    matrix: np.ndarray,
    shared: np.ndarray,
    tol: Optional[Tolerances] = None
) -> Certificate:
    """
    Certificate when A and B share an eigenvector.

    With W unitary and W[:, 0] = v, W* T W = (1 x 1) (+) (rest); the rest is
    certified on its own and the two pieces are combined.

    Args:
        matrix: The matrix T (3 x 3 or smaller)
        shared: A common eigenvector v of A and B
        tol: Tolerances

    Returns:
        Certificate: The certificate

    Raises:
        NotSharedEigenvector: If v is not an eigenvector of both A and B
        DimensionMismatch: If the remaining block is larger than 2 x 2
    """
    tol = tol or Tolerances()
    pair = cartesian_decompose(matrix)
    n = pair.n
    v = np.asarray(shared, dtype=np.complex128).reshape(-1)
    if v.shape[0] != n:
        raise DimensionMismatch(f"Vector of length {v.shape[0]} for a {n} x {n} matrix")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise NotSharedEigenvector("The zero vector is not an eigenvector")
    v = v / norm

    # |<g, h>| >= 1 - parallel puts g within sqrt(2 parallel) of the line through h
    slack = 10.0 * math.sqrt(2.0 * tol.parallel)
    for name, part in (("A", pair.A), ("B", pair.B)):
        image = part @ v
        residual = float(np.linalg.norm(image - np.vdot(v, image) * v))
        if residual > slack * max(1.0, frobenius_norm(part)):
            error_msg = f"Vector is not an eigenvector of {name} (residual {residual:.3e})"
            logger.error(error_msg)
            raise NotSharedEigenvector(error_msg)

    if n - 1 > 2:
        raise DimensionMismatch(f"Shared-eigenvector reduction leaves a {n - 1} x {n - 1} block; at most 2 x 2 is certified")

    w = unitary_completion(v)
    reduced = adjoint(w) @ pair.T @ w
    if n == 1:
        inner_unitary = np.eye(1, dtype=np.complex128)
    elif n == 2:
        inner_unitary = direct_sum(np.eye(1), np.eye(1))
    else:
        inner_unitary = direct_sum(np.eye(1), certify_2x2(reduced[1:, 1:], tol).U)
    return assemble_certificate(pair.T, w @ inner_unitary, tol)


def build_certificate(
    matrix: np.ndarray,
    eig_a,
    proper_pair,
    overlap: np.ndarray,
    tol: Optional[Tolerances] = None
) -> Certificate:
    """
    Certificate from a proper pair that passed the reality-ratio test.

    The permuted, rephased A-side vectors are scaled so every <g_i, h_1> is
    real and positive; with U = [g_1 | ... | g_n], S = U* T U is symmetric.

    Args:
        matrix: The matrix T
        eig_a: Eigen system of A
        proper_pair: The normalization that made the bases proper
        overlap: The source overlap matrix M
        tol: Tolerances

    Returns:
        Certificate: The certificate

    Raises:
        ZeroDenominator: If some <g_i, h_1> vanishes
    """
    tol = tol or Tolerances()
    vectors = proper_pair.apply_rows(eig_a.vectors)
    normalized = proper_pair.apply(overlap)
    for i in range(vectors.shape[1]):
        m = normalized[i, 0]
        if abs(m) <= tol.zero:
            raise ZeroDenominator(f"<g_{i + 1}, h_1> vanishes; the pair is not proper")
        vectors[:, i] *= abs(m) / m
    return assemble_certificate(matrix, _normalize_columns(vectors), tol)
