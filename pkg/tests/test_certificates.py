"""
Tests for certificate construction and verification.
"""
import math
import unittest

import numpy as np
from numpy.testing import assert_allclose

from data.fixtures import (
    mixed_example,
    mixed_example_certificate,
    triangular_uecsm,
    triangular_uecsm_certificate,
)
from ensembles.samplers import sample_ginibre
from linalg.core import direct_sum, frobenius_norm, is_unitary
from models.certificate import Certificate
from models.tolerances import Tolerances
from uecsm.certificates import (
    certify_2x2,
    certify_normal,
    certify_repeated_eigenvalue,
    certify_shared_eigenvector,
    verify_certificate,
)
from utils.errors import DimensionMismatch, NotSharedEigenvector, PreconditionViolated

JORDAN_2 = np.array([[0, 1], [0, 0]], dtype=complex)


class CertificateAssertions:
    """Shared checks for produced certificates."""

    def assertValidCertificate(self, matrix, certificate, tol=None):
        tol = tol or Tolerances()
        report = verify_certificate(matrix, certificate, tol)
        self.assertTrue(report.passed, f"failed checks: {report.failures} {report.residuals}")
        n = matrix.shape[0]
        k = certificate.K
        self.assertLessEqual(frobenius_norm(k - k.T), 1e-9 * n)
        self.assertLessEqual(frobenius_norm(k @ np.conj(k) - np.eye(n)), 1e-9 * n)
        self.assertLessEqual(
            frobenius_norm(k @ matrix.T @ np.conj(k) - matrix), 1e-8 * max(1.0, frobenius_norm(matrix))
        )
        if certificate.U is not None:
            self.assertTrue(is_unitary(certificate.U, 1e-10))
        return report


class TestVerifyCertificate(unittest.TestCase, CertificateAssertions):
    """Test cases for verify_certificate."""

    def test_identity_certificate_for_symmetric_matrix(self):
        """U = K = I certifies a symmetric matrix with zero residuals."""
        t = np.array([[1 + 1j, 2], [2, -3j]])
        report = verify_certificate(t, Certificate.from_unitary(t, np.eye(2)))
        self.assertTrue(report.passed)
        for value in report.residuals.values():
            self.assertEqual(value, 0.0)

    def test_published_mixed_example_conjugation(self):
        """The published K and S for the mixed example pass as a kernel-only certificate."""
        t = mixed_example()
        report = verify_certificate(t, mixed_example_certificate())
        self.assertTrue(report.passed, report.residuals)
        self.assertIsNone(report.residuals["unitarity"])
        self.assertIsNone(report.check("equivalence"))
        self.assertLessEqual(report.residuals["c_symmetry"], 1e-10 * frobenius_norm(t))

    def test_published_triangular_conjugation(self):
        """The published conjugation of the UECSM triangular matrix passes."""
        report = verify_certificate(triangular_uecsm(), triangular_uecsm_certificate())
        self.assertTrue(report.passed, report.residuals)

    def test_tampered_kernel_fails(self):
        """Perturbing one kernel entry by 1e-3 breaks the conjugation checks."""
        t = mixed_example()
        published = mixed_example_certificate()
        kernel = published.K.copy()
        kernel[0, 1] += 1e-3
        report = verify_certificate(t, Certificate(kernel, published.S))
        self.assertFalse(report.passed)
        self.assertTrue({"involution", "c_symmetry", "kernel_symmetry"} & set(report.failures))

    def test_dimension_mismatch(self):
        """A certificate for another size is rejected."""
        certificate = Certificate.from_unitary(np.eye(2), np.eye(2))
        with self.assertRaises(DimensionMismatch):
            verify_certificate(np.eye(3), certificate)


class TestCertify2x2(unittest.TestCase, CertificateAssertions):
    """Test cases for certify_2x2."""

    def test_jordan_block(self):
        """The nilpotent Jordan block has a symmetric form."""
        certificate = certify_2x2(JORDAN_2)
        self.assertLessEqual(frobenius_norm(certificate.S - certificate.S.T), 1e-10)
        self.assertValidCertificate(JORDAN_2, certificate)

    def test_already_symmetric(self):
        """diag(1, i) is left symmetric."""
        t = np.diag([1, 1j])
        certificate = certify_2x2(t)
        self.assertValidCertificate(t, certificate)
        assert_allclose(np.abs(certificate.S), np.abs(t), atol=1e-12)

    def test_random_samples(self):
        """Every 2 x 2 Ginibre sample certifies."""
        rng = np.random.default_rng(2)
        for _ in range(1000):
            t = sample_ginibre(2, rng)
            report = self.assertValidCertificate(t, certify_2x2(t))
            for value in report.residuals.values():
                self.assertLessEqual(value, 1e-9)

    def test_wrong_dimension(self):
        """Only 2 x 2 input is accepted."""
        with self.assertRaises(DimensionMismatch):
            certify_2x2(np.eye(3))


class TestShortcutCertificates(unittest.TestCase, CertificateAssertions):
    """Test cases for the normal, repeated-eigenvalue and shared-eigenvector certificates."""

    def test_normal(self):
        """Normal matrices, including repeated eigenvalues, get a diagonalizing certificate."""
        rng = np.random.default_rng(4)
        q, _ = np.linalg.qr(sample_ginibre(4, rng))
        for diagonal in ([1 + 1j, 2, 3 - 1j, -1j], [1 + 1j, 1 + 1j, 2, 2 - 1j]):
            t = q @ np.diag(diagonal) @ q.conj().T
            certificate = certify_normal(t)
            self.assertValidCertificate(t, certificate)
            s = certificate.S
            self.assertLessEqual(frobenius_norm(s - np.diag(np.diag(s))), 1e-9)

    def test_repeated_all_ones_imaginary_part(self):
        """diag(1, 2, 3) + i (all ones) is already symmetric; U = I works."""
        t = np.diag([1.0, 2.0, 3.0]) + 1j * np.ones((3, 3))
        certificate = certify_repeated_eigenvalue(t, "B", 0.0)
        self.assertValidCertificate(t, certificate)
        assert_allclose(np.abs(certificate.U), np.eye(3), atol=1e-12)

    def test_repeated_scalar_imaginary_part(self):
        """T = A + i lambda I only needs an eigenbasis of A."""
        rng = np.random.default_rng(6)
        g = sample_ginibre(3, rng)
        a = 0.5 * (g + g.conj().T)
        t = a + 0.7j * np.eye(3)
        self.assertValidCertificate(t, certify_repeated_eigenvalue(t, "B", 0.7))

    def test_repeated_aligned_rank_one(self):
        """diag(4, 5, 6) + i e_1 e_1* keeps U = I."""
        t = np.diag([4.0, 5.0, 6.0]).astype(complex)
        t[0, 0] += 1j
        certificate = certify_repeated_eigenvalue(t, "B", 0.0)
        self.assertValidCertificate(t, certificate)
        assert_allclose(certificate.S, t, atol=1e-12)

    def test_repeated_in_real_part(self):
        """A repeated eigenvalue of A with B generic is certified through the B eigenbasis."""
        w = np.array([1.0, 1j, 2.0]) / math.sqrt(6.0)
        rng = np.random.default_rng(9)
        g = sample_ginibre(3, rng)
        b = 0.5 * (g + g.conj().T)
        t = (2.0 * np.eye(3) + 3.0 * np.outer(w, w.conj())) + 1j * b
        self.assertValidCertificate(t, certify_repeated_eigenvalue(t, "A", 2.0))

    def test_repeated_precondition(self):
        """A simple eigenvalue is refused."""
        t = np.diag([1.0, 2.0, 3.0]) + 1j * np.diag([0.0, 1.0, 2.0])
        with self.assertRaises(PreconditionViolated):
            certify_repeated_eigenvalue(t, "B", 1.0)
        with self.assertRaises(PreconditionViolated):
            certify_repeated_eigenvalue(t, "C", 1.0)

    def test_shared_eigenvector_block(self):
        """[5] (+) Jordan block splits along e_1."""
        t = direct_sum(np.array([[5.0]]), JORDAN_2)
        certificate = certify_shared_eigenvector(t, np.array([1.0, 0.0, 0.0]))
        self.assertValidCertificate(t, certificate)
        self.assertAlmostEqual(certificate.S[0, 0], 5.0)
        assert_allclose(certificate.S[0, 1:], [0, 0], atol=1e-12)

    def test_shared_eigenvector_symmetric_block(self):
        """[1 + i] (+) symmetric block keeps a symmetric form."""
        t = direct_sum(np.array([[1 + 1j]]), np.array([[2, 1j], [1j, -1]]))
        self.assertValidCertificate(t, certify_shared_eigenvector(t, np.array([1, 0, 0])))

    def test_shared_eigenvector_normal(self):
        """Any eigenvector of a normal matrix is shared."""
        t = np.diag([1 + 2j, 3, -1j])
        certificate = certify_shared_eigenvector(t, np.array([0, 1, 0]))
        self.assertValidCertificate(t, certificate)
        self.assertLessEqual(frobenius_norm(certificate.S - np.diag(np.diag(certificate.S))), 1e-10)

    def test_not_shared(self):
        """A vector that is not a common eigenvector is refused."""
        t = direct_sum(np.array([[5.0]]), JORDAN_2)
        with self.assertRaises(NotSharedEigenvector):
            certify_shared_eigenvector(t, np.array([1.0, 1.0, 0.0]))


if __name__ == "__main__":
    unittest.main()
