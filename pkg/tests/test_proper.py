"""
Tests for the Cartesian decomposition, proper-pair normalization and the reality-ratio test.
"""
import cmath
import math
import unittest

import numpy as np
from numpy.testing import assert_allclose

from data.fixtures import jordan_family
from ensembles.samplers import sample_unitary
from models.proper_pair import ProperPair
from models.tolerances import Tolerances
from uecsm.cartesian import cartesian_decompose
from uecsm.proper import make_proper, ratio_matrix, reality_test, zero_mask
from utils.errors import CannotMakeProper, ZeroDenominator


class TestCartesianDecompose(unittest.TestCase):
    """Test cases for T = A + iB."""

    def test_jordan_parts(self):
        """The nilpotent example splits into the displayed Hermitian parts."""
        pair = cartesian_decompose(jordan_family(1.0))
        self.assertAlmostEqual(pair.A[0, 1], 0.5)
        self.assertAlmostEqual(pair.B[0, 1], -0.5j)
        self.assertAlmostEqual(pair.B[1, 0], 0.5j)
        assert_allclose(pair.reconstruct(), pair.T)

    def test_hermitian_and_skew_inputs(self):
        """Hermitian T gives (T, 0); iH gives (0, H)."""
        h = np.array([[2, 1 - 1j], [1 + 1j, -3]])
        pair = cartesian_decompose(h)
        assert_allclose(pair.A, h)
        assert_allclose(pair.B, np.zeros((2, 2)))

        pair = cartesian_decompose(1j * h)
        assert_allclose(pair.A, np.zeros((2, 2)), atol=1e-15)
        assert_allclose(pair.B, h)

    def test_parts_are_exactly_hermitian(self):
        """A and B equal their adjoints bit for bit."""
        rng = np.random.default_rng(8)
        t = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        pair = cartesian_decompose(t)
        self.assertTrue(np.array_equal(pair.A, pair.A.conj().T))
        self.assertTrue(np.array_equal(pair.B, pair.B.conj().T))


class TestMakeProper(unittest.TestCase):
    """Test cases for proper-pair normalization."""

    def setUp(self):
        """Set up test fixtures."""
        self.tol = Tolerances()

    def test_phase_only(self):
        """Without zeros only g_1 is rephased."""
        overlap = np.full((3, 3), 0.5, dtype=complex)
        overlap[0, 0] = 2 * cmath.exp(1j * math.pi / 4)
        proper = make_proper(overlap, self.tol)
        self.assertEqual(proper.row_perm, (0, 1, 2))
        self.assertEqual(proper.col_perm, (0, 1, 2))
        self.assertAlmostEqual(proper.row_phases[0], cmath.exp(-1j * math.pi / 4))
        normalized = proper.apply(overlap)
        self.assertAlmostEqual(normalized[0, 0], 2.0)

    def test_single_zero_moves_off_first_row(self):
        """A zero at (1, 3) ends up at (2, 3) after swapping rows 1 and 2."""
        overlap = np.ones((3, 3), dtype=complex)
        overlap[0, 2] = 0.0
        proper = make_proper(overlap, self.tol)
        self.assertEqual(proper.row_perm, (1, 0, 2))
        self.assertEqual(proper.col_perm, (0, 1, 2))
        zeros = zero_mask(proper.apply(overlap), self.tol)
        self.assertTrue(zeros[1, 2])
        self.assertEqual(int(zeros.sum()), 1)

    def test_jordan_overlap_relabels_and_scales_by_minus_i(self):
        """The |a| = 1 overlap is relabelled and the new g_1 scaled by -i."""
        overlap = np.array([[0, 2, 2], [2, 2j, -2j], [2, -2j, 2j]])
        proper = make_proper(overlap, self.tol)
        self.assertEqual(proper.row_perm, (1, 0, 2))
        self.assertEqual(proper.col_perm, (1, 0, 2))
        self.assertAlmostEqual(proper.row_phases[0], -1j)

        passed, margin, witness = reality_test(proper.apply(overlap), self.tol)
        self.assertTrue(passed)
        self.assertLess(margin, 0.0)
        self.assertIsNone(witness)

    def test_cannot_make_proper(self):
        """A zero in every row has no pivot."""
        overlap = np.eye(4, dtype=complex)
        with self.assertRaises(CannotMakeProper):
            make_proper(overlap, self.tol)

    def test_zero_mask_scales_by_norms(self):
        """Entries are compared against zero * ||g_i|| * ||h_j||."""
        overlap = np.array([[1e-9, 1.0], [1.0, 1.0]])
        self.assertFalse(zero_mask(overlap, self.tol)[0, 0])
        self.assertTrue(zero_mask(overlap, self.tol, row_norms=[100.0, 1.0], col_norms=[100.0, 1.0])[0, 0])


class TestRealityTest(unittest.TestCase):
    """Test cases for the reality-ratio test."""

    def setUp(self):
        """Set up test fixtures."""
        self.tol = Tolerances()

    def test_real_matrix_passes(self):
        """Real overlap matrices always pass."""
        rng = np.random.default_rng(1)
        overlap = rng.uniform(0.5, 1.5, (4, 4)).astype(complex)
        passed, margin, witness = reality_test(overlap, self.tol)
        self.assertTrue(passed)
        self.assertAlmostEqual(margin, -self.tol.real)
        self.assertIsNone(witness)

    def test_failure_reports_witness(self):
        """The worst non-real ratio is the witness."""
        overlap = np.ones((3, 3), dtype=complex)
        overlap[2, 1] = 1j
        passed, margin, witness = reality_test(overlap, self.tol)
        self.assertFalse(passed)
        self.assertEqual(witness, (2, 1))
        self.assertAlmostEqual(margin, 0.5 - self.tol.real)
        self.assertAlmostEqual(ratio_matrix(overlap)[1, 0], 1j)

    def test_zero_denominator(self):
        """A zero in the first row means the pair was not proper."""
        overlap = np.ones((3, 3), dtype=complex)
        overlap[0, 2] = 0.0
        with self.assertRaises(ZeroDenominator):
            reality_test(overlap, self.tol)

    def test_scaling_invariance(self):
        """(m_ij m_11) / (m_i1 m_1j) is unchanged by unimodular rescalings."""
        rng = np.random.default_rng(77)
        for n in (3, 4, 5):
            overlap = sample_unitary(n, rng)
            omega = np.exp(1j * rng.uniform(0, 2 * math.pi, n))
            zeta = np.exp(1j * rng.uniform(0, 2 * math.pi, n))
            rescaled = ProperPair(range(n), range(n), omega, zeta).apply(overlap)

            def invariant(m):
                return (m[1:, 1:] * m[0, 0]) / (m[1:, 0][:, None] * m[0, 1:][None, :])

            before, after = invariant(overlap), invariant(rescaled)
            self.assertLessEqual(np.max(np.abs(after - before) / np.abs(before)), 1e-10)


if __name__ == "__main__":
    unittest.main()
