"""
Proper-pair normalization and the reality-ratio test.
"""
import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from models.proper_pair import ProperPair
from models.tolerances import Tolerances
from utils.errors import CannotMakeProper, ZeroDenominator

logger = logging.getLogger("UECSM.Proper")


def zero_mask(
    overlap: np.ndarray,
    tol: Tolerances,
    row_norms: Optional[Sequence[float]] = None,
    col_norms: Optional[Sequence[float]] = None
) -> np.ndarray:
    """
    Flag the overlap entries that count as zero.

    Args:
        overlap: The overlap matrix M
        tol: Tolerances (``zero`` is used)
        row_norms: ||g_i|| per row, 1 when omitted
        col_norms: ||h_j|| per column, 1 when omitted

    Returns:
        np.ndarray: Boolean mask with |m_ij| <= zero * ||g_i|| * ||h_j||
    """
    n = overlap.shape[0]
    rows = np.ones(n) if row_norms is None else np.asarray(row_norms, dtype=np.float64)
    cols = np.ones(n) if col_norms is None else np.asarray(col_norms, dtype=np.float64)
    return np.abs(overlap) <= tol.zero * rows[:, None] * cols[None, :]


def make_proper(
    overlap: np.ndarray,
    tol: Optional[Tolerances] = None,
    row_norms: Optional[Sequence[float]] = None,
    col_norms: Optional[Sequence[float]] = None
) -> ProperPair:
    """
    Reorder and rephase two eigenbases into a proper pair.

    The first zero-free row i and the first zero-free column j are swapped into
    position 1, then g_1 is scaled so the new top-left entry is real positive.

    Args:
        overlap: The source overlap matrix M
        tol: Tolerances (``zero`` is used)
        row_norms: Optional ||g_i|| for the zero test
        col_norms: Optional ||h_j|| for the zero test

    Returns:
        ProperPair: The normalization

    Raises:
        CannotMakeProper: If every row or every column holds a zero entry
    """
    tol = tol or Tolerances()
    n = overlap.shape[0]
    zeros = zero_mask(overlap, tol, row_norms, col_norms)

    free_rows = np.flatnonzero(~zeros.any(axis=1))
    free_cols = np.flatnonzero(~zeros.any(axis=0))
    if free_rows.size == 0 or free_cols.size == 0:
        error_msg = (
            f"No zero-free pivot: {free_rows.size} zero-free rows and {free_cols.size} zero-free columns "
            f"among {int(zeros.sum())} zero entries"
        )
        logger.debug(error_msg)
        raise CannotMakeProper(error_msg)

    i, j = int(free_rows[0]), int(free_cols[0])
    row_perm = list(range(n))
    col_perm = list(range(n))
    row_perm[0], row_perm[i] = row_perm[i], row_perm[0]
    col_perm[0], col_perm[j] = col_perm[j], col_perm[0]

    pivot = complex(overlap[i, j])
    row_phases = [1.0 + 0.0j] * n
    row_phases[0] = abs(pivot) / pivot
    return ProperPair(row_perm, col_perm, row_phases, [1.0 + 0.0j] * n)


def ratio_matrix(proper_overlap: np.ndarray) -> np.ndarray:
    """
    Reality ratios q_ij = m_ij / (m_i1 m_1j) for i, j >= 2.

    Args:
        proper_overlap: A properized overlap matrix M'

    Returns:
        np.ndarray: The (n-1) x (n-1) ratio matrix; entry (0, 0) belongs to (i, j) = (2, 2)
    """
    first_col = proper_overlap[1:, 0]
    first_row = proper_overlap[0, 1:]
    return proper_overlap[1:, 1:] / (first_col[:, None] * first_row[None, :])


def reality_test(
    proper_overlap: np.ndarray,
    tol: Optional[Tolerances] = None
) -> Tuple[bool, float, Optional[Tuple[int, int]]]:
    """
    Check that every reality ratio of a proper pair is real.

    Args:
        proper_overlap: A properized overlap matrix M'
        tol: Tolerances (``real`` and ``zero`` are used)

    Returns:
        Tuple[bool, float, Optional[Tuple[int, int]]]: (passed, margin, witness).
            The statistic is max |Im q| / (1 + |q|), the margin is that statistic
            minus ``real``, and the witness is the 0-based (i, j) of the worst
            ratio in M' coordinates when the test fails.

    Raises:
        ZeroDenominator: If the first row or column holds a zero entry
    """
    tol = tol or Tolerances()
    n = proper_overlap.shape[0]
    if np.any(np.abs(proper_overlap[0, :]) <= tol.zero) or np.any(np.abs(proper_overlap[:, 0]) <= tol.zero):
        raise ZeroDenominator("First row or column of the proper overlap matrix has a zero entry")
    if n < 2:
        return True, -tol.real, None

    ratios = ratio_matrix(proper_overlap)
    statistic = np.abs(ratios.imag) / (1.0 + np.abs(ratios))
    worst = np.unravel_index(int(np.argmax(statistic)), statistic.shape)
    margin = float(statistic[worst]) - tol.real
    passed = margin <= 0.0
    witness = None if passed else (int(worst[0]) + 1, int(worst[1]) + 1)
    return passed, margin, witness
