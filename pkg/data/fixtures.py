"""
Worked-example matrices with their published conjugations.

Published certificates are kernel-only: they give K and S = U*TU but not U.
"""
import math
from typing import Callable, Dict

import numpy as np

from models.certificate import Certificate

SQRT2 = math.sqrt(2.0)


def triangular_uecsm() -> np.ndarray:
    """Upper-triangular matrix with diagonal (0, 1, 6); UECSM."""
    return np.array([[0, 7, 0], [0, 1, -5], [0, 0, 6]], dtype=np.complex128)


def triangular_not_uecsm() -> np.ndarray:
    """Upper-triangular matrix with diagonal (0, 1, 3); not UECSM."""
    return np.array([[0, 7, 0], [0, 1, -5], [0, 0, 3]], dtype=np.complex128)


def mixed_example() -> np.ndarray:
    """
    3 x 3 matrix with a known conjugation.

    A has eigenvalues 2(1 - sqrt 2), -2, 2(1 + sqrt 2) and B has
    2(1 - sqrt 3), 0, 2(1 + sqrt 3).
    """
    return np.array([
        [1 + 4j, (-2 - 1j) * SQRT2, -1 - 4j],
        [1j * SQRT2, 0, 1j * SQRT2],
        [-1, (2 - 1j) * SQRT2, 1]
    ], dtype=np.complex128)


def jordan_family(a: complex, b: complex = 1.0) -> np.ndarray:
    """Nilpotent [[0, b, 0], [0, 0, a], [0, 0, 0]]; UECSM iff |a| = |b|."""
    return np.array([[0, b, 0], [0, 0, a], [0, 0, 0]], dtype=np.complex128)


def jordan_unimodular() -> np.ndarray:
    """Nilpotent family member with a = b = 1; UECSM."""
    return jordan_family(1.0)


def jordan_unbalanced() -> np.ndarray:
    """Nilpotent family member with a = 2, b = 1; not UECSM."""
    return jordan_family(2.0)


def mixed_example_certificate() -> Certificate:
    """Published kernel and symmetric form for ``mixed_example``."""
    r = 1.0 / SQRT2
    kernel = np.array([
        [0.5, -1j * r, -0.5],
        [-1j * r, 0, -1j * r],
        [-0.5, -1j * r, 0.5]
    ], dtype=np.complex128)
    symmetric = 2.0 * np.array([
        [1 + SQRT2 + 1j, -1j, 1j],
        [-1j, -1, -1j],
        [1j, -1j, 1 - SQRT2 + 1j]
    ], dtype=np.complex128)
    return Certificate(kernel=kernel, symmetric_form=symmetric)


def triangular_uecsm_certificate() -> Certificate:
    """Published kernel and symmetric form for ``triangular_uecsm``."""
    z = complex(-19.0, 6.0 * math.sqrt(74.0))
    kernel = (z / 3025.0) * np.array([
        [6, -42, -35],
        [-42, 19, -30],
        [-35, -30, 30]
    ], dtype=np.complex128)
    off = 35.0 * math.sqrt(55.0) / 74.0
    half = math.sqrt(37.0 / 2.0)
    symmetric = np.array([
        [56.0 / 37.0 - 1j * half, -55.0 / 37.0, off],
        [-55.0 / 37.0, 56.0 / 37.0 + 1j * half, off],
        [off, off, 147.0 / 37.0]
    ], dtype=np.complex128)
    return Certificate(kernel=kernel, symmetric_form=symmetric)


def degenerate_5x5() -> np.ndarray:
    """
    Non-normal 5 x 5 matrix whose real part has a double eigenvalue.

    The reality-ratio test is not decisive here, so the verdict is Inconclusive.
    """
    real_part = np.diag([1.0, 1.0, 2.0, 3.0, 4.0]).astype(np.complex128)
    imag_part = np.array([
        [0, 1 + 1j, 0, 2j, 0],
        [1 - 1j, 1, 1j, 0, 1],
        [0, -1j, 0, 1 - 1j, 0],
        [-2j, 0, 1 + 1j, 2, 1j],
        [0, 1, 0, -1j, -1]
    ], dtype=np.complex128)
    return real_part + 1j * imag_part


FIXTURES: Dict[str, Callable[[], np.ndarray]] = {
    "T1": triangular_uecsm,
    "T2": triangular_not_uecsm,
    "mixed": mixed_example,
    "jordan-1": jordan_unimodular,
    "jordan-2": jordan_unbalanced,
    "degenerate-5x5": degenerate_5x5,
}

PUBLISHED_CERTIFICATES: Dict[str, Callable[[], Certificate]] = {
    "T1": triangular_uecsm_certificate,
    "mixed": mixed_example_certificate,
}


def get_fixture(name: str) -> np.ndarray:
    """
    Look up a fixture matrix by name.

    Raises:
        KeyError: If the name is unknown
    """
    if name not in FIXTURES:
        raise KeyError(f"Unknown example '{name}'; choose from {', '.join(FIXTURES)}")
    return FIXTURES[name]()
