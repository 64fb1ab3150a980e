import unittest

import numpy as np

from quantumwasserstein.states.common import DensityMatrix, HermitianMatrix
from quantumwasserstein.states.operations import pauli_matrices
from quantumwasserstein.transport.common import Coupling

SIGMA = tuple(p.entries for p in pauli_matrices())


def qubit(x: float = 0.0, y: float = 0.0, z: float = 0.0) -> DensityMatrix:
    """½(I + xσ_1 + yσ_2 + zσ_3)."""
    return DensityMatrix(
        entries=0.5 * (SIGMA[0] + x * SIGMA[1] + y * SIGMA[2] + z * SIGMA[3])
    )


def ket(k: int, dim: int = 2) -> DensityMatrix:
    entries = np.zeros((dim, dim))
    entries[k, k] = 1.0
    return DensityMatrix(entries=entries)


def maximally_mixed(dim: int) -> DensityMatrix:
    return DensityMatrix(entries=np.eye(dim) / dim)


class MatrixTest(unittest.TestCase):
    def assert_matrix_close(
        self,
        expected: np.ndarray | HermitianMatrix | Coupling,
        actual: np.ndarray | HermitianMatrix | Coupling,
        atol: float = 1e-10,
    ):
        if isinstance(expected, (HermitianMatrix, Coupling)):
            expected = expected.entries
        if isinstance(actual, (HermitianMatrix, Coupling)):
            actual = actual.entries
        self.assertEqual(np.shape(expected), np.shape(actual))
        deviation = float(np.max(np.abs(np.asarray(expected) - np.asarray(actual))))
        self.assertLessEqual(
            deviation, atol, f"Matrices differ by {deviation:.3e}\n{actual}"
        )
