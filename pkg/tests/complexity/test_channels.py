import tempfile
import unittest
from pathlib import Path

import numpy as np

from quantumwasserstein.complexity import (
    ChannelSpec,
    amplitude_damping_channel,
    apply_channel,
    compose,
    dephasing_channel,
    depolarizing_channel,
    dump_channel,
    identity_channel,
    load_channel,
    random_channel,
    resolve_channel,
    tensor,
    unitary_channel,
)
from quantumwasserstein.errors import (
    DimensionMismatchError,
    NotTracePreservingError,
    WrongDimensionError,
)
from quantumwasserstein.states.common import DensityMatrix
from quantumwasserstein.states.sampling import RngStream, random_state
from quantumwasserstein.states.serialization import dump_matrix
from tests.common import SIGMA, MatrixTest, ket, maximally_mixed, qubit


class TestChannelSpec(unittest.TestCase):
    def test_single_operator(self):
        phi = ChannelSpec(kraus=np.eye(3))
        self.assertEqual((phi.dim, len(phi.kraus)), (3, 1))
        self.assertFalse(phi.kraus[0].flags.writeable)

    def test_not_trace_preserving(self):
        with self.assertRaises(NotTracePreservingError):
            ChannelSpec(kraus=[0.5 * np.eye(2)])

    def test_mixed_shapes(self):
        with self.assertRaises(DimensionMismatchError):
            ChannelSpec(kraus=[np.eye(2), np.eye(3)])

    def test_empty(self):
        with self.assertRaises(DimensionMismatchError):
            ChannelSpec(kraus=[])

    def test_probability_range(self):
        with self.assertRaises(ValueError):
            depolarizing_channel(1.5)


class TestApplyChannel(MatrixTest):
    def test_identity_is_exact(self):
        rho = random_state(3, rng=RngStream(seed=51))
        self.assertEqual(apply_channel(identity_channel(3), rho), rho)

    def test_unitary(self):
        image = apply_channel(unitary_channel(SIGMA[1]), ket(0))
        self.assert_matrix_close(ket(1), image)

    def test_completely_depolarizing(self):
        image = apply_channel(depolarizing_channel(1.0), qubit(0.3, 0.4, -0.5))
        self.assert_matrix_close(maximally_mixed(2), image, atol=1e-12)

    def test_dephasing_shrinks_coherence(self):
        image = apply_channel(dephasing_channel(0.25), qubit(1.0))
        self.assert_matrix_close(qubit(0.5), image, atol=1e-12)

    def test_full_amplitude_damping(self):
        image = apply_channel(amplitude_damping_channel(1.0), qubit(0.2, 0.1, -0.6))
        self.assert_matrix_close(ket(0), image, atol=1e-12)

    def test_random_channel_preserves_states(self):
        gen = RngStream(seed=52).generator()
        phi = random_channel(3, n_kraus=3, rng=gen)
        image = apply_channel(phi, random_state(3, rng=gen))
        self.assertIsInstance(image, DensityMatrix)
        self.assertAlmostEqual(image.trace(), 1.0, places=12)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            apply_channel(identity_channel(2), ket(0, 3))


class TestCombinators(MatrixTest):
    def test_compose_applies_first_argument_last(self):
        phi = compose(amplitude_damping_channel(1.0), unitary_channel(SIGMA[1]))
        self.assert_matrix_close(ket(0), apply_channel(phi, ket(0)), atol=1e-12)
        flipped = compose(unitary_channel(SIGMA[1]), amplitude_damping_channel(1.0))
        self.assert_matrix_close(ket(1), apply_channel(flipped, ket(0)), atol=1e-12)

    def test_compose_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            compose(identity_channel(2), identity_channel(3))

    def test_tensor_acts_on_products(self):
        phi1, phi2 = unitary_channel(SIGMA[1]), dephasing_channel(0.25)
        rho, omega = qubit(0.1, 0.2, 0.3), qubit(1.0)
        product = DensityMatrix(entries=np.kron(rho.entries, omega.entries))
        expected = np.kron(
            apply_channel(phi1, rho).entries, apply_channel(phi2, omega).entries
        )
        image = apply_channel(tensor(phi1, phi2), product)
        self.assert_matrix_close(expected, image, atol=1e-12)


class TestChannelFiles(MatrixTest):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_file_round_trip(self):
        phi = depolarizing_channel(0.3)
        dump_channel(phi, self.dir / "phi.json")
        loaded = load_channel(self.dir / "phi.json")
        for expected, actual in zip(phi.kraus, loaded.kraus):
            self.assert_matrix_close(expected, actual, atol=0)

    def test_resolve_selectors(self):
        self.assertEqual(resolve_channel("identity:3").dim, 3)
        self.assertEqual(resolve_channel("identity", dim=4).dim, 4)
        self.assertEqual(len(resolve_channel("depolarizing:0.5").kraus), 4)
        self.assertEqual(len(resolve_channel("amplitude-damping:0.1").kraus), 2)

    def test_resolve_files(self):
        dump_matrix(SIGMA[1], self.dir / "x.json")
        phi = resolve_channel(f"unitary:{self.dir / 'x.json'}")
        self.assert_matrix_close(ket(1), apply_channel(phi, ket(0)))
        dump_channel(dephasing_channel(0.1), self.dir / "phi.json")
        self.assertEqual(resolve_channel(f"file:{self.dir / 'phi.json'}").dim, 2)

    def test_resolve_wrong_dimension(self):
        with self.assertRaises(WrongDimensionError):
            resolve_channel("dephasing:0.2", dim=3)

    def test_resolve_unknown(self):
        with self.assertRaises(ValueError):
            resolve_channel("erasure:0.1")


if __name__ == "__main__":
    unittest.main()
