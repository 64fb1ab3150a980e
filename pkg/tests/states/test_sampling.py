import unittest

import numpy as np

from quantumwasserstein.states.sampling import (
    RngStream,
    random_bloch_vector,
    random_observable,
    random_state,
    random_unitary,
)


class TestRngStream(unittest.TestCase):
    def test_same_stream_same_draws(self):
        a = RngStream(seed=7).generator().standard_normal(5)
        b = RngStream(seed=7).generator().standard_normal(5)
        np.testing.assert_array_equal(a, b)

    def test_substreams_differ(self):
        root = RngStream(seed=7)
        a = root.substream(0).generator().standard_normal(5)
        b = root.substream(1).generator().standard_normal(5)
        self.assertFalse(np.allclose(a, b))

    def test_seed_range(self):
        RngStream(seed=2**64 - 1)
        with self.assertRaises(ValueError):
            RngStream(seed=-1)


class TestRandomState(unittest.TestCase):
    def test_unit_trace_and_positive(self):
        gen = RngStream(seed=1).generator()
        for dim in (2, 3, 5):
            rho = random_state(dim, rng=gen)
            self.assertAlmostEqual(rho.trace(), 1.0, places=12)
            self.assertGreaterEqual(rho.eigenvalues[0], -1e-12)

    def test_rank_one_is_pure(self):
        rho = random_state(4, rank=1, rng=RngStream(seed=2))
        self.assertTrue(rho.is_pure())
        self.assertEqual(int(np.sum(rho.eigenvalues > 1e-9)), 1)

    def test_deterministic(self):
        a = random_state(2, 2, RngStream(seed=7, stream_index=0))
        b = random_state(2, 2, RngStream(seed=7, stream_index=0))
        np.testing.assert_array_equal(a.entries, b.entries)

    def test_rank_out_of_range(self):
        with self.assertRaises(ValueError):
            random_state(2, rank=3, rng=RngStream(seed=0))


class TestRandomObservable(unittest.TestCase):
    def test_hermitian(self):
        a = random_observable(3, RngStream(seed=4))
        np.testing.assert_allclose(a.entries, a.entries.conj().T)

    def test_diagonal_mean_is_zero(self):
        gen = RngStream(seed=9).generator()
        draws = 20_000
        diagonals = np.array(
            [np.diag(random_observable(2, gen).entries).real for _ in range(draws)]
        )
        # Diagonal entries are 2·Re(y_kk) with variance 4.
        standard_error = 2 / np.sqrt(draws)
        self.assertTrue(np.all(np.abs(diagonals.mean(axis=0)) < 3 * standard_error))


class TestBlochAndUnitary(unittest.TestCase):
    def test_bloch_vectors_inside_ball(self):
        gen = RngStream(seed=3).generator()
        norms = [np.linalg.norm(random_bloch_vector(gen)) for _ in range(500)]
        self.assertLessEqual(max(norms), 1.0)
        # Uniform in volume: P(|b| ≤ ½) = 1/8.
        self.assertAlmostEqual(np.mean(np.array(norms) <= 0.5), 0.125, delta=0.05)

    def test_unitary(self):
        u = random_unitary(4, RngStream(seed=8))
        np.testing.assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-12)


if __name__ == "__main__":
    unittest.main()
