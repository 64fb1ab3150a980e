import unittest

import numpy as np
from pydantic import ValidationError

from quantumwasserstein.bounds import (
    HellingerBoundInput,
    best_tangent_bound,
    energy,
    hellinger_inputs,
    hellinger_lower_bound,
    tangent_bound,
)
from quantumwasserstein.cost import build_cost
from quantumwasserstein.errors import DimensionMismatchError, ObservableNotPsdError
from quantumwasserstein.states.common import ObservableSet
from quantumwasserstein.states.sampling import RngStream, complex_gaussian, random_state
from quantumwasserstein.transport import solve_primal
from tests.common import SIGMA, ket, qubit

PROJECTOR = ObservableSet.of(np.diag([1.0, 0.0]))


def _random_psd_set(dim: int, k: int, gen: np.random.Generator) -> ObservableSet:
    factors = (complex_gaussian(gen, (dim, dim)) for _ in range(k))
    return ObservableSet.of(*(m @ m.conj().T for m in factors))


class TestHellingerBound(unittest.TestCase):
    def test_equal_states(self):
        rho = qubit(0.2, 0.1)
        self.assertAlmostEqual(hellinger_lower_bound(rho, rho, PROJECTOR), 0.0)

    def test_projector_example(self):
        bound = hellinger_lower_bound(ket(0), ket(1), PROJECTOR)
        self.assertEqual(bound, 1.0)
        primal = solve_primal(ket(0), ket(1), build_cost(PROJECTOR))
        self.assertAlmostEqual(primal.squared_distance, 1.0, delta=1e-6)

    def test_bound_below_primal(self):
        gen = RngStream(seed=31).generator()
        for dim in (2, 3, 4):
            for _ in range(4):
                rho, omega = random_state(dim, rng=gen), random_state(dim, rng=gen)
                a = _random_psd_set(dim, 2, gen)
                primal = solve_primal(rho, omega, build_cost(a)).squared_distance
                bound = hellinger_lower_bound(rho, omega, a)
                self.assertLessEqual(bound, primal + 1e-6 * max(1.0, primal))

    def test_rejects_indefinite_observables(self):
        with self.assertRaises(ObservableNotPsdError):
            hellinger_lower_bound(ket(0), ket(1), ObservableSet.of(SIGMA[3]))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            hellinger_lower_bound(ket(0), ket(0, 3), PROJECTOR)


class TestBoundInput(unittest.TestCase):
    def test_zero_moment(self):
        self.assertEqual(HellingerBoundInput(alpha=0.0, beta=2.0).bound, 2.0)

    def test_closed_form(self):
        self.assertAlmostEqual(HellingerBoundInput(alpha=2.0, beta=0.5).bound, 0.5)

    def test_rounding_is_clamped(self):
        self.assertEqual(HellingerBoundInput(alpha=-1e-12, beta=1.0).alpha, 0.0)

    def test_negative_moment(self):
        with self.assertRaises(ValidationError):
            HellingerBoundInput(alpha=-0.1, beta=1.0)


class TestEnergy(unittest.TestCase):
    def test_paulis(self):
        self.assertAlmostEqual(energy(ket(0), ObservableSet.of(*SIGMA[1:])), 3.0)

    def test_equals_second_moment(self):
        gen = RngStream(seed=32).generator()
        rho, omega = random_state(3, rng=gen), random_state(3, rng=gen)
        a = _random_psd_set(3, 3, gen)
        inputs = hellinger_inputs(rho, omega, a)
        self.assertAlmostEqual(energy(rho, a), inputs.beta)
        self.assertAlmostEqual(energy(omega, a), inputs.alpha)


class TestTangentBound(unittest.TestCase):
    def test_unit_slope_is_zero(self):
        self.assertEqual(tangent_bound(2.0, 3.0, 1.0), 0.0)

    def test_best_tangent_matches_closed_form(self):
        for alpha, beta in ((2.0, 0.5), (1.0, 1.0), (0.3, 4.0), (5.0, 0.01)):
            expected = HellingerBoundInput(alpha=alpha, beta=beta).bound
            best = best_tangent_bound(alpha, beta)
            self.assertAlmostEqual(best, expected, delta=1e-8)


if __name__ == "__main__":
    unittest.main()
