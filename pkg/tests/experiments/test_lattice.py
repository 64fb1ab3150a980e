import unittest
from unittest import mock

from pydantic import ValidationError

from quantumwasserstein.errors import (
    ExperimentPointError,
    SolverFailureError,
    WrongDimensionError,
)
from quantumwasserstein.experiments import (
    LatticeSpec,
    lattice_points,
    lattice_scan,
    lattice_table,
)
from quantumwasserstein.experiments.lattice import lattice_state
from quantumwasserstein.states.common import ObservableSet
from tests.common import SIGMA, MatrixTest, ket, qubit

PAULIS = ObservableSet.of(*SIGMA[1:])
TINY = LatticeSpec(step=1.0, radius_bound=1)


class TestLatticePoints(MatrixTest):
    def test_default_count(self):
        self.assertEqual(len(lattice_points()), 4169)

    def test_coarse_count(self):
        self.assertEqual(len(lattice_points(LatticeSpec.coarse())), 515)

    def test_small_ball(self):
        points = lattice_points(LatticeSpec(step=0.5, radius_bound=4))
        self.assertEqual(len(points), 33)
        self.assertEqual(points[0], (-2, 0, 0))
        self.assertEqual(points, sorted(points))

    def test_state(self):
        self.assert_matrix_close(qubit(0.5, 0, -0.5), lattice_state((1, 0, -1), 0.5))

    def test_must_stay_in_ball(self):
        with self.assertRaises(ValidationError):
            LatticeSpec(step=0.5, radius_bound=5)


class TestLatticeScan(unittest.TestCase):
    def setUp(self):
        self.rho = qubit(0.3, -0.2, 0.1)
        self.tau = qubit(-0.1, 0.4, 0.2)

    def test_tiny_scan(self):
        min_gap, records = lattice_scan(self.rho, self.tau, PAULIS, TINY)
        self.assertEqual([r.point for r in records], lattice_points(TINY))
        self.assertEqual(min_gap, min(r.gap for r in records))
        self.assertGreaterEqual(min_gap, -1e-6)
        self.assertTrue(all(r.sampler_tag == "lattice" for r in records))

    def test_shared_endpoint_distance(self):
        _, records = lattice_scan(self.rho, self.tau, PAULIS, TINY)
        self.assertEqual(len({r.d_rho_tau for r in records}), 1)

    def test_qubits_only(self):
        with self.assertRaises(WrongDimensionError):
            lattice_scan(ket(0, 3), ket(1, 3), PAULIS, TINY)

    def test_failure_names_point(self):
        failure = SolverFailureError("no progress", status="stalled")
        with mock.patch(
            "quantumwasserstein.experiments.lattice._lattice_gap", side_effect=failure
        ):
            with self.assertRaises(ExperimentPointError) as ctx:
                lattice_scan(self.rho, self.tau, PAULIS, TINY)
        self.assertEqual(ctx.exception.point, (-1, 0, 0))
        self.assertIs(ctx.exception.cause, failure)

    def test_pure_endpoints(self):
        rho, tau = ket(0), qubit(0, 0.6, 0.8)
        min_gap, records = lattice_scan(rho, tau, PAULIS, TINY)
        self.assertEqual(len(records), len(lattice_points(TINY)))
        self.assertGreaterEqual(min_gap, -1e-7)

    def test_endpoint_failure_is_wrapped(self):
        failure = SolverFailureError("no progress", status="stalled")
        with mock.patch(
            "quantumwasserstein.experiments.lattice.divergence_for_cost",
            side_effect=failure,
        ):
            with self.assertRaises(ExperimentPointError) as ctx:
                lattice_scan(self.rho, self.tau, PAULIS, TINY)
        self.assertEqual(ctx.exception.point, "rho-tau")
        self.assertIs(ctx.exception.cause, failure)


class TestLatticeTable(unittest.TestCase):
    def test_shape(self):
        frame = lattice_table(seed=0, pairs=2, triples=1, spec=TINY)
        self.assertEqual(frame.shape, (1, 2))
        self.assertEqual(list(frame.columns), [1, 2])
        self.assertEqual(frame.index.name, "m")

    def test_deterministic(self):
        first = lattice_table(seed=3, pairs=1, triples=1, spec=TINY)
        second = lattice_table(seed=3, pairs=1, triples=1, spec=TINY)
        self.assertTrue(first.equals(second))


if __name__ == "__main__":
    unittest.main()
