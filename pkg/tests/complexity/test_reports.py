import unittest
from unittest import mock

import numpy as np

from quantumwasserstein.complexity import (
    SubadditivityReport,
    identity_channel,
    subadditivity_report,
    tensor_subadditivity_report,
    unitary_channel,
)
from quantumwasserstein.errors import DimensionMismatchError
from quantumwasserstein.states.common import ObservableSet
from tests.common import SIGMA

SIGMA3 = ObservableSet.of(SIGMA[3])
FAST = dict(restarts=1, max_evaluations=5)


class TestSubadditivityReport(unittest.TestCase):
    def test_slack(self):
        report = SubadditivityReport(first=1.0, second=0.5, combined=1.25)
        self.assertAlmostEqual(report.slack, 0.25)
        self.assertFalse(report.warning)

    def test_identity_pair(self):
        report = subadditivity_report(
            identity_channel(2), identity_channel(2), SIGMA3, **FAST
        )
        self.assertEqual(report.slack, 0.0)

    def test_inverse_unitaries(self):
        flip = unitary_channel(SIGMA[1])
        report = subadditivity_report(
            flip, flip, SIGMA3, restarts=2, max_evaluations=10
        )
        self.assertEqual(report.combined, 0.0)
        self.assertGreaterEqual(report.slack, 0.0)

    def test_negative_slack_is_logged(self):
        results = [mock.Mock(value=v) for v in (1.0, 1.0, 2.5)]
        with mock.patch(
            "quantumwasserstein.complexity.reports.wasserstein_complexity",
            side_effect=results,
        ):
            with self.assertLogs("quantumwasserstein.complexity", "WARNING"):
                report = subadditivity_report(
                    identity_channel(2), identity_channel(2), SIGMA3
                )
        self.assertTrue(report.warning)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            subadditivity_report(identity_channel(2), identity_channel(3), SIGMA3)


class TestTensorReport(unittest.TestCase):
    def test_local_channel(self):
        a = ObservableSet.of(np.kron(SIGMA[3], SIGMA[3]))
        report = tensor_subadditivity_report(
            unitary_channel(SIGMA[1]), identity_channel(2), a, **FAST
        )
        self.assertEqual(report.second, 0.0)
        self.assertAlmostEqual(report.slack, 0.0, delta=1e-9)


if __name__ == "__main__":
    unittest.main()
