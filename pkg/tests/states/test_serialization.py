import json
import tempfile
import unittest
from pathlib import Path

import numpy as np

from quantumwasserstein.errors import DimensionMismatchError, InvalidStateError
from quantumwasserstein.states.common import ObservableSet
from quantumwasserstein.states.serialization import (
    dump_matrix,
    dump_observables,
    load_observables,
    load_state,
    matrix_from_json,
    matrix_to_json,
)
from tests.common import SIGMA, MatrixTest, qubit


class TestMatrixJson(MatrixTest):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_layout(self):
        data = matrix_to_json(SIGMA[2])
        self.assertEqual(data["dim"], 2)
        self.assertEqual(data["entries"][0][1], (0.0, -1.0))
        self.assertEqual(data["entries"][1][0], (0.0, 1.0))

    def test_state_file(self):
        rho = qubit(0.1, 0.2, 0.3)
        dump_matrix(rho, self.dir / "rho.json")
        self.assert_matrix_close(rho, load_state(self.dir / "rho.json"), atol=0)

    def test_dump_is_stable(self):
        dump_matrix(qubit(0.5), self.dir / "a.json")
        dump_matrix(qubit(0.5), self.dir / "b.json")
        self.assertEqual(
            (self.dir / "a.json").read_bytes(), (self.dir / "b.json").read_bytes()
        )

    def test_declared_dim_must_match(self):
        with self.assertRaises(DimensionMismatchError):
            entries = [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
            matrix_from_json({"dim": 3, "entries": entries})

    def test_invalid_state_file(self):
        path = self.dir / "bad.json"
        path.write_text(json.dumps(matrix_to_json(np.eye(2))))
        with self.assertRaises(InvalidStateError):
            load_state(path)

    def test_observable_files(self):
        a = ObservableSet.of(SIGMA[1], SIGMA[3])
        dump_observables(a, self.dir / "a.json")
        self.assertEqual(a, load_observables(self.dir / "a.json"))

    def test_single_observable_object(self):
        dump_matrix(SIGMA[3], self.dir / "z.json")
        self.assertEqual(len(load_observables(self.dir / "z.json")), 1)


if __name__ == "__main__":
    unittest.main()
