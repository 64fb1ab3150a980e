import tempfile
import unittest
from pathlib import Path

from quantumwasserstein.divergence import GapRecord
from quantumwasserstein.experiments import (
    SurfacePoint,
    SurfaceResult,
    records_to_frame,
    surface_to_frame,
    write_csv,
    write_surface_svg,
)


def _surface() -> SurfaceResult:
    axis = (-1.0, 0.0, 1.0)
    points = tuple(
        SurfacePoint(x=x, y=y, gap=None if abs(x) + abs(y) > 1 else 0.1 + x * y)
        for x in axis
        for y in axis
    )
    return SurfaceResult(scenario="c2-deterministic", xs=axis, ys=axis, points=points)


class TestFrames(unittest.TestCase):
    def test_lattice_columns(self):
        record = GapRecord.from_divergences(
            0.5, 0.5, 0.75, dim=2, sampler_tag="lattice", point=(1, 0, -1)
        )
        frame = records_to_frame([record])
        self.assertEqual(
            list(frame.columns),
            ["dim", "seed", "sampler-tag", "j", "k", "l"]
            + ["d_rho_omega", "d_omega_tau", "d_rho_tau", "gap"],
        )
        self.assertEqual(frame.loc[0, "gap"], 0.25)

    def test_sweep_columns(self):
        records = [
            GapRecord.from_divergences(1.0, 1.0, 1.5, dim=3, seed=2**63, index=i)
            for i in range(2)
        ]
        frame = records_to_frame(records)
        self.assertIn("sample-index", frame.columns)
        self.assertEqual(str(frame["seed"].dtype), "uint64")
        self.assertEqual(int(frame.loc[1, "seed"]), 2**63)

    def test_surface_frame(self):
        frame = surface_to_frame(_surface())
        self.assertEqual(len(frame), 9)
        self.assertEqual(int(frame["gap"].isna().sum()), 4)


class TestWriters(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_csv_format(self):
        record = GapRecord.from_divergences(1 / 3, 1 / 3, 0.5, dim=2, index=0)
        path = write_csv(records_to_frame([record]), self.dir / "nested" / "a.csv")
        lines = path.read_text().splitlines()
        self.assertEqual(
            lines[0], "dim,seed,sampler-tag,sample-index,d_rho_omega,d_omega_tau,"
            "d_rho_tau,gap"
        )
        self.assertIn("0.333333333333", lines[1])

    def test_csv_is_byte_stable(self):
        frame = surface_to_frame(_surface())
        first = write_csv(frame, self.dir / "a.csv").read_bytes()
        second = write_csv(frame, self.dir / "b.csv").read_bytes()
        self.assertEqual(first, second)
        # Inadmissible points keep their row with an empty gap.
        self.assertIn(b"\n-1,-1,\n", first)

    def test_svg_is_byte_stable(self):
        first = write_surface_svg(_surface(), self.dir / "a.svg").read_bytes()
        second = write_surface_svg(_surface(), self.dir / "b.svg").read_bytes()
        self.assertTrue(first.startswith(b"<?xml"))
        self.assertEqual(first, second)


if __name__ == "__main__":
    unittest.main()
