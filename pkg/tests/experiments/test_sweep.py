import unittest

from pydantic import ValidationError

from quantumwasserstein.experiments import SweepSpec, draw_sample, min_gap_sweep


class TestSweepSpec(unittest.TestCase):
    def test_sampler_tag(self):
        self.assertEqual(SweepSpec(dim=3).sampler_tag, "wishart-r3-k3")
        spec = SweepSpec(dim=3, rank=1, anchor="omega-pure")
        self.assertEqual(spec.sampler_tag, "wishart-r1-k3-omega-pure")

    def test_rank_bounds(self):
        with self.assertRaises(ValidationError):
            SweepSpec(dim=2, rank=3)

    def test_dim_bounds(self):
        with self.assertRaises(ValidationError):
            SweepSpec(dim=6)


class TestDrawSample(unittest.TestCase):
    def test_deterministic(self):
        spec = SweepSpec(dim=3, seed=8)
        first, second = draw_sample(spec, 4), draw_sample(spec, 4)
        for a, b in zip(first, second):
            self.assertEqual(a, b)
        self.assertNotEqual(first[0], draw_sample(spec, 5)[0])

    def test_anchors(self):
        rho, omega, tau, _ = draw_sample(SweepSpec(dim=3, anchor="omega-pure"), 0)
        self.assertTrue(omega.is_pure())
        self.assertFalse(rho.is_pure())
        rho, omega, tau, _ = draw_sample(SweepSpec(dim=3, anchor="ends-pure"), 0)
        self.assertTrue(rho.is_pure() and tau.is_pure())
        self.assertFalse(omega.is_pure())


class TestMinGapSweep(unittest.TestCase):
    def test_records(self):
        spec = SweepSpec(dim=2, samples=3, seed=5)
        min_gap, records = min_gap_sweep(spec)
        self.assertEqual([r.index for r in records], [0, 1, 2])
        self.assertEqual(min_gap, min(r.gap for r in records))
        self.assertTrue(all(r.seed == 5 for r in records))
        self.assertTrue(all(r.sampler_tag == spec.sampler_tag for r in records))

    def test_samples_do_not_depend_on_count(self):
        _, short = min_gap_sweep(SweepSpec(dim=3, samples=2, seed=6))
        _, long = min_gap_sweep(SweepSpec(dim=3, samples=3, seed=6))
        self.assertEqual(short, long[:2])

    def test_pure_endpoints_keep_triangle(self):
        for dim in (2, 3):
            spec = SweepSpec(dim=dim, samples=10, seed=40 + dim, anchor="ends-pure")
            min_gap, records = min_gap_sweep(spec)
            self.assertEqual(len(records), 10)
            self.assertGreaterEqual(min_gap, -1e-7)

    def test_pure_middle_keeps_triangle(self):
        for dim in (2, 3):
            spec = SweepSpec(dim=dim, samples=10, seed=50 + dim, anchor="omega-pure")
            min_gap, _ = min_gap_sweep(spec)
            self.assertGreaterEqual(min_gap, -1e-7)


if __name__ == "__main__":
    unittest.main()
