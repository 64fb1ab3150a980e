"""Minimal triangle gap over i.i.d. random triplets in dimensions 2 to 5."""

import logging

from quantumwasserstein.cost import build_cost, random_observable_set
from quantumwasserstein.divergence import (
    GapRecord,
    SelfDistanceCache,
    triangle_gap_for_cost,
)
from quantumwasserstein.experiments.common import SweepSpec, run_work_items
from quantumwasserstein.states.sampling import RngStream, random_state
from quantumwasserstein.transport.common import SolverConfig

_logger = logging.getLogger("quantumwasserstein.experiments")


def draw_sample(spec: SweepSpec, index: int):
    """The (ρ, ω, τ, A) of sample ``index``, drawn from its own substream."""
    gen = RngStream(seed=spec.seed, stream_index=index).generator()
    rank = spec.resolved_rank
    end_rank = 1 if spec.anchor == "ends-pure" else rank
    middle_rank = 1 if spec.anchor == "omega-pure" else rank
    rho = random_state(spec.dim, end_rank, gen)
    omega = random_state(spec.dim, middle_rank, gen)
    tau = random_state(spec.dim, end_rank, gen)
    a = random_observable_set(spec.dim, spec.observables_per_sample, gen)
    return rho, omega, tau, a


def _sample_gap(
    spec: SweepSpec, cfg: SolverConfig, index: int, cache: SelfDistanceCache
) -> GapRecord:
    rho, omega, tau, a = draw_sample(spec, index)
    return triangle_gap_for_cost(
        rho,
        omega,
        tau,
        build_cost(a),
        cfg,
        cache,
        seed=spec.seed,
        sampler_tag=spec.sampler_tag,
        index=index,
    )


def min_gap_sweep(
    spec: SweepSpec, cfg: SolverConfig = None
) -> tuple[float, list[GapRecord]]:
    """Draw ``spec.samples`` triplets and return the minimal gap and all records.

    Raises:
        ExperimentPointError: a solve failed; ``point`` holds the sample index.
    """
    cfg = cfg or SolverConfig()
    items = [(index, (spec, cfg, index)) for index in range(spec.samples)]
    records = run_work_items(
        _sample_gap, items, spec.n_cpu, desc=f"Sweep dim {spec.dim}"
    )
    min_gap = min(record.gap for record in records)
    _logger.info(
        f"dim {spec.dim}: min gap {min_gap:.6g} over {len(records)} samples"
    )
    return min_gap, records
