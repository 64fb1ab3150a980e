"""Qubit lattice scan: ω runs over a cubic lattice inside the Bloch ball."""

import logging
import math

import pandas as pd

from quantumwasserstein.cost import CostOperator, build_cost, random_observable_set
from quantumwasserstein.divergence import (
    GapRecord,
    SelfDistanceCache,
    divergence_for_cost,
)
from quantumwasserstein.errors import WrongDimensionError
from quantumwasserstein.experiments.common import (
    LatticeSpec,
    evaluate_item,
    run_work_items,
)
from quantumwasserstein.qubit import BlochVector, from_bloch
from quantumwasserstein.states.common import DensityMatrix, ObservableSet
from quantumwasserstein.states.sampling import RngStream, random_state
from quantumwasserstein.transport.common import SolverConfig

_logger = logging.getLogger("quantumwasserstein.experiments")


def lattice_points(spec: LatticeSpec = None) -> list[tuple[int, int, int]]:
    """Integer triples with j² + k² + l² ≤ radius_bound, lexicographic."""
    spec = spec or LatticeSpec()
    r = math.isqrt(spec.radius_bound)
    span = range(-r, r + 1)
    return [
        (j, k, l)
        for j in span
        for k in span
        for l in span  # noqa: E741
        if j * j + k * k + l * l <= spec.radius_bound
    ]


def lattice_state(point: tuple[int, int, int], step: float) -> DensityMatrix:
    return from_bloch(BlochVector(b=tuple(step * n for n in point)))


def _lattice_gap(
    rho: DensityMatrix,
    tau: DensityMatrix,
    c: CostOperator,
    cfg: SolverConfig,
    d_rho_tau: float,
    point: tuple[int, int, int],
    step: float,
    cache: SelfDistanceCache,
) -> GapRecord:
    omega = lattice_state(point, step)
    return GapRecord.from_divergences(
        divergence_for_cost(rho, omega, c, cfg, cache).value,
        divergence_for_cost(omega, tau, c, cfg, cache).value,
        d_rho_tau,
        dim=2,
        sampler_tag="lattice",
        point=point,
    )


def lattice_scan(
    rho: DensityMatrix,
    tau: DensityMatrix,
    a: ObservableSet,
    spec: LatticeSpec = None,
    cfg: SolverConfig = None,
    use_transpose: bool = True,
) -> tuple[float, list[GapRecord]]:
    """Minimal triangle gap with ω over the lattice and ρ, τ fixed.

    Returns:
        The minimum gap and one record per lattice point, in lattice order.

    Raises:
        ExperimentPointError: a solve failed; ``point`` holds the (j, k, l).
    """
    if rho.dim != 2 or tau.dim != 2:
        raise WrongDimensionError("The lattice scan runs on qubit states")
    spec = spec or LatticeSpec()
    cfg = cfg or SolverConfig()
    c = build_cost(a, use_transpose)
    d_rho_tau = evaluate_item(divergence_for_cost, "rho-tau", (rho, tau, c, cfg)).value

    items = [
        (point, (rho, tau, c, cfg, d_rho_tau, point, spec.step))
        for point in lattice_points(spec)
    ]
    records = run_work_items(_lattice_gap, items, spec.n_cpu, desc="Lattice scan")
    min_gap = min(record.gap for record in records)
    _logger.info(f"Lattice scan over {len(records)} points: min gap {min_gap:.6g}")
    return min_gap, records


def lattice_table(
    seed: int,
    pairs: int = 4,
    triples: int = 4,
    spec: LatticeSpec = None,
    cfg: SolverConfig = None,
) -> pd.DataFrame:
    """Min-gap table over seeded (ρ, τ) pairs and random observable triples.

    Pair n is drawn from stream n and triple m from stream ``pairs + m``; the
    frame is indexed by m with one column per n.
    """
    root = RngStream(seed=seed)
    state_pairs = []
    for n in range(pairs):
        gen = root.substream(n).generator()
        state_pairs.append((random_state(2, rng=gen), random_state(2, rng=gen)))
    observable_sets = [
        random_observable_set(2, 3, root.substream(pairs + m).generator())
        for m in range(triples)
    ]

    table = {}
    for n, (rho, tau) in enumerate(state_pairs, start=1):
        column = {}
        for m, a in enumerate(observable_sets, start=1):
            column[m], _ = lattice_scan(rho, tau, a, spec, cfg)
        table[n] = column
    frame = pd.DataFrame(table)
    frame.index.name = "m"
    frame.columns.name = "n"
    return frame
