"""Gap surfaces over two-parameter families of middle states ω(x, y)."""

import logging
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from quantumwasserstein.cost import (
    CostOperator,
    build_cost,
    pauli_product_set,
    random_observable_set,
)
from quantumwasserstein.divergence import SelfDistanceCache, divergence_for_cost
from quantumwasserstein.experiments.common import (
    Scenario,
    SurfaceSpec,
    evaluate_item,
    run_work_items,
)
from quantumwasserstein.states.common import (
    EIGENVALUE_CLAMP,
    DensityMatrix,
    HermitianMatrix,
    ObservableSet,
)
from quantumwasserstein.states.operations import pauli_basis, pauli_matrices
from quantumwasserstein.states.sampling import RngStream, random_state
from quantumwasserstein.transport.common import SolverConfig

_logger = logging.getLogger("quantumwasserstein.experiments")


class SurfacePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    gap: Optional[float] = None


class SurfaceResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario: Scenario
    xs: tuple[float, ...]
    ys: tuple[float, ...]
    points: tuple[SurfacePoint, ...]

    @property
    def evaluated(self) -> list[SurfacePoint]:
        return [p for p in self.points if p.gap is not None]

    @property
    def min_gap(self) -> float:
        return min(p.gap for p in self.evaluated)

    def grid(self) -> np.ndarray:
        """Gaps shaped (len(ys), len(xs)); NaN marks inadmissible points."""
        values = np.array(
            [np.nan if p.gap is None else p.gap for p in self.points], dtype=float
        )
        return values.reshape(len(self.xs), len(self.ys)).T


class SurfaceScenario(BaseModel):
    """Fixed ρ, τ and cost, with ω(x, y) = base + x·dx + y·dy."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rho: DensityMatrix
    tau: DensityMatrix
    a: ObservableSet
    base: HermitianMatrix
    dx: HermitianMatrix
    dy: HermitianMatrix
    extent: float

    def omega_entries(self, x: float, y: float) -> np.ndarray:
        return self.base.entries + x * self.dx.entries + y * self.dy.entries

    def admissible(self, x: float, y: float) -> bool:
        minimum = np.linalg.eigvalsh(self.omega_entries(x, y))[0]
        return bool(minimum >= -EIGENVALUE_CLAMP)

    def omega(self, x: float, y: float) -> DensityMatrix:
        return DensityMatrix(entries=self.omega_entries(x, y))


def _pauli(*indices: int) -> np.ndarray:
    """σ_{j1} ⊗ σ_{j2} ⊗ …"""
    return pauli_basis(2 ** len(indices))[
        sum(j * 4 ** (len(indices) - 1 - n) for n, j in enumerate(indices))
    ].entries


def _qubit(*coefficients: float) -> np.ndarray:
    identity, *sigmas = (p.entries for p in pauli_matrices())
    return 0.5 * (identity + sum(c * s for c, s in zip(coefficients, sigmas)))


def _two_qubit(terms: dict[tuple[int, int], float]) -> np.ndarray:
    return 0.25 * (np.eye(4) + sum(v * _pauli(*k) for k, v in terms.items()))


_OMEGA_REGION = {
    (1, 0): 0.1,
    (1, 1): 0.1,
    (1, 2): 0.1,
    (2, 0): 0.3,
    (2, 2): 0.2,
}


def _c2(
    z: float, rho: DensityMatrix, tau: DensityMatrix, a: ObservableSet
) -> SurfaceScenario:
    return SurfaceScenario(
        rho=rho,
        tau=tau,
        a=a,
        base=HermitianMatrix(entries=_qubit(0, 0, z)),
        dx=HermitianMatrix(entries=0.5 * _pauli(1)),
        dy=HermitianMatrix(entries=0.5 * _pauli(2)),
        extent=float(np.sqrt(1 - z * z)),
    )


def _c4(rho: DensityMatrix, tau: DensityMatrix, a: ObservableSet) -> SurfaceScenario:
    return SurfaceScenario(
        rho=rho,
        tau=tau,
        a=a,
        base=HermitianMatrix(entries=_two_qubit(_OMEGA_REGION)),
        dx=HermitianMatrix(entries=0.25 * _pauli(0, 1)),
        dy=HermitianMatrix(entries=0.25 * _pauli(0, 2)),
        extent=1.0,
    )


def build_scenario(spec: SurfaceSpec) -> SurfaceScenario:
    """States, cost and ω-family of one of the four surface scenarios."""
    gen = RngStream(seed=spec.seed).generator()
    if spec.scenario == "c2-deterministic":
        rho = DensityMatrix(entries=_qubit(1 / np.sqrt(2), 1 / np.sqrt(3), 0))
        tau = DensityMatrix(entries=_qubit(0, 1 / 3, 1 / 4))
        sigmas = pauli_matrices()
        a = ObservableSet.of(sigmas[1], sigmas[3])
        return _c2(1 / np.sqrt(2), rho, tau, a)
    elif spec.scenario == "c4-deterministic":
        rho = DensityMatrix(
            entries=_two_qubit({(1, 1): 0.1, (2, 0): 0.2, (3, 0): 0.3})
        )
        tau = DensityMatrix(
            entries=_two_qubit({(0, 3): 0.3, (1, 3): 0.2, (3, 0): 0.1})
        )
        return _c4(rho, tau, pauli_product_set(2))
    elif spec.scenario == "c2-random":
        rho, tau = random_state(2, rng=gen), random_state(2, rng=gen)
        a = random_observable_set(2, spec.observables, gen)
        return _c2(1 / 5, rho, tau, a)
    elif spec.scenario == "c4-random":
        rho, tau = random_state(4, rng=gen), random_state(4, rng=gen)
        a = random_observable_set(4, spec.observables, gen)
        return _c4(rho, tau, a)
    raise ValueError(f"Unknown scenario {spec.scenario!r}")


def _surface_gap(
    scenario: SurfaceScenario,
    c: CostOperator,
    cfg: SolverConfig,
    d_rho_tau: float,
    x: float,
    y: float,
    cache: SelfDistanceCache,
) -> SurfacePoint:
    if not scenario.admissible(x, y):
        return SurfacePoint(x=x, y=y)
    omega = scenario.omega(x, y)
    gap = (
        divergence_for_cost(scenario.rho, omega, c, cfg, cache).value
        + divergence_for_cost(omega, scenario.tau, c, cfg, cache).value
        - d_rho_tau
    )
    return SurfacePoint(x=x, y=y, gap=gap)


def gap_surface(spec: SurfaceSpec, cfg: SolverConfig = None) -> SurfaceResult:
    """Triangle gap on a square grid of (x, y); inadmissible ω are left empty.

    The grid spans [−extent, extent]² where extent is the radius of the
    scenario's admissible section. Points are ordered x-major.
    """
    cfg = cfg or SolverConfig()
    scenario = build_scenario(spec)
    c = build_cost(scenario.a)
    d_rho_tau = evaluate_item(
        divergence_for_cost, "rho-tau", (scenario.rho, scenario.tau, c, cfg)
    ).value

    axis = np.linspace(-scenario.extent, scenario.extent, spec.grid_resolution)
    items = [
        ((x, y), (scenario, c, cfg, d_rho_tau, float(x), float(y)))
        for x in axis
        for y in axis
    ]
    points = run_work_items(_surface_gap, items, spec.n_cpu, desc=spec.scenario)
    result = SurfaceResult(
        scenario=spec.scenario,
        xs=tuple(float(x) for x in axis),
        ys=tuple(float(y) for y in axis),
        points=tuple(points),
    )
    _logger.info(
        f"{spec.scenario}: {len(result.evaluated)} admissible points, "
        f"min gap {result.min_gap:.6g}"
    )
    return result

