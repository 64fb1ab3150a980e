"""The Wasserstein divergence d_A and the triangle-inequality gap."""

import threading
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from quantumwasserstein.cost import CostOperator, build_cost
from quantumwasserstein.errors import ConcavityViolationError
from quantumwasserstein.states.common import (
    DensityMatrix,
    ObservableSet,
    require_same_dim,
)
from quantumwasserstein.transport.backends.common import SdpBackend
from quantumwasserstein.transport.common import SolverConfig
from quantumwasserstein.transport.solve import self_distance_sq, solve_primal

RADICAND_CLAMP = 1e-6


class DivergenceValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0)
    raw_squared: float
    components: tuple[float, float, float]

    @property
    def cross(self) -> float:
        """D²(ρ, ω)."""
        return self.components[0]


class GapRecord(BaseModel):
    """One evaluation of d(ρ,ω) + d(ω,τ) − d(ρ,τ) with its provenance."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    d_rho_omega: float = Field(ge=0)
    d_omega_tau: float = Field(ge=0)
    d_rho_tau: float = Field(ge=0)
    gap: float
    dim: int
    seed: Optional[int] = None
    sampler_tag: str = "manual"
    index: Optional[int] = None
    point: Optional[tuple[int, ...]] = None

    @classmethod
    def from_divergences(
        cls, d_rho_omega: float, d_omega_tau: float, d_rho_tau: float, **provenance
    ) -> "GapRecord":
        return cls(
            d_rho_omega=d_rho_omega,
            d_omega_tau=d_omega_tau,
            d_rho_tau=d_rho_tau,
            gap=d_rho_omega + d_omega_tau - d_rho_tau,
            **provenance,
        )


class SelfDistanceCache:
    """Read-through cache of D²(ρ,ρ) keyed by state and cost content hashes.

    Safe for concurrent use from threads of one process. Process pools give
    every worker its own instance.
    """

    def __init__(self):
        self._values: dict[tuple[str, str], float] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(
        self, rho: DensityMatrix, c: CostOperator, compute: Callable[[], float]
    ) -> float:
        key = rho.fingerprint, c.fingerprint
        with self._lock:
            if key in self._values:
                self.hits += 1
                return self._values[key]
        value = compute()
        with self._lock:
            self.misses += 1
            self._values.setdefault(key, value)
        return value

    def __len__(self) -> int:
        return len(self._values)


def self_distance(
    rho: DensityMatrix,
    c: CostOperator,
    cfg: SolverConfig = None,
    backend: SdpBackend = None,
) -> float:
    """D²(ρ,ρ): closed form for transposed costs, the SDP otherwise."""
    if c.transposed:
        return self_distance_sq(rho, c.source)
    return solve_primal(rho, rho, c, cfg, backend).squared_distance


def divergence_for_cost(
    rho: DensityMatrix,
    omega: DensityMatrix,
    c: CostOperator,
    cfg: SolverConfig = None,
    cache: SelfDistanceCache = None,
    backend: SdpBackend = None,
) -> DivergenceValue:
    require_same_dim(rho, omega, c.source)
    if rho == omega:
        # d(ρ,ρ) vanishes identically; skip the SDP and its rounding noise.
        own = self_distance(rho, c, cfg, backend) if cache is None else cache.get(
            rho, c, lambda: self_distance(rho, c, cfg, backend)
        )
        return DivergenceValue(value=0.0, raw_squared=0.0, components=(own, own, own))
    cross = solve_primal(rho, omega, c, cfg, backend).squared_distance
    if cache is None:
        self_rho = self_distance(rho, c, cfg, backend)
        self_omega = self_distance(omega, c, cfg, backend)
    else:
        self_rho = cache.get(rho, c, lambda: self_distance(rho, c, cfg, backend))
        self_omega = cache.get(
            omega, c, lambda: self_distance(omega, c, cfg, backend)
        )
    raw = cross - 0.5 * (self_rho + self_omega)
    if raw < -RADICAND_CLAMP:
        raise ConcavityViolationError(raw)
    return DivergenceValue(
        value=float(np.sqrt(max(raw, 0.0))),
        raw_squared=raw,
        components=(cross, self_rho, self_omega),
    )


def divergence(
    rho: DensityMatrix,
    omega: DensityMatrix,
    a: ObservableSet,
    cfg: SolverConfig = None,
    use_transpose: bool = True,
    cache: SelfDistanceCache = None,
    backend: SdpBackend = None,
) -> DivergenceValue:
    """d_A(ρ,ω) = √(D²(ρ,ω) − ½(D²(ρ,ρ) + D²(ω,ω))).

    Args:
        rho: first state.
        omega: second state.
        a: observables generating the cost.
        cfg: solver configuration.
        use_transpose: cost convention, see build_cost.
        cache: optional self-distance cache shared across calls.
        backend: explicit SDP backend.

    Raises:
        ConcavityViolationError: the radicand is below −1e-6, which only
            happens when the SDP values are inaccurate.
    """
    c = build_cost(a, use_transpose)
    return divergence_for_cost(rho, omega, c, cfg, cache, backend)


def triangle_gap_for_cost(
    rho: DensityMatrix,
    omega: DensityMatrix,
    tau: DensityMatrix,
    c: CostOperator,
    cfg: SolverConfig = None,
    cache: SelfDistanceCache = None,
    backend: SdpBackend = None,
    **provenance,
) -> GapRecord:
    require_same_dim(rho, omega, tau, c.source)
    cache = cache if cache is not None else SelfDistanceCache()
    return GapRecord.from_divergences(
        divergence_for_cost(rho, omega, c, cfg, cache, backend).value,
        divergence_for_cost(omega, tau, c, cfg, cache, backend).value,
        divergence_for_cost(rho, tau, c, cfg, cache, backend).value,
        dim=c.dim,
        **provenance,
    )


def triangle_gap(
    rho: DensityMatrix,
    omega: DensityMatrix,
    tau: DensityMatrix,
    a: ObservableSet,
    cfg: SolverConfig = None,
    use_transpose: bool = True,
    cache: SelfDistanceCache = None,
    backend: SdpBackend = None,
    **provenance,
) -> GapRecord:
    """Evaluate d(ρ,ω) + d(ω,τ) − d(ρ,τ). No sign is asserted.

    Extra keyword arguments (seed, sampler_tag, index, point) are stored on the
    record as provenance.
    """
    c = build_cost(a, use_transpose)
    return triangle_gap_for_cost(
        rho, omega, tau, c, cfg, cache, backend, **provenance
    )
