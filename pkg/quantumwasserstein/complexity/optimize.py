"""Wasserstein complexity C_W(Φ) = max_ρ d_A(ρ, Φ(ρ)) by multi-start Nelder–Mead.

States are parametrized as ρ = LL†/tr(LL†) with L an unconstrained complex
matrix, flattened into 2·dim² real parameters. The search returns the best
divergence found, which is a lower bound on the true maximum.
"""

import logging
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import minimize

from quantumwasserstein.complexity.channels import ChannelSpec, apply_channel
from quantumwasserstein.cost import CostOperator, build_cost
from quantumwasserstein.divergence import SelfDistanceCache, divergence_for_cost
from quantumwasserstein.errors import DimensionMismatchError
from quantumwasserstein.experiments.common import run_work_items
from quantumwasserstein.states.common import DensityMatrix, ObservableSet
from quantumwasserstein.states.sampling import RngStream, complex_gaussian
from quantumwasserstein.transport.common import SolverConfig

_logger = logging.getLogger("quantumwasserstein.complexity")

CONVERGENCE_TOL = 1e-4
SIMPLEX_STEP = 0.1

StartKind = Literal["maximally-mixed", "basis", "wishart"]


class RestartOutcome(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    index: int
    start: StartKind
    initial_value: float
    value: float
    evaluations: int
    state: DensityMatrix


class ComplexityResult(BaseModel):
    """Best divergence between a state and its image found by the search.

    ``value`` is a lower bound on C_W(Φ); ``argmax_state`` reproduces it.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: float = Field(ge=0)
    argmax_state: DensityMatrix
    restarts_used: int
    converged: bool
    restarts: tuple[RestartOutcome, ...] = ()

    @property
    def evaluations(self) -> int:
        return sum(r.evaluations for r in self.restarts)


def _to_parameters(factor: np.ndarray) -> np.ndarray:
    factor = factor / np.linalg.norm(factor)
    return np.concatenate([factor.real.ravel(), factor.imag.ravel()])


def _to_state(params: np.ndarray, dim: int) -> Optional[DensityMatrix]:
    n = dim * dim
    factor = params[:n].reshape(dim, dim) + 1j * params[n:].reshape(dim, dim)
    positive = factor @ factor.conj().T
    trace = np.trace(positive).real
    if trace < 1e-12:
        return None
    return DensityMatrix(entries=positive / trace)


def starting_points(
    dim: int, restarts: int, seed: int = 0
) -> list[tuple[StartKind, np.ndarray]]:
    """The maximally mixed state, then basis states, then Wishart factors.

    Wishart start ``i`` draws from substream ``i`` of ``seed``.
    """
    starts: list[tuple[StartKind, np.ndarray]] = [
        ("maximally-mixed", _to_parameters(np.eye(dim, dtype=np.complex128)))
    ]
    for k in range(dim):
        projector = np.zeros((dim, dim), dtype=np.complex128)
        projector[k, k] = 1.0
        starts.append(("basis", _to_parameters(projector)))
    for index in range(len(starts), restarts):
        gen = RngStream(seed=seed, stream_index=index).generator()
        starts.append(("wishart", _to_parameters(complex_gaussian(gen, (dim, dim)))))
    return starts[:restarts]


def _objective(
    phi: ChannelSpec, c: CostOperator, cfg: SolverConfig, cache: SelfDistanceCache
):
    def negative_divergence(params: np.ndarray) -> float:
        rho = _to_state(params, phi.dim)
        if rho is None:
            return 0.0
        return -divergence_for_cost(rho, apply_channel(phi, rho), c, cfg, cache).value

    return negative_divergence


def _run_restart(
    phi: ChannelSpec,
    c: CostOperator,
    cfg: SolverConfig,
    index: int,
    start: StartKind,
    x0: np.ndarray,
    max_evaluations: int,
    cache: SelfDistanceCache,
) -> RestartOutcome:
    f = _objective(phi, c, cfg, cache)
    initial_value = -f(x0)
    simplex = np.vstack([x0, x0 + SIMPLEX_STEP * np.eye(len(x0))])
    result = minimize(
        f,
        x0,
        method="Nelder-Mead",
        options={
            "initial_simplex": simplex,
            "maxfev": max_evaluations,
            "xatol": 1e-6,
            "fatol": 1e-9,
        },
    )
    best = result.x if -result.fun >= initial_value else x0
    _logger.debug(
        f"restart {index} ({start}): {initial_value:.6g} -> {-result.fun:.6g} "
        f"in {result.nfev} evaluations"
    )
    return RestartOutcome(
        index=index,
        start=start,
        initial_value=initial_value,
        value=max(-result.fun, initial_value),
        evaluations=int(result.nfev) + 1,
        state=_to_state(best, phi.dim),
    )


def wasserstein_complexity(
    phi: ChannelSpec,
    a: ObservableSet,
    restarts: int = 16,
    cfg: SolverConfig = None,
    use_transpose: bool = True,
    seed: int = 0,
    max_evaluations: int = 600,
    n_cpu: int = 1,
) -> ComplexityResult:
    """Approximate max_ρ d_A(ρ, Φ(ρ)) from several independent starts.

    Args:
        phi: the channel.
        a: observables generating the cost.
        restarts: number of Nelder–Mead runs.
        cfg: solver configuration for the inner divergences.
        use_transpose: cost convention, see build_cost.
        seed: seed of the Wishart starting points.
        max_evaluations: divergence evaluations allowed per restart.
        n_cpu: restarts run in parallel processes when above 1.

    Returns:
        The best restart's value and state. ``converged`` is set when the two
        best restarts agree within 1e-4.
    """
    if restarts < 1:
        raise ValueError(f"restarts must be positive, got {restarts}")
    if a.dim != phi.dim:
        raise DimensionMismatchError(
            f"Channel acts on dim {phi.dim}, observables have dim {a.dim}"
        )
    cfg = cfg or SolverConfig()
    c = build_cost(a, use_transpose)
    items = [
        (index, (phi, c, cfg, index, kind, x0, max_evaluations))
        for index, (kind, x0) in enumerate(starting_points(phi.dim, restarts, seed))
    ]
    outcomes = run_work_items(_run_restart, items, n_cpu, desc="Restarts")

    best = max(outcomes, key=lambda o: (o.value, -o.index))
    values = sorted((o.value for o in outcomes), reverse=True)
    converged = len(values) > 1 and values[0] - values[1] <= CONVERGENCE_TOL
    _logger.info(
        f"C_W >= {best.value:.6g} after {len(outcomes)} restarts"
        + ("" if converged else " (best restarts disagree)")
    )
    return ComplexityResult(
        value=best.value,
        argmax_state=best.state,
        restarts_used=len(outcomes),
        converged=converged,
        restarts=tuple(outcomes),
    )
