import logging

import numpy as np

from quantumwasserstein.cost import CostOperator
from quantumwasserstein.errors import NeitherPureError, SolverFailureError
from quantumwasserstein.states.common import (
    DensityMatrix,
    HermitianMatrix,
    ObservableSet,
    require_same_dim,
)
from quantumwasserstein.states.operations import psd_sqrt_array
from quantumwasserstein.transport.backends.common import (
    SdpBackend,
    dual_constraint_operator,
    get_backend,
)
from quantumwasserstein.transport.common import (
    Coupling,
    SdpSolution,
    SolverConfig,
    TransportResult,
)

_logger = logging.getLogger("quantumwasserstein.transport")

VALUE_CLAMP = 1e-9
PURITY_THRESHOLD = 1 - 1e-9
DUAL_FEASIBILITY_TOL = 1e-9
CERTIFICATE_MARGIN = 1e-6


def _clamp(value: float, what: str) -> float:
    if value >= 0:
        return value
    if value >= -VALUE_CLAMP:
        return 0.0
    raise SolverFailureError(f"{what} {value:.3e} is negative beyond tolerance")


def _swap_factors(m: np.ndarray, d: int) -> np.ndarray:
    return m.reshape(d, d, d, d).transpose(1, 0, 3, 2).reshape(d * d, d * d)


def _pure_first_factor_pair(
    cost: np.ndarray, state: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Pair (F, S) with cost − F⊗I − I⊗S ⪰ 0 around a pure first marginal.

    With ψ the top eigenvector of ``state``, S is the cost compressed to
    ψ⊗C^d minus ε and F is −L on the complement of ψ. Against any coupling
    |ψ⟩⟨ψ|⊗σ the pair falls short of the coupling cost by exactly ε.

    The supremum is not attained once the cost links ψ⊗C^d to its complement,
    so ε is CERTIFICATE_MARGIN times the norm of that link and L is the lift
    that keeps the Schur complement positive. Without a link both vanish.
    """
    d = state.shape[0]
    identity = np.eye(d, dtype=np.complex128)
    _, vectors = np.linalg.eigh(state)
    frame = vectors[:, ::-1]
    psi = frame[:, 0]

    compressed = np.einsum("i,ikjl,j->kl", psi.conj(), cost.reshape(d, d, d, d), psi)
    rotation = np.kron(frame, identity)
    slack = rotation.conj().T @ (cost - np.kron(identity, compressed)) @ rotation

    link = float(np.linalg.norm(slack[:d, d:], 2))
    floor = max(0.0, -float(np.linalg.eigvalsh(slack[d:, d:])[0]))
    eps = CERTIFICATE_MARGIN * link
    lift = floor + (2 * link**2 / eps if link > 0 else 0.0)

    complement = identity - np.outer(psi, psi.conj())
    return -lift * complement, compressed - eps * identity


def _pure_marginal_solution(
    rho: DensityMatrix, omega: DensityMatrix, c: CostOperator
) -> SdpSolution | None:
    """Closed form when ω or t(ρ) is pure, so ω⊗t(ρ) is the only coupling.

    Interior-point solvers cannot handle these instances: the feasible set is
    a single point without interior.
    """
    omega_pure = omega.is_pure(PURITY_THRESHOLD)
    if not (omega_pure or rho.is_pure(PURITY_THRESHOLD)):
        return None
    d = c.dim
    second = c.dual_side(rho.entries)
    coupling = np.kron(omega.entries, second)
    if omega_pure:
        y, dual_x = _pure_first_factor_pair(c.entries, omega.entries)
    else:
        dual_x, y = _pure_first_factor_pair(_swap_factors(c.entries, d), second)
    x = c.dual_side(dual_x)
    return SdpSolution(
        status="optimal",
        primal_value=coupling_cost(coupling, c),
        dual_value=float(
            np.vdot(x, rho.entries).real + np.vdot(y, omega.entries).real
        ),
        coupling=coupling,
        x=x,
        y=y,
    )


def _run(
    rho: DensityMatrix,
    omega: DensityMatrix,
    c: CostOperator,
    cfg: SolverConfig,
    backend: SdpBackend = None,
) -> SdpSolution:
    require_same_dim(rho, omega, c.source)
    closed = _pure_marginal_solution(rho, omega, c)
    if closed is not None:
        _logger.debug("Pure marginal; using the tensor coupling")
        return closed
    backend = backend or get_backend(cfg.backend)
    solution = backend.solve(rho, omega, c, cfg)
    gap = solution.duality_gap

    if solution.status == "optimal":
        return solution
    elif solution.status == "infeasible-detected":
        raise SolverFailureError(
            "Solver reported an infeasible transport problem",
            status=solution.status,
            iterations=solution.iterations,
        )
    elif np.isfinite(gap) and abs(gap) <= cfg.stall_gap_tol:
        _logger.warning(
            f"SDP stopped early ({solution.status}, {solution.iterations} it) "
            f"with duality gap {gap:.2e}; accepting as stalled"
        )
        return solution.model_copy(update={"status": "stalled"})
    raise SolverFailureError(
        f"SDP did not converge: {solution.status} after {solution.iterations} "
        f"iterations with duality gap {gap:.2e}",
        status=solution.status,
        iterations=solution.iterations,
    )


def solve_primal(
    rho: DensityMatrix,
    omega: DensityMatrix,
    c: CostOperator,
    cfg: SolverConfig = None,
    backend: SdpBackend = None,
) -> TransportResult:
    """Minimal transport cost tr(ΠC) over couplings of ω and t(ρ).

    When either marginal is pure (largest eigenvalue at least 1 − 1e-9) the
    tensor coupling ω⊗t(ρ) is returned without calling the backend.

    Args:
        rho: source state.
        omega: target state.
        c: cost operator; its transpose flag fixes the second marginal.
        cfg: solver tolerances and backend (defaults to SolverConfig()).
        backend: explicit backend instance, overriding ``cfg.backend``.

    Returns:
        The squared distance with the optimal coupling.

    Raises:
        SolverFailureError: the backend did not converge or stalled too far
            from optimality.
        DimensionMismatchError: the inputs live on different spaces.
    """
    cfg = cfg or SolverConfig()
    solution = _run(rho, omega, c, cfg, backend)
    return TransportResult(
        squared_distance=_clamp(solution.primal_value, "Transport cost"),
        coupling=Coupling.from_solver(solution.coupling),
        duality_gap=solution.duality_gap,
        iterations=solution.iterations,
        status=solution.status,
    )


def solve_dual(
    rho: DensityMatrix,
    omega: DensityMatrix,
    c: CostOperator,
    cfg: SolverConfig = None,
    backend: SdpBackend = None,
) -> TransportResult:
    """Best certificate value tr(Xρ) + tr(Yω) with C − Y⊗I − I⊗t(X) ⪰ 0.

    Same arguments and errors as solve_primal; the result carries the
    certificate pair (X, Y) instead of a coupling. Solver iterates may violate
    the constraint by up to the feasibility tolerance, so Y is lowered by the
    violation; with tr ω = 1 this costs the objective exactly that amount.
    """
    cfg = cfg or SolverConfig()
    solution = _run(rho, omega, c, cfg, backend)
    operator = c.entries - dual_constraint_operator(solution.x, solution.y, c)
    shift = min(0.0, float(np.linalg.eigvalsh(operator)[0]))
    if shift < 0:
        _logger.debug(f"Lowering Y by {-shift:.2e} to restore dual feasibility")
    value = solution.dual_value + shift
    return TransportResult(
        squared_distance=_clamp(value, "Dual value"),
        certificates=(
            HermitianMatrix(entries=solution.x),
            HermitianMatrix(entries=solution.y + shift * np.eye(c.dim)),
        ),
        duality_gap=solution.primal_value - value,
        iterations=solution.iterations,
        status=solution.status,
    )


def coupling_cost(
    pi: Coupling | HermitianMatrix | np.ndarray, c: CostOperator
) -> float:
    entries = pi if isinstance(pi, np.ndarray) else pi.entries
    return float(np.vdot(c.entries, entries).real)


def tensor_coupling_cost(
    rho: DensityMatrix, omega: DensityMatrix, c: CostOperator
) -> float:
    """Cost of the trivial coupling ω⊗t(ρ); an upper bound on D²."""
    require_same_dim(rho, omega, c.source)
    return coupling_cost(np.kron(omega.entries, c.dual_side(rho.entries)), c)


def dual_value(
    rho: DensityMatrix,
    omega: DensityMatrix,
    c: CostOperator,
    x: HermitianMatrix,
    y: HermitianMatrix,
) -> tuple[float, float]:
    """Objective tr(Xρ) + tr(Yω) of a candidate pair, and its slack.

    Returns:
        The objective value and the minimum eigenvalue of C − Y⊗I − I⊗t(X).
        The pair is feasible when the slack is at least −1e-9.
    """
    require_same_dim(rho, omega, x, y, c.source)
    value = np.vdot(x.entries, rho.entries).real
    value += np.vdot(y.entries, omega.entries).real
    slack = c.entries - dual_constraint_operator(x.entries, y.entries, c)
    return float(value), float(np.linalg.eigvalsh(slack)[0])


def is_dual_feasible(slack: float) -> bool:
    return slack >= -DUAL_FEASIBILITY_TOL


def _tensor_cost(rho: np.ndarray, omega: np.ndarray, a: ObservableSet) -> float:
    total = 0.0
    for obs in a.arrays:
        square = obs @ obs
        total += (
            np.trace(square @ omega).real
            + np.trace(square @ rho).real
            - 2 * np.trace(omega @ obs).real * np.trace(rho @ obs).real
        )
    return float(total)


def pure_state_distance_sq(
    rho: DensityMatrix, omega: DensityMatrix, a: ObservableSet
) -> float:
    """Closed-form D² when one state is pure, so ω⊗ρᵀ is the only coupling.

    Raises:
        NeitherPureError: both states have largest eigenvalue below 1 − 1e-9.
    """
    require_same_dim(rho, omega, a)
    if not (rho.is_pure(PURITY_THRESHOLD) or omega.is_pure(PURITY_THRESHOLD)):
        raise NeitherPureError(
            "Closed form needs a pure state; largest eigenvalues are "
            f"{rho.purity_eigenvalue:.12g} and {omega.purity_eigenvalue:.12g}"
        )
    return max(_tensor_cost(rho.entries, omega.entries, a), 0.0)


def self_distance_sq(rho: DensityMatrix, a: ObservableSet) -> float:
    """D²(ρ, ρ) realized by the canonical purification.

    Σ_j tr(2A_jρA_j − 2√ρA_j√ρA_j), evaluated as the sum of squared commutator
    norms Σ_j ‖A_j√ρ − √ρA_j‖²_HS so rounding cannot make it negative.
    Only valid for the transposed cost convention.
    """
    require_same_dim(rho, a)
    root = psd_sqrt_array(rho.entries)
    total = 0.0
    for obs in a.arrays:
        total += np.linalg.norm(obs @ root - root @ obs, "fro") ** 2
    return float(total)
