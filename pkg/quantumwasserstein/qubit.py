"""Closed forms for qubits under the symmetric cost built from σ_1, σ_2, σ_3."""

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from quantumwasserstein.cost import symmetric_cost
from quantumwasserstein.errors import OutsideBlochBallError, WrongDimensionError
from quantumwasserstein.states.common import DensityMatrix, HermitianMatrix
from quantumwasserstein.states.operations import pauli_matrices
from quantumwasserstein.states.sampling import RngStream, random_bloch_vector

BALL_TOL = 1e-10


class BlochVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    b: tuple[float, float, float]

    @field_validator("b")
    @classmethod
    def _inside_ball(cls, value: tuple[float, float, float]) -> tuple:
        norm = float(np.linalg.norm(value))
        if norm > 1 + BALL_TOL:
            raise OutsideBlochBallError(f"Bloch vector has norm {norm:.12g} > 1")
        return value

    @classmethod
    def of(cls, *components: float) -> "BlochVector":
        if len(components) == 1:
            components = tuple(components[0])
        return cls(b=tuple(float(x) for x in components))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.b)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.b))


def _require_qubit(*states: DensityMatrix) -> None:
    for state in states:
        if state.dim != 2:
            raise WrongDimensionError(f"Expected a qubit state, got dim {state.dim}")


def to_bloch(rho: DensityMatrix) -> BlochVector:
    _require_qubit(rho)
    _, *sigmas = pauli_matrices()
    return BlochVector(
        b=tuple(float(np.trace(rho.entries @ s.entries).real) for s in sigmas)
    )


def from_bloch(b: BlochVector) -> DensityMatrix:
    """½(I + b·σ)."""
    identity, *sigmas = pauli_matrices()
    entries = identity.entries + sum(x * s.entries for x, s in zip(b.b, sigmas))
    return DensityMatrix(entries=0.5 * entries)


def _as_array(b: BlochVector | DensityMatrix) -> np.ndarray:
    if isinstance(b, DensityMatrix):
        b = to_bloch(b)
    return b.array


def bloch_lower_bound(rho: DensityMatrix, omega: DensityMatrix) -> float:
    """4|b_ρ − b_ω|₂, a lower bound on D_s²(ρ, ω)."""
    _require_qubit(rho, omega)
    return float(4 * np.linalg.norm(_as_array(rho) - _as_array(omega)))


def bloch_dual_certificate(
    rho: DensityMatrix, omega: DensityMatrix
) -> tuple[HermitianMatrix, HermitianMatrix]:
    """Dual pair (X, Y) whose objective equals bloch_lower_bound.

    With W = 4 (b_ω − b_ρ)/|b_ω − b_ρ| · σ the pair is X = −W, Y = W,
    feasible because C_s ⪰ W⊗I − I⊗Wᵀ whenever −4I ⪯ W ⪯ 4I.
    """
    _require_qubit(rho, omega)
    delta = _as_array(omega) - _as_array(rho)
    norm = np.linalg.norm(delta)
    if norm == 0:
        zero = HermitianMatrix(entries=np.zeros((2, 2)))
        return zero, zero
    _, *sigmas = pauli_matrices()
    w = 4 * sum(x * s.entries for x, s in zip(delta / norm, sigmas))
    return HermitianMatrix(entries=-w), HermitianMatrix(entries=w)


def _self_term(norm: float | np.ndarray) -> float | np.ndarray:
    """1 − √(1 − |b|²), a quarter of the symmetric self distance."""
    return 1 - np.sqrt(np.clip(1 - norm**2, 0.0, None))


def symmetric_self_distance_sq(rho: DensityMatrix) -> float:
    """4(1 − √(1 − |b_ρ|²))."""
    _require_qubit(rho)
    return float(4 * _self_term(np.linalg.norm(_as_array(rho))))


def _bounds(
    r: np.ndarray, w: np.ndarray, t: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized over leading axes; the last axis holds Bloch components."""
    dist_rw = np.linalg.norm(r - w, axis=-1)
    dist_wt = np.linalg.norm(w - t, axis=-1)
    s_r, s_w, s_t = (_self_term(np.linalg.norm(v, axis=-1)) for v in (r, w, t))

    upper = 6 - 2 * np.sum(r * t, axis=-1) - 4 * dist_rw - 4 * dist_wt + 4 * s_w
    # Radicands are nonnegative analytically; clamp rounding noise.
    left = np.clip(4 * dist_rw - 2 * s_r - 2 * s_w, 0.0, None)
    right = np.clip(4 * dist_wt - 2 * s_w - 2 * s_t, 0.0, None)
    lower = 2 * np.sqrt(left) * np.sqrt(right)
    return lower, upper


def sufficient_condition_bounds(
    b_rho: BlochVector, b_omega: BlochVector, b_tau: BlochVector
) -> tuple[float, float]:
    """The two sides of the sufficient condition for the triangle inequality.

    Returns:
        (lower, upper) where lower bounds 2·d_s(ρ,ω)·d_s(ω,τ) from below and
        upper bounds D²(ρ,τ) − D²(ρ,ω) − D²(ω,τ) + D²(ω,ω) from above.
        When upper ≤ lower the triangle inequality for d_s holds for the triplet.
    """
    lower, upper = _bounds(b_rho.array, b_omega.array, b_tau.array)
    return float(lower), float(upper)


def sufficient_condition(
    b_rho: BlochVector, b_omega: BlochVector, b_tau: BlochVector
) -> bool:
    lower, upper = sufficient_condition_bounds(b_rho, b_omega, b_tau)
    return upper <= lower


def sufficient_condition_rate(samples: int = 100_000, seed: int = 0) -> float:
    """Fraction of uniform Bloch-ball triplets satisfying the condition."""
    gen = RngStream(seed=seed).generator()
    points = np.array(
        [[random_bloch_vector(gen) for _ in range(3)] for _ in range(samples)]
    )
    lower, upper = _bounds(points[:, 0], points[:, 1], points[:, 2])
    return float(np.mean(upper <= lower))


def symmetric_cost_invariance_defect(u: np.ndarray) -> float:
    """‖(U⊗Ū) C_s (U⊗Ū)† − C_s‖_F, zero for every unitary U."""
    c = symmetric_cost().entries
    v = np.kron(u, u.conj())
    return float(np.linalg.norm(v @ c @ v.conj().T - c))
