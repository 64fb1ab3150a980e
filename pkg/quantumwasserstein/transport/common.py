from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from quantumwasserstein.states.common import DensityMatrix, HermitianMatrix

SolverStatus = Literal["optimal", "stalled", "max-iter", "infeasible-detected"]


class SolverConfig(BaseModel):
    """Tolerances and backend choice for one transport solve.

    A solve is optimal when the backend certifies both the duality gap and the
    marginal residuals. A backend that stops early is still accepted, with
    status ``stalled``, when its gap is within ``stall_gap_tol``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    gap_tol: float = Field(default=1e-8, gt=0)
    feas_tol: float = Field(default=1e-8, gt=0)
    max_iter: int = Field(default=200, ge=1)
    backend: Literal["cvxopt", "cvxpy"] = "cvxopt"
    stall_gap_tol: float = Field(default=1e-6, gt=0)
    refinement: int = Field(default=1, ge=0)


class Coupling(BaseModel):
    """A state on C^d ⊗ C^d with marginals ω (first) and t(ρ) (second)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: DensityMatrix

    @classmethod
    def from_solver(cls, pi: np.ndarray) -> "Coupling":
        """Project a raw solver iterate onto the state space.

        Interior-point iterates can carry eigenvalues a few ulps below zero and a
        trace off by the feasibility tolerance; both are removed here.
        """
        pi = 0.5 * (pi + pi.conj().T)
        values, vectors = np.linalg.eigh(pi)
        values = np.clip(values, 0.0, None)
        pi = (vectors * values) @ vectors.conj().T
        return cls(matrix=DensityMatrix(entries=pi / np.trace(pi).real))

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries


class SdpSolution(BaseModel):
    """What a backend hands back before status policy is applied."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: SolverStatus
    primal_value: float
    dual_value: float
    coupling: Optional[np.ndarray] = None
    x: Optional[np.ndarray] = None
    y: Optional[np.ndarray] = None
    iterations: int = 0

    @property
    def duality_gap(self) -> float:
        return self.primal_value - self.dual_value


class TransportResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    squared_distance: float = Field(ge=0)
    coupling: Optional[Coupling] = None
    certificates: Optional[tuple[HermitianMatrix, HermitianMatrix]] = None
    duality_gap: float
    iterations: int
    status: SolverStatus

    @property
    def distance(self) -> float:
        return float(np.sqrt(self.squared_distance))

    @property
    def x(self) -> Optional[HermitianMatrix]:
        return None if self.certificates is None else self.certificates[0]

    @property
    def y(self) -> Optional[HermitianMatrix]:
        return None if self.certificates is None else self.certificates[1]
