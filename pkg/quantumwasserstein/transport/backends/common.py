from abc import ABC, abstractmethod

import numpy as np

from quantumwasserstein.cost import CostOperator
from quantumwasserstein.states.common import DensityMatrix
from quantumwasserstein.transport.common import SdpSolution, SolverConfig


class SdpBackend(ABC):
    """Solves the transport problem and its dual for one (ρ, ω, C) instance.

    Primal: minimize tr(ΠC) over Π ⪰ 0 with tr_2 Π = ω and tr_1 Π = t(ρ).
    Dual: maximize tr(Xρ) + tr(Yω) subject to C − Y⊗I − I⊗t(X) ⪰ 0.
    Here t is the transpose when the cost is transposed and the identity
    otherwise.
    """

    @abstractmethod
    def solve(
        self,
        rho: DensityMatrix,
        omega: DensityMatrix,
        c: CostOperator,
        cfg: SolverConfig,
    ) -> SdpSolution:
        pass


def dual_constraint_operator(
    x: np.ndarray, y: np.ndarray, c: CostOperator
) -> np.ndarray:
    """Y⊗I + I⊗t(X), the operator the dual keeps below C."""
    identity = np.eye(c.dim, dtype=np.complex128)
    return np.kron(y, identity) + np.kron(identity, c.dual_side(x))


def get_backend(name: str) -> SdpBackend:
    if name == "cvxopt":
        from quantumwasserstein.transport.backends.cvxopt import CvxoptBackend

        return CvxoptBackend()
    elif name == "cvxpy":
        from quantumwasserstein.transport.backends.cvxpy import CvxpyBackend

        return CvxpyBackend()
    raise ValueError(f"Unknown SDP backend {name!r}")
