import numpy as np

from quantumwasserstein.cost import CostOperator
from quantumwasserstein.states.common import DensityMatrix
from quantumwasserstein.transport.backends.common import SdpBackend
from quantumwasserstein.transport.common import SdpSolution, SolverConfig


class MockBackend(SdpBackend):
    """Returns a canned solution; the coupling defaults to ω⊗t(ρ)."""

    def __init__(
        self,
        status: str = "optimal",
        primal_value: float = 1.0,
        dual_value: float = 1.0,
        iterations: int = 5,
    ):
        self.status = status
        self.primal_value = primal_value
        self.dual_value = dual_value
        self.iterations = iterations
        self.calls = 0

    def solve(
        self,
        rho: DensityMatrix,
        omega: DensityMatrix,
        c: CostOperator,
        cfg: SolverConfig,
    ) -> SdpSolution:
        self.calls += 1
        zero = np.zeros((c.dim, c.dim), dtype=np.complex128)
        return SdpSolution(
            status=self.status,
            primal_value=self.primal_value,
            dual_value=self.dual_value,
            coupling=np.kron(omega.entries, c.dual_side(rho.entries)),
            x=zero,
            y=zero,
            iterations=self.iterations,
        )
