from quantumwasserstein.transport.backends import SdpBackend, get_backend
from quantumwasserstein.transport.common import (
    Coupling,
    SolverConfig,
    TransportResult,
)
from quantumwasserstein.transport.solve import (
    coupling_cost,
    dual_value,
    is_dual_feasible,
    pure_state_distance_sq,
    self_distance_sq,
    solve_dual,
    solve_primal,
    tensor_coupling_cost,
)

__all__ = [
    "Coupling",
    "SolverConfig",
    "TransportResult",
    "SdpBackend",
    "get_backend",
    "solve_primal",
    "solve_dual",
    "pure_state_distance_sq",
    "self_distance_sq",
    "tensor_coupling_cost",
    "coupling_cost",
    "dual_value",
    "is_dual_feasible",
]
