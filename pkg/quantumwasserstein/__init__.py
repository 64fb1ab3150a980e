from quantumwasserstein.bounds import hellinger_lower_bound
from quantumwasserstein.complexity import (
    ChannelSpec,
    apply_channel,
    subadditivity_report,
    wasserstein_complexity,
)
from quantumwasserstein.cost import CostOperator, build_cost
from quantumwasserstein.divergence import divergence, triangle_gap
from quantumwasserstein.experiments import (
    LatticeSpec,
    SurfaceSpec,
    SweepSpec,
    gap_surface,
    lattice_scan,
    min_gap_sweep,
)
from quantumwasserstein.qubit import BlochVector, bloch_lower_bound
from quantumwasserstein.states import DensityMatrix, HermitianMatrix, ObservableSet
from quantumwasserstein.transport import (
    SolverConfig,
    pure_state_distance_sq,
    self_distance_sq,
    solve_dual,
    solve_primal,
)

__all__ = [
    "HermitianMatrix",
    "DensityMatrix",
    "ObservableSet",
    "CostOperator",
    "build_cost",
    "SolverConfig",
    "solve_primal",
    "solve_dual",
    "pure_state_distance_sq",
    "self_distance_sq",
    "divergence",
    "triangle_gap",
    "BlochVector",
    "bloch_lower_bound",
    "hellinger_lower_bound",
    "LatticeSpec",
    "SweepSpec",
    "SurfaceSpec",
    "lattice_scan",
    "min_gap_sweep",
    "gap_surface",
    "ChannelSpec",
    "apply_channel",
    "wasserstein_complexity",
    "subadditivity_report",
]

try:
    from ._version import version as __version__
except ImportError:
    __version__ = "unknown"
