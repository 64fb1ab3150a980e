from quantumwasserstein.states.common import (
    DensityMatrix,
    HermitianMatrix,
    ObservableSet,
    require_same_dim,
)
from quantumwasserstein.states.operations import (
    expand,
    hermitian_basis,
    hs_inner,
    kron,
    partial_trace,
    pauli_basis,
    pauli_matrices,
    reconstruct,
    sqrt_psd,
)
from quantumwasserstein.states.sampling import (
    RngStream,
    random_bloch_vector,
    random_observable,
    random_state,
    random_unitary,
)

__all__ = [
    "HermitianMatrix",
    "DensityMatrix",
    "ObservableSet",
    "RngStream",
    "require_same_dim",
    "kron",
    "partial_trace",
    "sqrt_psd",
    "hs_inner",
    "hermitian_basis",
    "pauli_matrices",
    "pauli_basis",
    "expand",
    "reconstruct",
    "random_state",
    "random_observable",
    "random_bloch_vector",
    "random_unitary",
]
