"""Quadratic cost operators C = Σ_j (A_j⊗I − I⊗B_j)² on the doubled space.

The first tensor factor is the target system (the ω side), the second the
source dual (the ρᵀ side). B_j is A_jᵀ under the transposed convention and A_j
otherwise.
"""

from functools import cached_property
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from quantumwasserstein.errors import NotPsdError
from quantumwasserstein.states.common import HermitianMatrix, ObservableSet
from quantumwasserstein.states.operations import pauli_basis
from quantumwasserstein.states.sampling import RngLike, random_observable
from quantumwasserstein.states.serialization import load_observables

COST_PSD_TOL = 1e-9


class CostOperator(BaseModel):
    model_config = ConfigDict(
        frozen=True, arbitrary_types_allowed=True, ignored_types=(cached_property,)
    )

    source: ObservableSet
    transposed: bool = True
    matrix: HermitianMatrix

    @model_validator(mode="after")
    def _check(self) -> "CostOperator":
        d = self.source.dim
        if self.matrix.dim != d * d:
            raise ValueError(
                f"Cost matrix has dim {self.matrix.dim}, expected {d * d}"
            )
        scale = max(1.0, float(np.max(np.abs(self.matrix.entries))))
        minimum = float(self.matrix.eigenvalues[0])
        if minimum < -COST_PSD_TOL * scale:
            raise NotPsdError(f"Cost operator has eigenvalue {minimum:.3e}")
        return self

    @property
    def dim(self) -> int:
        """Single-system dimension d; the matrix acts on C^d ⊗ C^d."""
        return self.source.dim

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries

    @cached_property
    def fingerprint(self) -> str:
        return f"{self.matrix.fingerprint}:{int(self.transposed)}"

    def dual_side(self, m: np.ndarray) -> np.ndarray:
        """The map t applied on the second factor: transpose or identity."""
        return m.T if self.transposed else m

    def __repr__(self) -> str:
        return (
            f"CostOperator(dim={self.dim}, k={len(self.source)}, "
            f"transposed={self.transposed})"
        )


def build_cost(a: ObservableSet, use_transpose: bool = True) -> CostOperator:
    """Σ_j (A_j⊗I − I⊗B_j)² with B_j = A_jᵀ when use_transpose, else A_j.

    Args:
        a: the observables generating the cost.
        use_transpose: whether the second factor carries the computational-basis
            transpose of each observable.

    Returns:
        The cost operator on the doubled space.
    """
    identity = np.eye(a.dim, dtype=np.complex128)
    total = np.zeros((a.dim**2, a.dim**2), dtype=np.complex128)
    for obs in a.arrays:
        other = obs.T if use_transpose else obs
        term = np.kron(obs, identity) - np.kron(identity, other)
        total += term @ term
    total = 0.5 * (total + total.conj().T)
    return CostOperator(
        source=a, transposed=use_transpose, matrix=HermitianMatrix(entries=total)
    )


def pauli_product_set(num_qubits: int) -> ObservableSet:
    """All 4^n − 1 Pauli tensor products except the identity, lexicographic."""
    if num_qubits < 1:
        raise ValueError("num_qubits must be at least 1")
    return ObservableSet(observables=pauli_basis(2**num_qubits)[1:])


def symmetric_cost() -> CostOperator:
    return build_cost(pauli_product_set(1), use_transpose=True)


def random_observable_set(dim: int, k: int, rng: RngLike) -> ObservableSet:
    return ObservableSet(observables=[random_observable(dim, rng) for _ in range(k)])


def resolve_observables(
    selector: str, dim: int = None, rng: RngLike = None
) -> ObservableSet:
    """Observable set from a keyword selector.

    Accepted forms are ``symmetric``, ``pauli-products:<n>``, ``random:<k>`` and
    ``file:<path>``. ``random`` needs ``dim`` and ``rng``.
    """
    kind, _, arg = selector.partition(":")
    if kind == "symmetric":
        return pauli_product_set(1)
    elif kind == "pauli-products":
        return pauli_product_set(int(arg))
    elif kind == "random":
        if dim is None or rng is None:
            raise ValueError("A random cost needs a dimension and a seed")
        return random_observable_set(dim, int(arg), rng)
    elif kind == "file":
        return load_observables(Path(arg))
    raise ValueError(f"Unknown cost selector {selector!r}")
