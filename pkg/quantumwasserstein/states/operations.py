"""Dense linear algebra on Hermitian matrices."""

from functools import lru_cache
from typing import Literal, Sequence

import numpy as np
import scipy.linalg

from quantumwasserstein.errors import DimensionMismatchError, NotPsdError
from quantumwasserstein.states.common import (
    EIGENVALUE_CLAMP,
    HermitianMatrix,
    require_same_dim,
)

PartialTraceKeep = Literal["first", "second"]


def kron(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """Kronecker product, index (i·d_b + p, j·d_b + q) ↦ a[i][j]·b[p][q]."""
    return HermitianMatrix(entries=np.kron(a.entries, b.entries))


def partial_trace_array(
    m: np.ndarray, keep: PartialTraceKeep, dims: tuple[int, int]
) -> np.ndarray:
    d1, d2 = dims
    if m.shape != (d1 * d2, d1 * d2):
        raise DimensionMismatchError(
            f"Cannot take a ({d1}, {d2}) partial trace of a {m.shape} matrix"
        )
    blocks = m.reshape(d1, d2, d1, d2)
    if keep == "first":
        return np.einsum("ipjp->ij", blocks)
    elif keep == "second":
        return np.einsum("ipiq->pq", blocks)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def partial_trace(
    m: HermitianMatrix, keep: PartialTraceKeep, dims: tuple[int, int]
) -> HermitianMatrix:
    """Trace out one tensor factor of a matrix on C^d1 ⊗ C^d2.

    Args:
        m: matrix of dimension d1·d2.
        keep: "first" traces over the second factor (result d1×d1), "second"
            traces over the first factor (result d2×d2).
        dims: the factor dimensions (d1, d2).
    """
    return HermitianMatrix(entries=partial_trace_array(m.entries, keep, dims))


def eigh(m: HermitianMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvectors (LAPACK heevr)."""
    return scipy.linalg.eigh(m.entries, driver="evr")


def psd_sqrt_array(m: np.ndarray) -> np.ndarray:
    values, vectors = scipy.linalg.eigh(m, driver="evr")
    if values[0] < -EIGENVALUE_CLAMP:
        raise NotPsdError(f"Matrix has eigenvalue {values[0]:.3e} below zero")
    roots = np.sqrt(np.clip(values, 0.0, None))
    return (vectors * roots) @ vectors.conj().T


def sqrt_psd(m: HermitianMatrix) -> HermitianMatrix:
    """Unique positive square root via the spectral decomposition.

    Eigenvalues in [−1e-10, 0) are clamped to zero; anything lower raises
    NotPsdError.
    """
    return HermitianMatrix(entries=psd_sqrt_array(m.entries))


def hs_inner(a: HermitianMatrix, b: HermitianMatrix) -> complex:
    """Hilbert–Schmidt inner product tr(a† b)."""
    require_same_dim(a, b)
    return complex(np.vdot(a.entries, b.entries))


@lru_cache(maxsize=None)
def hermitian_basis(dim: int) -> tuple[HermitianMatrix, ...]:
    """Orthonormal Hermitian basis of dim×dim matrices.

    Order: diagonal units E_kk, then (E_km + E_mk)/√2 for k < m, then
    i(E_mk − E_km)/√2 for k < m.
    """
    if dim < 1:
        raise ValueError("dim must be positive")
    basis = []
    for k in range(dim):
        e = np.zeros((dim, dim), dtype=np.complex128)
        e[k, k] = 1.0
        basis.append(e)
    pairs = [(k, m) for k in range(dim) for m in range(k + 1, dim)]
    for k, m in pairs:
        e = np.zeros((dim, dim), dtype=np.complex128)
        e[k, m] = e[m, k] = np.sqrt(0.5)
        basis.append(e)
    for k, m in pairs:
        e = np.zeros((dim, dim), dtype=np.complex128)
        e[k, m] = -1j * np.sqrt(0.5)
        e[m, k] = 1j * np.sqrt(0.5)
        basis.append(e)
    return tuple(HermitianMatrix(entries=e) for e in basis)


_PAULI = (
    np.array([[1, 0], [0, 1]], dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def pauli_matrices() -> tuple[HermitianMatrix, ...]:
    """(σ_0, σ_1, σ_2, σ_3) with σ_0 the identity."""
    return tuple(HermitianMatrix(entries=p) for p in _PAULI)


@lru_cache(maxsize=None)
def pauli_basis(dim: int, normalized: bool = False) -> tuple[HermitianMatrix, ...]:
    """Tensor products of Pauli matrices spanning dim×dim Hermitian matrices.

    Level n is built as kron(level n−1 element, σ_k) with the outer loop over
    the previous level, so index j·4 + k holds P_j ⊗ σ_k.
    """
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"Pauli basis needs a power of two, got {dim}")
    level = list(_PAULI)
    size = 2
    while size < dim:
        level = [np.kron(p, s) for p in level for s in _PAULI]
        size *= 2
    scale = 1 / np.sqrt(dim) if normalized else 1.0
    return tuple(HermitianMatrix(entries=scale * p) for p in level)


def expand(m: HermitianMatrix, basis: Sequence[HermitianMatrix]) -> np.ndarray:
    """Real coordinates of m over an HS-orthogonal Hermitian basis."""
    return np.array(
        [hs_inner(b, m).real / hs_inner(b, b).real for b in basis], dtype=float
    )


def reconstruct(
    coefficients: Sequence[float], basis: Sequence[HermitianMatrix]
) -> HermitianMatrix:
    if len(coefficients) != len(basis):
        raise DimensionMismatchError(
            f"{len(coefficients)} coefficients for a basis of {len(basis)}"
        )
    return HermitianMatrix(
        entries=sum(c * b.entries for c, b in zip(coefficients, basis))
    )
