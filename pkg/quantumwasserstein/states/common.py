"""Value types for Hermitian matrices, density matrices and observable sets."""

import hashlib
from functools import cached_property
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from quantumwasserstein.errors import (
    DimensionMismatchError,
    InvalidStateError,
    NotHermitianError,
)

HERMITIAN_TOL = 1e-12
EIGENVALUE_CLAMP = 1e-10
TRACE_TOL = 1e-10


def _as_square_complex(value: Any) -> np.ndarray:
    if isinstance(value, HermitianMatrix):
        value = value.entries
    array = np.array(value, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
        raise DimensionMismatchError(
            f"Expected a non-empty square matrix, got shape {array.shape}"
        )
    return array


class HermitianMatrix(BaseModel):
    """Dense complex square matrix that equals its conjugate transpose.

    Hermiticity is checked entrywise against an absolute 1e-12 and then
    enforced exactly, so downstream eigensolvers always see a Hermitian
    input. The stored array is read-only.
    """

    model_config = ConfigDict(
        frozen=True, arbitrary_types_allowed=True, ignored_types=(cached_property,)
    )

    entries: np.ndarray

    @field_validator("entries", mode="before")
    @classmethod
    def _validate_entries(cls, value: Any) -> np.ndarray:
        array = _as_square_complex(value)
        defect = float(np.max(np.abs(array - array.conj().T)))
        if defect > HERMITIAN_TOL:
            raise NotHermitianError(
                f"Matrix deviates from its adjoint by {defect:.3e}"
            )
        array = 0.5 * (array + array.conj().T)
        array.setflags(write=False)
        return array

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    @cached_property
    def fingerprint(self) -> str:
        """Content hash used as a cache key."""
        return hashlib.sha256(self.entries.tobytes()).hexdigest()

    def trace(self) -> float:
        return float(np.real(np.trace(self.entries)))

    def transpose(self) -> "HermitianMatrix":
        return HermitianMatrix(entries=self.entries.T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(
            np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


class DensityMatrix(HermitianMatrix):
    """Positive semidefinite, unit-trace Hermitian matrix."""

    @model_validator(mode="after")
    def _validate_state(self) -> "DensityMatrix":
        trace = np.trace(self.entries)
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"State has trace {trace.real:.12g}, expected 1")
        minimum = float(self.eigenvalues[0])
        if minimum < -EIGENVALUE_CLAMP:
            raise InvalidStateError(
                f"State has negative eigenvalue {minimum:.3e}"
            )
        return self

    @classmethod
    def from_hermitian(cls, matrix: HermitianMatrix) -> "DensityMatrix":
        return cls(entries=matrix.entries)

    def transpose(self) -> "DensityMatrix":
        return DensityMatrix(entries=self.entries.T)

    @property
    def purity_eigenvalue(self) -> float:
        """Largest eigenvalue; 1 exactly for pure states."""
        return float(self.eigenvalues[-1])

    def is_pure(self, threshold: float = 1 - 1e-9) -> bool:
        return self.purity_eigenvalue >= threshold


class ObservableSet(BaseModel):
    """Ordered, non-empty collection of observables on one Hilbert space."""

    model_config = ConfigDict(
        frozen=True, arbitrary_types_allowed=True, ignored_types=(cached_property,)
    )

    observables: tuple[HermitianMatrix, ...]

    @field_validator("observables", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> tuple[HermitianMatrix, ...]:
        if isinstance(value, np.ndarray) and value.ndim == 2:
            value = [value]
        return tuple(
            v if isinstance(v, HermitianMatrix) else HermitianMatrix(entries=v)
            for v in value
        )

    @field_validator("observables")
    @classmethod
    def _uniform_dim(
        cls, value: tuple[HermitianMatrix, ...]
    ) -> tuple[HermitianMatrix, ...]:
        if not value:
            raise ValueError("An observable set needs at least one observable")
        dims = {a.dim for a in value}
        if len(dims) != 1:
            raise DimensionMismatchError(
                f"Observables have mixed dimensions {sorted(dims)}"
            )
        return value

    @classmethod
    def of(cls, *matrices: Any) -> "ObservableSet":
        return cls(observables=matrices)

    @property
    def dim(self) -> int:
        return self.observables[0].dim

    @cached_property
    def arrays(self) -> tuple[np.ndarray, ...]:
        return tuple(a.entries for a in self.observables)

    @cached_property
    def fingerprint(self) -> str:
        digest = hashlib.sha256()
        for a in self.observables:
            digest.update(a.entries.tobytes())
        return digest.hexdigest()

    @cached_property
    def second_moment(self) -> np.ndarray:
        """Σ_j A_j², the operator behind energies and the Hellinger bound."""
        return sum(a @ a for a in self.arrays)

    def __len__(self) -> int:
        return len(self.observables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ObservableSet):
            return NotImplemented
        return self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __repr__(self) -> str:
        return f"ObservableSet(k={len(self)}, dim={self.dim})"


def require_same_dim(*matrices: HermitianMatrix | ObservableSet) -> int:
    dims = {m.dim for m in matrices}
    if len(dims) != 1:
        raise DimensionMismatchError(
            f"Operands must share one dimension, got {sorted(dims)}"
        )
    return dims.pop()
