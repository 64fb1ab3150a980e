"""Quantum channels in Kraus form, their action on states, and channel files."""

from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from quantumwasserstein.errors import (
    DimensionMismatchError,
    NotTracePreservingError,
    WrongDimensionError,
)
from quantumwasserstein.states.common import TRACE_TOL, DensityMatrix
from quantumwasserstein.states.operations import pauli_matrices
from quantumwasserstein.states.sampling import RngLike, random_unitary
from quantumwasserstein.states.serialization import (
    dump_json,
    load_json,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
)

TRACE_PRESERVATION_TOL = 1e-9


class ChannelSpec(BaseModel):
    """Completely positive map ρ ↦ Σ_i K_i ρ K_i†, checked to preserve trace."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kraus: tuple[np.ndarray, ...]

    @field_validator("kraus", mode="before")
    @classmethod
    def _validate_kraus(cls, value: Any) -> tuple[np.ndarray, ...]:
        if isinstance(value, np.ndarray) and value.ndim == 2:
            value = [value]
        operators = [np.array(k, dtype=np.complex128) for k in value]
        if not operators:
            raise DimensionMismatchError("A channel needs at least one Kraus operator")
        dim = operators[0].shape[0]
        for k in operators:
            if k.shape != (dim, dim):
                raise DimensionMismatchError(
                    f"Kraus operators must all be {dim}×{dim}, got {k.shape}"
                )
        completeness = sum(k.conj().T @ k for k in operators)
        defect = float(np.max(np.abs(completeness - np.eye(dim))))
        if defect > TRACE_PRESERVATION_TOL:
            raise NotTracePreservingError(
                f"Σ K†K deviates from the identity by {defect:.3e}"
            )
        for k in operators:
            k.setflags(write=False)
        return tuple(operators)

    @property
    def dim(self) -> int:
        return self.kraus[0].shape[0]

    def __repr__(self) -> str:
        return f"ChannelSpec(dim={self.dim}, kraus={len(self.kraus)})"


def apply_channel(phi: ChannelSpec, rho: DensityMatrix) -> DensityMatrix:
    if phi.dim != rho.dim:
        raise DimensionMismatchError(
            f"Channel acts on dim {phi.dim}, state has dim {rho.dim}"
        )
    image = sum(k @ rho.entries @ k.conj().T for k in phi.kraus)
    trace = np.trace(image).real
    # Kraus sets are only trace preserving to 1e-9; keep the image a state.
    if abs(trace - 1.0) > 0.1 * TRACE_TOL:
        image = image / trace
    return DensityMatrix(entries=image)


def identity_channel(dim: int = 2) -> ChannelSpec:
    return ChannelSpec(kraus=[np.eye(dim)])


def unitary_channel(u: np.ndarray) -> ChannelSpec:
    """ρ ↦ UρU†. Fails unless U is unitary to within the trace tolerance."""
    return ChannelSpec(kraus=[u])


def _check_probability(name: str, p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {p}")


def depolarizing_channel(p: float) -> ChannelSpec:
    """Qubit channel ρ ↦ (1−p)ρ + p·I/2; p = 1 is completely depolarizing."""
    _check_probability("p", p)
    identity, *sigmas = (s.entries for s in pauli_matrices())
    return ChannelSpec(
        kraus=[np.sqrt(1 - 0.75 * p) * identity]
        + [np.sqrt(p / 4) * s for s in sigmas]
    )


def dephasing_channel(p: float) -> ChannelSpec:
    """Qubit phase flip ρ ↦ (1−p)ρ + p·σ_3ρσ_3."""
    _check_probability("p", p)
    sigmas = pauli_matrices()
    return ChannelSpec(
        kraus=[np.sqrt(1 - p) * sigmas[0].entries, np.sqrt(p) * sigmas[3].entries]
    )


def amplitude_damping_channel(gamma: float) -> ChannelSpec:
    _check_probability("gamma", gamma)
    return ChannelSpec(
        kraus=[
            np.array([[1.0, 0.0], [0.0, np.sqrt(1 - gamma)]]),
            np.array([[0.0, np.sqrt(gamma)], [0.0, 0.0]]),
        ]
    )


def random_channel(dim: int, n_kraus: int = 2, rng: RngLike = None) -> ChannelSpec:
    """Kraus blocks of the first dim columns of a Haar unitary on C^(dim·n_kraus).

    Those columns form an isometry V, so Σ K_i†K_i = V†V = I.
    """
    if n_kraus < 1:
        raise ValueError(f"n_kraus must be positive, got {n_kraus}")
    isometry = random_unitary(dim * n_kraus, rng)[:, :dim]
    return ChannelSpec(
        kraus=[isometry[i * dim : (i + 1) * dim] for i in range(n_kraus)]
    )


def compose(phi2: ChannelSpec, phi1: ChannelSpec) -> ChannelSpec:
    """Φ_2∘Φ_1: apply phi1 first."""
    if phi1.dim != phi2.dim:
        raise DimensionMismatchError(
            f"Cannot compose channels on dims {phi2.dim} and {phi1.dim}"
        )
    return ChannelSpec(kraus=[k2 @ k1 for k2 in phi2.kraus for k1 in phi1.kraus])


def tensor(phi1: ChannelSpec, phi2: ChannelSpec) -> ChannelSpec:
    """Φ_1⊗Φ_2 on the product space, phi1 on the first factor."""
    return ChannelSpec(
        kraus=[np.kron(k1, k2) for k1 in phi1.kraus for k2 in phi2.kraus]
    )


def channel_to_json(phi: ChannelSpec) -> dict[str, Any]:
    return {"kraus": [matrix_to_json(k) for k in phi.kraus]}


def channel_from_json(data: dict[str, Any]) -> ChannelSpec:
    if not isinstance(data, dict) or "kraus" not in data:
        raise ValueError('Channel JSON must be an object with a "kraus" list')
    return ChannelSpec(kraus=[matrix_from_json(k) for k in data["kraus"]])


def load_channel(path: str | Path) -> ChannelSpec:
    return channel_from_json(load_json(path))


def dump_channel(phi: ChannelSpec, path: str | Path) -> None:
    dump_json(channel_to_json(phi), path)


def resolve_channel(name: str, dim: int = None) -> ChannelSpec:
    """Build a channel from a selector.

    Selectors: ``identity[:dim]``, ``unitary:<matrix file>``,
    ``depolarizing:<p>``, ``dephasing:<p>``, ``amplitude-damping:<gamma>`` and
    ``file:<channel file>``. The named noise channels are single-qubit.

    Args:
        name: the selector.
        dim: expected channel dimension; also the identity's default dim.

    Raises:
        WrongDimensionError: the channel does not act on ``dim``.
    """
    kind, _, argument = name.partition(":")
    if kind == "identity":
        phi = identity_channel(int(argument) if argument else dim or 2)
    elif kind == "unitary":
        phi = unitary_channel(load_matrix(argument))
    elif kind == "depolarizing":
        phi = depolarizing_channel(float(argument))
    elif kind == "dephasing":
        phi = dephasing_channel(float(argument))
    elif kind == "amplitude-damping":
        phi = amplitude_damping_channel(float(argument))
    elif kind == "file":
        phi = load_channel(argument)
    else:
        raise ValueError(f"Unknown channel selector {name!r}")
    if dim is not None and phi.dim != dim:
        raise WrongDimensionError(
            f"Channel {name!r} acts on dim {phi.dim}, expected {dim}"
        )
    return phi
