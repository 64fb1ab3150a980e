"""Hellinger-type lower bound on the transport cost for PSD observables."""

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.optimize import minimize_scalar

from quantumwasserstein.errors import ObservableNotPsdError
from quantumwasserstein.states.common import (
    EIGENVALUE_CLAMP,
    DensityMatrix,
    ObservableSet,
    require_same_dim,
)


class HellingerBoundInput(BaseModel):
    """Second moments α = tr(Σ A_j² ω) and β = tr(Σ A_j² ρ)."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    beta: float

    @field_validator("alpha", "beta")
    @classmethod
    def _clamp(cls, value: float) -> float:
        if -EIGENVALUE_CLAMP <= value < 0:
            return 0.0
        if value < 0:
            raise ValueError(f"Second moment {value:.3e} is negative")
        return value

    @property
    def bound(self) -> float:
        """2((α+β)/2 − √(αβ)); α + β when either moment vanishes."""
        if self.alpha == 0 or self.beta == 0:
            return self.alpha + self.beta
        return 2 * ((self.alpha + self.beta) / 2 - np.sqrt(self.alpha * self.beta))


def energy(rho: DensityMatrix, a: ObservableSet) -> float:
    """Σ_j tr(A_j ρ A_j)."""
    require_same_dim(rho, a)
    return float(sum(np.trace(obs @ rho.entries @ obs).real for obs in a.arrays))


def hellinger_inputs(
    rho: DensityMatrix, omega: DensityMatrix, a: ObservableSet
) -> HellingerBoundInput:
    require_same_dim(rho, omega, a)
    moment = a.second_moment
    return HellingerBoundInput(
        alpha=float(np.trace(moment @ omega.entries).real),
        beta=float(np.trace(moment @ rho.entries).real),
    )


def hellinger_lower_bound(
    rho: DensityMatrix, omega: DensityMatrix, a: ObservableSet
) -> float:
    """Lower bound on tr(ΠC) over all couplings, valid for PSD observables.

    Raises:
        ObservableNotPsdError: some A_j has an eigenvalue below −1e-10.
    """
    for index, obs in enumerate(a.observables):
        minimum = float(obs.eigenvalues[0])
        if minimum < -EIGENVALUE_CLAMP:
            raise ObservableNotPsdError(
                f"Observable {index} has eigenvalue {minimum:.3e}; the bound "
                "needs positive semidefinite observables"
            )
    return hellinger_inputs(rho, omega, a).bound


def tangent_bound(alpha: float, beta: float, s: float) -> float:
    """(1 − √s)(α − β/√s), the bound obtained from the tangent at s > 0."""
    root = np.sqrt(s)
    return float((1 - root) * (alpha - beta / root))


def best_tangent_bound(alpha: float, beta: float) -> float:
    """Maximize tangent_bound over s by golden-section search in log s."""
    result = minimize_scalar(
        lambda u: -tangent_bound(alpha, beta, np.exp(u)),
        bracket=(-1.0, 1.0),
        method="golden",
    )
    return float(-result.fun)
