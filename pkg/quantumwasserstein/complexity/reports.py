"""Subadditivity checks of the Wasserstein complexity.

Both sides are heuristic maxima, so a negative slack points at an optimizer
shortfall and is reported, never raised.
"""

import logging

from pydantic import BaseModel, ConfigDict

from quantumwasserstein.complexity.channels import (
    ChannelSpec,
    compose,
    identity_channel,
    tensor,
)
from quantumwasserstein.complexity.optimize import wasserstein_complexity
from quantumwasserstein.errors import DimensionMismatchError
from quantumwasserstein.states.common import ObservableSet
from quantumwasserstein.transport.common import SolverConfig

_logger = logging.getLogger("quantumwasserstein.complexity")

SLACK_WARNING = -5e-4


class SubadditivityReport(BaseModel):
    """C_W of two parts and of their combination, with
    slack = parts − combined."""

    model_config = ConfigDict(frozen=True)

    first: float
    second: float
    combined: float

    @property
    def slack(self) -> float:
        return self.first + self.second - self.combined

    @property
    def warning(self) -> bool:
        return self.slack < SLACK_WARNING


def _report(first: float, second: float, combined: float, what: str):
    report = SubadditivityReport(first=first, second=second, combined=combined)
    if report.warning:
        _logger.warning(
            f"{what} slack {report.slack:.3e} is negative; "
            "increase restarts or evaluations"
        )
    return report


def subadditivity_report(
    phi1: ChannelSpec,
    phi2: ChannelSpec,
    a: ObservableSet,
    restarts: int = 16,
    cfg: SolverConfig = None,
    **options,
) -> SubadditivityReport:
    """C_W(Φ_1) + C_W(Φ_2) against C_W(Φ_2∘Φ_1).

    Extra keyword arguments go to wasserstein_complexity.
    """
    if phi1.dim != phi2.dim:
        raise DimensionMismatchError(
            f"Channels act on dims {phi1.dim} and {phi2.dim}"
        )
    return _report(
        wasserstein_complexity(phi1, a, restarts, cfg, **options).value,
        wasserstein_complexity(phi2, a, restarts, cfg, **options).value,
        wasserstein_complexity(compose(phi2, phi1), a, restarts, cfg, **options).value,
        "Concatenation",
    )


def tensor_subadditivity_report(
    phi1: ChannelSpec,
    phi2: ChannelSpec,
    a: ObservableSet,
    restarts: int = 16,
    cfg: SolverConfig = None,
    **options,
) -> SubadditivityReport:
    """C_W(Φ_1⊗I) + C_W(I⊗Φ_2) against C_W(Φ_1⊗Φ_2).

    ``a`` lives on the product space.
    """
    left = tensor(phi1, identity_channel(phi2.dim))
    right = tensor(identity_channel(phi1.dim), phi2)
    return _report(
        wasserstein_complexity(left, a, restarts, cfg, **options).value,
        wasserstein_complexity(right, a, restarts, cfg, **options).value,
        wasserstein_complexity(tensor(phi1, phi2), a, restarts, cfg, **options).value,
        "Tensor",
    )
