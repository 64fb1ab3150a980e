from quantumwasserstein.complexity.channels import (
    ChannelSpec,
    amplitude_damping_channel,
    apply_channel,
    compose,
    dephasing_channel,
    depolarizing_channel,
    dump_channel,
    identity_channel,
    load_channel,
    random_channel,
    resolve_channel,
    tensor,
    unitary_channel,
)
from quantumwasserstein.complexity.optimize import (
    ComplexityResult,
    RestartOutcome,
    wasserstein_complexity,
)
from quantumwasserstein.complexity.reports import (
    SubadditivityReport,
    subadditivity_report,
    tensor_subadditivity_report,
)

__all__ = [
    "ChannelSpec",
    "apply_channel",
    "identity_channel",
    "unitary_channel",
    "depolarizing_channel",
    "dephasing_channel",
    "amplitude_damping_channel",
    "random_channel",
    "compose",
    "tensor",
    "load_channel",
    "dump_channel",
    "resolve_channel",
    "ComplexityResult",
    "RestartOutcome",
    "wasserstein_complexity",
    "SubadditivityReport",
    "subadditivity_report",
    "tensor_subadditivity_report",
]
