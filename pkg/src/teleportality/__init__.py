"""Teleportation fidelity and multipartite entanglement under noisy channels."""

from .channels import (
    ChannelParams,
    KrausSet,
    apply_channel,
    gc_kraus,
    identity_channel,
    tensor_channels,
    validate_completeness,
)
from .entanglement import (
    concurrence_mixed,
    concurrence_of_marginal,
    concurrence_pure,
    concurrence_resource_kraus,
    four_tangle_closed,
    four_tangle_def,
    four_tangle_max,
    three_tangle_def,
    three_tangle_kraus,
)
from .fidelity import (
    BellIndex,
    FidelityResult,
    cond_ft,
    f_acac_closed,
    f_gc_closed,
    f_gcgc_closed,
    f_max_from_rho,
    f_max_kraus,
    f_nonint,
    simulate_protocol_mc,
    singlet_fraction,
    threshold_condition_3q,
)
from .linalg import hermitian_eig, kron, partial_trace, psd_sqrt
from .scan import (
    ScanConfig,
    TriadRecord,
    ghz_vs_w,
    scan_3q,
    table1_rows,
    table2_rows,
    triads,
    verify,
)
from .states import (
    ResourceParams,
    evolve_3q,
    evolve_4q,
    reduced_resource,
    resource_state,
)

__all__ = [
    "BellIndex",
    "ChannelParams",
    "FidelityResult",
    "KrausSet",
    "ResourceParams",
    "ScanConfig",
    "TriadRecord",
    "apply_channel",
    "concurrence_mixed",
    "concurrence_of_marginal",
    "concurrence_pure",
    "concurrence_resource_kraus",
    "cond_ft",
    "evolve_3q",
    "evolve_4q",
    "f_acac_closed",
    "f_gc_closed",
    "f_gcgc_closed",
    "f_max_from_rho",
    "f_max_kraus",
    "f_nonint",
    "four_tangle_closed",
    "four_tangle_def",
    "four_tangle_max",
    "gc_kraus",
    "ghz_vs_w",
    "hermitian_eig",
    "identity_channel",
    "kron",
    "partial_trace",
    "psd_sqrt",
    "reduced_resource",
    "resource_state",
    "scan_3q",
    "simulate_protocol_mc",
    "singlet_fraction",
    "table1_rows",
    "table2_rows",
    "tensor_channels",
    "three_tangle_def",
    "three_tangle_kraus",
    "threshold_condition_3q",
    "triads",
    "validate_completeness",
    "verify",
]

__version__ = "0.1.0"
