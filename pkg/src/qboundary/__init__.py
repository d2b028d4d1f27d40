"""qboundary: boundary geometry of bipartite quantum states.

Constructs the families of separable, void, extrapolated, classical and
near-boundary states, and certifies every claim numerically: entanglement by
the Peres partial-transpose test, distillability by a single-copy witness,
and classicality by dephasing invariance.
"""

from ._kernel import KERNEL_NAME, USING_COMPILED
from .discord import (
    ClassicalityStatus,
    ClassicalityVerdict,
    classical_form,
    classify,
    dephase,
    depolarize_classify,
    epsilon_discordant,
    is_classical_wrt_basis,
)
from .entanglement import (
    CanonicalFrame,
    DistillationWitness,
    EntanglementCertificate,
    GBRegion,
    PTVerdict,
    ZeroDiagonalWitness,
    canonical_frame,
    distill_witness_theta,
    epsilon_entangled_from_void,
    gurvits_barnum,
    partial_transpose,
    peres_check,
    zero_diagonal_witness,
)
from .experiments import Report, catalogue, certify_report, run_experiment
from .geometry import (
    BoundaryPoint,
    StateLine,
    epsilon_mix,
    find_boundary,
    line_state,
    void_degree,
)
from .linalg import (
    SpectralDecomposition,
    hermitian_eig,
    is_psd,
    tensor,
    trace_distance,
    trace_norm,
)
from .states import (
    ClassicalForm,
    DensityMatrix,
    HermitianOperator,
    basis_ket,
    bell_state,
    bipartition,
    cq_state,
    maximally_mixed,
    nine_qutrit_states,
    nine_state_mixture,
    partial_trace,
    pseudo_pure,
    realize_classical,
    swap_subsystems,
    thermal_n,
    thermal_qubit,
    thermal_weights,
    werner,
    zero_plus_mixture,
)
from .stateio import StateFile, load_basis, load_state, parse_state_file, save_basis, save_state

__version__ = "0.1.0"

__all__ = [
    "BoundaryPoint",
    "CanonicalFrame",
    "ClassicalForm",
    "ClassicalityStatus",
    "ClassicalityVerdict",
    "DensityMatrix",
    "DistillationWitness",
    "EntanglementCertificate",
    "GBRegion",
    "HermitianOperator",
    "KERNEL_NAME",
    "PTVerdict",
    "Report",
    "SpectralDecomposition",
    "StateFile",
    "StateLine",
    "USING_COMPILED",
    "ZeroDiagonalWitness",
    "basis_ket",
    "bell_state",
    "bipartition",
    "canonical_frame",
    "catalogue",
    "certify_report",
    "classical_form",
    "classify",
    "cq_state",
    "dephase",
    "depolarize_classify",
    "distill_witness_theta",
    "epsilon_discordant",
    "epsilon_entangled_from_void",
    "epsilon_mix",
    "find_boundary",
    "gurvits_barnum",
    "hermitian_eig",
    "is_classical_wrt_basis",
    "is_psd",
    "line_state",
    "load_basis",
    "load_state",
    "maximally_mixed",
    "nine_qutrit_states",
    "nine_state_mixture",
    "parse_state_file",
    "partial_trace",
    "partial_transpose",
    "peres_check",
    "pseudo_pure",
    "realize_classical",
    "run_experiment",
    "save_basis",
    "save_state",
    "swap_subsystems",
    "tensor",
    "thermal_n",
    "thermal_qubit",
    "thermal_weights",
    "trace_distance",
    "trace_norm",
    "void_degree",
    "werner",
    "zero_diagonal_witness",
    "zero_plus_mixture",
]
