"""Thermal entanglement of a spin-1/2 x spin-S Heisenberg exchange cell.

Builds the two-site exchange Hamiltonian, forms Gibbs states at any
temperature, tests them for entanglement with the partial-transpose
criterion, and quantifies the entanglement as the Hilbert-Schmidt distance
to the separable state reached at the entanglement temperature.
"""

from .entanglement import (
    NEGATIVITY_TOL,
    EntanglementReport,
    boundary_distance_oracle,
    critical_temperature,
    evaluate_point,
    hs_entanglement,
    negativity,
    partial_transpose,
    ppt_critical_temperature_bisection,
    ppt_min_eigenvalue,
    ppt_spectrum_closed_form,
    separable_boundary_scan,
    sweep_reports,
    thermal_family_scan,
    xxx_qubit_critical_temperature,
)
from .linalg import (
    DimensionError,
    NotHermitianError,
    SpectralDecomposition,
    hermitian_eigendecompose,
    hermitian_function,
    hermiticity_defect,
    hs_norm_distance,
    kron,
)
from .model import (
    BETA_OVERFLOW,
    GibbsClosedForm,
    SpinSystem,
    ThermalState,
    analytic_spectrum,
    build_hamiltonian,
    closed_form_entries,
    gibbs_state,
    partition_function,
    pattern_matrix,
)
from .spin import SpinOperators, make_spin_operators, spin_dimension

__version__ = "0.1.0"

__all__ = [
    "BETA_OVERFLOW",
    "DimensionError",
    "EntanglementReport",
    "GibbsClosedForm",
    "NEGATIVITY_TOL",
    "NotHermitianError",
    "SpectralDecomposition",
    "SpinOperators",
    "SpinSystem",
    "ThermalState",
    "analytic_spectrum",
    "boundary_distance_oracle",
    "build_hamiltonian",
    "closed_form_entries",
    "critical_temperature",
    "evaluate_point",
    "gibbs_state",
    "hermitian_eigendecompose",
    "hermitian_function",
    "hermiticity_defect",
    "hs_entanglement",
    "hs_norm_distance",
    "kron",
    "make_spin_operators",
    "negativity",
    "partial_transpose",
    "partition_function",
    "pattern_matrix",
    "ppt_critical_temperature_bisection",
    "ppt_min_eigenvalue",
    "ppt_spectrum_closed_form",
    "separable_boundary_scan",
    "spin_dimension",
    "sweep_reports",
    "thermal_family_scan",
    "xxx_qubit_critical_temperature",
    "__version__",
]
