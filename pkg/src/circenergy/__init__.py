"""Graph energy of circulant graphs via Dirichlet-kernel closed forms.

The package computes the energy (sum of absolute eigenvalues) of the
circulant graphs C(1,gamma; n) and of the complete graph minus a
Hamilton cycle, three independent ways:

* closed forms built from exact evaluations of the Dirichlet kernel at
  rational multiples of 2*pi (``closed_form``),
* direct summation of the circulant cosine spectrum (``spectrum``),
* a dense cyclic Jacobi eigensolver on the adjacency matrix
  (``jacobi``), with a compiled core and a pure-Python fallback.

The sweep and cli modules tabulate energies over parameter ranges and
cross-check the closed forms against the spectral oracles.
"""

__version__ = "0.1.0"

from .closed_form import (
    circulant_energy,
    corollary_vertex_count,
    cos_sum_root_fractions,
    cos_sum_roots,
    energy_c1_2,
    energy_c1_gamma,
    energy_corollary,
    energy_knh_closed,
    is_hyperenergetic,
)
from .jacobi import JACOBI_BACKEND, jacobi_eigenvalues
from .kernel import (
    RationalAngle,
    dirichlet_eval,
    dirichlet_partial_sum,
    sum_odd_indexed_kernels,
)
from .spectrum import (
    CirculantSpec,
    EnergyReport,
    Spectrum,
    build_adjacency,
    circulant_eigenvalues,
    energy_direct,
    energy_matrix,
    kn_energy,
    knh_adjacency,
    knh_eigenvalues,
    knh_energy_direct,
)
from .sweep import (
    SweepConfig,
    SweepRow,
    VerifyFailure,
    VerifySummary,
    relative_spread,
    run_config,
    run_gamma_sweep,
    run_knh_sweep,
    run_n_sweep,
    run_verify_grid,
)

__all__ = [
    "__version__",
    "RationalAngle",
    "dirichlet_eval",
    "dirichlet_partial_sum",
    "sum_odd_indexed_kernels",
    "JACOBI_BACKEND",
    "jacobi_eigenvalues",
    "CirculantSpec",
    "Spectrum",
    "EnergyReport",
    "kn_energy",
    "circulant_eigenvalues",
    "energy_direct",
    "build_adjacency",
    "knh_adjacency",
    "energy_matrix",
    "knh_eigenvalues",
    "knh_energy_direct",
    "energy_c1_2",
    "energy_c1_gamma",
    "circulant_energy",
    "corollary_vertex_count",
    "energy_corollary",
    "energy_knh_closed",
    "cos_sum_root_fractions",
    "cos_sum_roots",
    "is_hyperenergetic",
    "SweepRow",
    "SweepConfig",
    "VerifyFailure",
    "VerifySummary",
    "run_n_sweep",
    "run_gamma_sweep",
    "run_knh_sweep",
    "run_verify_grid",
    "run_config",
    "relative_spread",
]
