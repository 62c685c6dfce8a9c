"""Multi-soliton solutions of the three-component coupled Sasa-Satsuma
equation via a reflectionless Riemann-Hilbert construction, with independent
verification through Lax-pair, PDE-residual, symmetry, and direct-scattering
checks."""

from .algebra import (
    ComplexMatrix,
    DimensionMismatchError,
    SingularMatrixError,
    adjoint,
    det,
    lu_solve,
    matmul,
)
from .lax import (
    FieldEvaluator,
    StencilSpec,
    build_Q,
    build_U,
    build_V,
    gauge_transform_and_cnls_residual,
    pde_residual_tccss,
    zero_curvature_residual,
)
from .report import GridSpec, ResidualReport
from .rhp import (
    PoleError,
    RHSolutionPair,
    build_rh_pair,
    check_symmetries,
    reconstruct_potential,
)
from .scattering import (
    DomainTooSmallError,
    HalfPlaneError,
    JostSolution,
    ZeroSearchError,
    integrate_jost,
    locate_spectral_zero,
    scattering_evolution_check,
    scattering_matrix,
)
from .soliton import (
    DegenerateSeedError,
    Family,
    FieldSample,
    KernelVectorSet,
    SpectrumConfig,
    SpectrumError,
    TypeISeed,
    TypeIISeed,
    breather_closed_form,
    breather_spectrum,
    build_M,
    build_vectors,
    eval_fields,
    make_evaluator,
    one_soliton_closed_form,
    one_soliton_spectrum,
    theta,
    two_soliton_closed_form,
    type1_N_soliton,
)

__version__ = "0.1.0"
