"""
Correlation balance for a family of pure three-mode Gaussian states.

Builds the states from their photon numbers, computes Gaussian entropies,
entanglement of formation and discord, evolves them through lossy thermal
channels, and checks the balance relations that tie those measures together.
"""

from .correlations import (
    CorrelationReport,
    balance_delta,
    balance_delta_kw,
    eof_argument,
    full_report,
    gaussian_discord,
    gaussian_eof,
    report_from_cm,
)
from .noise import ChannelParams, asymptotic_cm, evolve_cm, separability_time
from .states import (
    CouplingParams,
    ReductionParams,
    TripartiteParams,
    build_cm,
    photon_numbers,
    reduce,
    reduction_params,
)
from .symplectic import (
    CovMat,
    SymplecticSpectrum,
    TwoModeInvariants,
    UnphysicalStateError,
    entropy_fn,
    is_entangled,
    partial_trace,
    single_mode_entropy,
    symplectic_spectrum,
    two_mode_entropy,
    two_mode_invariants,
)

__version__ = "0.1.0"
