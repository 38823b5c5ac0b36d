"""
Evolution through identical, uncorrelated lossy thermal channels.

Each mode is damped at rate γ toward a thermal state with `n_th` photons.
In the rescaled time ``τ = γt`` the covariance matrix interpolates
exponentially between its initial value and the thermal fixed point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import TripartiteParams, build_cm
from .symplectic import (
    ENTANGLEMENT_MARGIN,
    VACUUM,
    CovMat,
    partial_trace,
    symplectic_spectrum,
    two_mode_invariants,
)

__all__ = [
    "ChannelParams",
    "asymptotic_cm",
    "evolve_cm",
    "lambda_tilde_at",
    "separability_time",
    "TAU_MAX",
    "SCAN_STEP",
]

TAU_MAX = 20.0
SCAN_STEP = 0.01


@dataclass(frozen=True)
class ChannelParams:
    n_th: float = 0.0
    tau: float = 0.0

    def __post_init__(self):
        if self.n_th < 0:
            raise ValueError("n_th must be nonnegative")
        if self.tau < 0:
            raise ValueError("tau must be nonnegative")


def asymptotic_cm(n_modes: int, n_th: float, modes=()) -> CovMat:
    return CovMat((n_th + 0.5) * np.eye(2 * n_modes), tuple(modes))


def evolve_cm(sigma0: CovMat, ch: ChannelParams) -> CovMat:
    """
    ``Σ_τ = e^{-τ} Σ_0 + (1 - e^{-τ}) Σ_∞`` with ``Σ_∞ = (n_th + 1/2) 𝟙``.

    The identity matches the size of `sigma0`; all modes see the same channel,
    so evolving then reducing equals reducing then evolving.
    """
    if ch.tau < 0:
        raise ValueError("tau must be nonnegative")
    if ch.tau == 0:
        return sigma0
    decay = math.exp(-ch.tau)
    inf = ch.n_th + 0.5
    m = decay * sigma0.matrix + (1.0 - decay) * inf * np.eye(sigma0.matrix.shape[0])
    return CovMat(m, sigma0.modes)


def lambda_tilde_at(p: TripartiteParams, n_th: float, pair, tau: float) -> float:
    """Smallest partially-transposed symplectic eigenvalue of the evolved pair."""
    sigma = evolve_cm(build_cm(p), ChannelParams(n_th, tau))
    inv = two_mode_invariants(partial_trace(sigma, tuple(pair)))
    return symplectic_spectrum(inv).lambda_tilde_minus


def separability_time(
    p: TripartiteParams,
    n_th: float,
    pair,
    tau_max: float = TAU_MAX,
    step: float = SCAN_STEP,
    tol: float = 1e-10,
) -> float:
    """
    Earliest τ at which the reduction on `pair` stops being entangled.

    Returns 0 if the pair is separable at τ = 0, and ``math.inf`` if it is
    still entangled at `tau_max` (typical for ``n_th = 0``). The first
    crossing of ``λ̃₋(τ) = 1/2`` is bracketed by a forward scan with `step`
    and refined by bisection to `tol` in τ; no monotonicity is assumed.
    """
    if n_th < 0:
        raise ValueError("n_th must be nonnegative")
    sigma0 = build_cm(p)
    idx = []
    for lab in pair:
        i = sigma0.index(lab)
        idx += [2 * i, 2 * i + 1]
    s0 = sigma0.matrix[np.ix_(idx, idx)]
    s_inf = (n_th + 0.5) * np.eye(4)

    def gap(tau):
        d = math.exp(-tau)
        inv = two_mode_invariants(d * s0 + (1.0 - d) * s_inf)
        return symplectic_spectrum(inv).lambda_tilde_minus - VACUUM

    if gap(0.0) >= -ENTANGLEMENT_MARGIN:
        return 0.0
    lo = 0.0
    n_steps = int(math.ceil(tau_max / step))
    for i in range(1, n_steps + 1):
        hi = min(i * step, tau_max)
        if gap(hi) >= 0.0:
            break
        lo = hi
    else:
        return math.inf
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if gap(mid) >= 0.0:
            hi = mid
        else:
            lo = mid
    return hi
